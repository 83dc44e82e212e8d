"""
Hecke-algebra checks for braid representations, and Temperley-Lieb quotients.

Hecke convention: generators satisfy ``(g - q)(g + 1) = 0`` and
``e = (g + 1) / (q + 1)`` is the idempotent onto the ``q``-eigenspace.  A
representation's generators are brought to this form by a scalar rescaling
read off from their spectrum, so ``q`` comes from the data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .braid import random_word
from .gybe import GybOperator, build_generator, distinct_values
from .linalg import DEFAULT_TOL, DomainError, InputError, Tolerance, as_cmatrix, eigenvalues, identity


@dataclass
class HeckeFit:
    lambda1: complex
    lambda2: complex
    q: complex
    rescale: complex
    residual: float


def fit_quadratic(a, tol: Tolerance = DEFAULT_TOL) -> HeckeFit:
    """Fit ``a`` to a Hecke generator up to scale.

    Of the two distinct eigenvalues, the one nearer the negative real axis is
    sent to ``-1`` by the rescaling; the other one lands on ``q``.
    """
    a = as_cmatrix(a)
    vals = distinct_values(eigenvalues(a, tol), Tolerance(abs=1e-6, rel=1e-6))
    if len(vals) != 2:
        raise DomainError(f"expected exactly two distinct eigenvalues, found {len(vals)}")
    # angular distance from the negative real axis
    lam_neg, lam_other = sorted(vals, key=lambda z: abs(np.angle(-z)))
    eye = identity(a.shape[0])
    residual = float(np.linalg.norm((a - lam_neg * eye) @ (a - lam_other * eye)))
    rescale = -1 / lam_neg
    return HeckeFit(lam_neg, lam_other, rescale * lam_other, rescale, residual)


def closed_form_eta(q: complex) -> complex:
    """Markov weight ``(1 - q^-2) / (1 + q^3)``; has a pole where ``q^3 = -1``."""
    return (1 - q**-2) / (1 + q**3)


@dataclass
class TraceReport:
    n: int
    tr_identity: complex
    symmetry_residual: float
    markov_residual: float
    eta: complex
    q: complex
    eta_observed: complex
    eta_singular: bool
    quadratic_residual: float

    def passed(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        return (
            tol.accepts(abs(self.tr_identity - 1))
            and tol.accepts(self.symmetry_residual)
            and tol.accepts(self.markov_residual)
            and not self.eta_singular
        )


def _words_matrices(gens: dict[int, np.ndarray], cap: int, dim: int):
    """Yield matrices of all freely reduced words up to length ``cap``."""
    frontier = [((), identity(dim))]
    yield frontier[0][1]
    for _ in range(cap):
        nxt = []
        for word, mat in frontier:
            for g, gm in gens.items():
                if word and word[-1] == -g:
                    continue
                m = mat @ gm
                nxt.append((word + (g,), m))
                yield m
        frontier = nxt


def markov_check(
    op: GybOperator,
    n: int,
    word_len_cap: int,
    tol: Tolerance = DEFAULT_TOL,
    eta: complex | None = None,
    pairs: int = 50,
    seed: int = 0,
) -> TraceReport:
    """Check the normalized trace of the representation against the Markov axioms.

    ``b`` ranges over every freely reduced word of length up to
    ``word_len_cap`` in ``g_1 .. g_{n-2}`` and their inverses.  ``eta``
    defaults to :func:`closed_form_eta` at the fitted ``q``.
    """
    if n < 3:
        raise InputError(f"need n >= 3, got {n}")
    dim = op.space_dim(n)
    fit = fit_quadratic(build_generator(op, n, 1), tol)
    q, s = fit.q, fit.rescale
    eye = identity(dim)
    g = {i: s * build_generator(op, n, i) for i in range(1, n)}
    g_inv = {i: build_generator(op, n, i, inverse=True) / s for i in range(1, n)}
    quad = max(float(np.linalg.norm((g[i] - q * eye) @ (g[i] + eye))) for i in g)

    def tr(x):
        return np.trace(x) / dim

    rng = np.random.default_rng(seed)
    letters = {**g, **{-i: m for i, m in g_inv.items()}}

    def word_matrix(w):
        out = eye
        for x in w.letters:
            out = out @ letters[x]
        return out

    sym = 0.0
    for _ in range(pairs):
        la, lb = (int(x) for x in rng.integers(0, word_len_cap + 1, size=2))
        a = word_matrix(random_word(n, la, int(rng.integers(2**32))))
        b = word_matrix(random_word(n, lb, int(rng.integers(2**32))))
        sym = max(sym, abs(tr(a @ b) - tr(b @ a)))

    e_last = (g[n - 1] + eye) / (q + 1)
    eta_obs = tr(e_last)
    singular = eta is None and abs(1 + q**3) <= 1e-9
    if eta is None:
        with np.errstate(all="ignore"):
            eta = closed_form_eta(q)
    lower = {i: g[i] for i in range(1, n - 1)} | {-i: g_inv[i] for i in range(1, n - 1)}
    markov = 0.0
    for b in _words_matrices(lower, word_len_cap, dim):
        diff = abs(tr(b @ e_last) - eta * tr(b))
        markov = max(markov, float(diff) if np.isfinite(diff) else np.inf)
    return TraceReport(n, tr(eye), float(sym), markov, complex(eta), q, complex(eta_obs), singular, quad)


# --- Temperley-Lieb ---------------------------------------------------------


def noncrossing_matchings(points: int):
    """All noncrossing perfect matchings of ``0..points-1`` as involution tuples."""
    if points % 2:
        return
    if points == 0:
        yield ()
        return
    # point 0 pairs with an odd point j; inside and outside match independently
    for j in range(1, points, 2):
        for inner in noncrossing_matchings(j - 1):
            for outer in noncrossing_matchings(points - j - 1):
                m = [0] * points
                m[0], m[j] = j, 0
                for a, b in enumerate(inner):
                    m[a + 1] = b + 1
                for a, b in enumerate(outer):
                    m[a + j + 1] = b + j + 1
                yield tuple(m)


def tl_diagrams(n: int) -> list[tuple[int, ...]]:
    """Planar ``n -> n`` diagrams.

    Point ``i < n`` is bottom vertex ``i``; point ``n + i`` is top vertex ``i``.
    Matchings are generated on the boundary read bottom left-to-right then top
    right-to-left, which is exactly the planarity condition.
    """
    def boundary_to_vertex(p):
        return p if p < n else n + (2 * n - 1 - p)

    out = []
    for m in noncrossing_matchings(2 * n):
        d = [0] * (2 * n)
        for p, r in enumerate(m):
            d[boundary_to_vertex(p)] = boundary_to_vertex(r)
        out.append(tuple(d))
    return out


def _closure_loops(a: tuple[int, ...], b: tuple[int, ...], n: int) -> int:
    """Number of loops in the Markov closure of ``a`` stacked on top of ``b``."""
    parent = list(range(4 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for p in range(2 * n):
        union(p, a[p])
        union(2 * n + p, 2 * n + b[p])
    for i in range(n):
        union(i, 2 * n + n + i)  # a bottom to b top
        union(2 * n + i, n + i)  # closure: b bottom to a top
    return len({find(x) for x in range(4 * n)})


def tl_gram(n: int, delta: float) -> np.ndarray:
    """Markov trace form ``tr(x y) = delta^(loops - n)`` on the diagram basis."""
    diagrams = tl_diagrams(n)
    size = len(diagrams)
    gram = np.empty((size, size))
    for i, j in itertools.product(range(size), repeat=2):
        gram[i, j] = delta ** (_closure_loops(diagrams[i], diagrams[j], n) - n)
    return gram


def tl_loop_parameter(ell: int) -> float:
    """Loop value ``q^{1/2} + q^{-1/2} = 2 cos(pi / ell)`` for ``q = e^{2 pi i / ell}``."""
    return 2 * np.cos(np.pi / ell)


def tl_quotient_dims(ell: int, n: int) -> list[int]:
    """Dimensions of ``TL_k / Ann(tr)`` for ``k = 1..n`` at ``q = e^{2 pi i / ell}``."""
    if ell < 3 or n < 1:
        raise InputError("need ell >= 3 and n >= 1")
    delta = tl_loop_parameter(ell)
    dims = []
    for k in range(1, n + 1):
        s = np.linalg.svd(tl_gram(k, delta), compute_uv=False)
        dims.append(int(np.sum(s > 1e-8 * s[0])))
    return dims


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
