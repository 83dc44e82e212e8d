"""
Fusion-matrix analysis: hom-space dimensions of tensor powers, period and
stabilization, inclusion matrices, Perron-Frobenius integrality verdicts, and
a bounded search for multiplicity vectors of a generalized localization.

Convention: ``nx[i, j] = dim Hom(X_j, X (x) X_i)``, so the hom dimensions
evolve as ``h_{n+1} = nx.T @ h_n`` starting from the unit coordinate vector.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import NamedTuple

import numpy as np
import sympy

from .linalg import DEFAULT_TOL, DomainError, InputError, Tolerance, check_irreducible, pf_eigendata


@dataclass(frozen=True, eq=False)
class FusionData:
    rank: int
    unit: int
    nx: np.ndarray = field(repr=False)
    label: str = ""

    def __post_init__(self):
        nx = np.asarray(self.nx)
        if nx.shape != (self.rank, self.rank):
            raise InputError(f"fusion matrix must be {self.rank}x{self.rank}, got {nx.shape}")
        if not np.all(np.equal(np.mod(nx, 1), 0)) or np.any(nx < 0):
            raise InputError("fusion matrix must have nonnegative integer entries")
        if not 0 <= self.unit < self.rank:
            raise InputError(f"unit index {self.unit} out of range")
        nx = nx.astype(np.int64)
        nx.setflags(write=False)
        object.__setattr__(self, "nx", nx)
        check_irreducible(nx)

    @classmethod
    def from_json(cls, obj) -> "FusionData":
        try:
            return cls(int(obj["rank"]), int(obj["unit"]), np.array(obj["nx"]), str(obj.get("label", "")))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, (InputError, DomainError)):
                raise
            raise InputError(f"malformed fusion file: {exc}") from exc

    def to_json(self) -> dict:
        return {"rank": self.rank, "unit": self.unit, "label": self.label, "nx": self.nx.tolist()}

    @classmethod
    def load(cls, path) -> "FusionData":
        try:
            obj = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: not valid JSON: {exc}") from exc
        return cls.from_json(obj)

    def relabel(self, perm) -> "FusionData":
        """Rename simple object ``i`` to ``perm[i]``."""
        perm = list(perm)
        inv = np.argsort(perm)
        return FusionData(self.rank, perm[self.unit], self.nx[np.ix_(inv, inv)], self.label)


def hom_dims(f: FusionData, n: int) -> np.ndarray:
    """Entry ``i`` is ``dim Hom(X_i, X^{(x)n})``, as exact Python integers."""
    if n < 0:
        raise InputError("tensor power must be nonnegative")
    nt = f.nx.T.astype(object)
    h = np.zeros(f.rank, dtype=object)
    h[f.unit] = 1
    for _ in range(n):
        h = nt.dot(h)
    return h


def period_and_stabilization(f: FusionData) -> tuple[int, int]:
    horizon = f.rank * (f.rank + 1)
    h = hom_dims(f, 0)
    seen = h != 0
    period = None
    stab = 0 if seen.all() else None
    nt = f.nx.T.astype(object)
    for n in range(1, horizon + 1):
        h = nt.dot(h)
        if period is None and h[f.unit] != 0:
            period = n
        if stab is None:
            seen |= h != 0
            if seen.all():
                stab = n
        if period is not None and stab is not None:
            return period, stab
    raise DomainError(f"X does not tensor-generate within {horizon} steps")


class InclusionMatrix(NamedTuple):
    matrix: np.ndarray
    rows: tuple[int, ...]
    cols: tuple[int, ...]


def inclusion_matrix(f: FusionData, n: int) -> InclusionMatrix:
    """Multiplicity matrix of ``End(X^n)`` inside ``End(X^{n+1})``.

    Rows index simple objects occurring in ``X^n``, columns those in ``X^{n+1}``.
    """
    if n < 0:
        raise InputError("n must be nonnegative")
    rows = tuple(int(i) for i in np.flatnonzero(hom_dims(f, n) != 0))
    cols = tuple(int(j) for j in np.flatnonzero(hom_dims(f, n + 1) != 0))
    return InclusionMatrix(f.nx[np.ix_(rows, cols)], rows, cols)


def cycle_matrix(f: FusionData) -> np.ndarray:
    """Product ``G_l G_{l+1} ... G_{l+p-1}``: inclusion of ``End(X^l)`` in ``End(X^{l+p})``."""
    p, l = period_and_stabilization(f)
    g = inclusion_matrix(f, l).matrix.astype(object)
    for n in range(l + 1, l + p):
        g = g.dot(inclusion_matrix(f, n).matrix.astype(object))
    return g.astype(np.int64)


def is_exact_eigenvalue(m, value: int) -> bool:
    """Whether the integer ``value`` is an eigenvalue of the integer matrix ``m``, exactly."""
    mat = sympy.Matrix(np.asarray(m, dtype=object).tolist())
    return (mat - value * sympy.eye(mat.rows)).rank() < mat.rows


def integral_verdict(t: float, m, tol: Tolerance = DEFAULT_TOL) -> bool:
    r = round(t)
    if not tol.accepts(abs(t - r), abs(t)):
        return False
    return is_exact_eigenvalue(m, r)


@dataclass
class ObstructionReport:
    fpdim: float
    fpdim_sq: float
    period: int
    stabilization: int
    big_lambda: float
    big_lambda_integral: bool
    lambda_integral: bool
    lambda_sq_integral: bool
    verdict: bool


def obstruction_test(f: FusionData, tol: Tolerance = DEFAULT_TOL) -> ObstructionReport:
    lam, _ = pf_eigendata(f.nx)
    p, l = period_and_stabilization(f)
    g = cycle_matrix(f)
    big_lam, _ = pf_eigendata(g)
    nx_sq = f.nx.astype(object).dot(f.nx.astype(object))
    lam_int = integral_verdict(lam, f.nx, tol)
    lam_sq_int = integral_verdict(lam * lam, nx_sq, tol)
    return ObstructionReport(
        fpdim=lam,
        fpdim_sq=lam * lam,
        period=p,
        stabilization=l,
        big_lambda=big_lam,
        big_lambda_integral=integral_verdict(big_lam, g, tol),
        lambda_integral=lam_int,
        lambda_sq_integral=lam_sq_int,
        verdict=lam_sq_int,
    )


@dataclass
class MultiplicityWindow:
    w: int
    m: int
    start: int
    vectors: list[tuple[int, ...]]
    feasible: bool
    # "feasible", "infeasible" (no positive rational solution) or "exhausted" (none within bound)
    status: str = "exhausted"


def verify_window(f: FusionData, window: MultiplicityWindow) -> bool:
    """Re-check ``w^m a_n = G_n a_{n+1}`` with plain integer arithmetic."""
    scale = window.w**window.m
    for offset, (a, b) in enumerate(zip(window.vectors, window.vectors[1:])):
        g = inclusion_matrix(f, window.start + offset).matrix
        if len(a) != g.shape[0] or len(b) != g.shape[1]:
            return False
        for i, row in enumerate(g.tolist()):
            if scale * a[i] != sum(int(x) * int(y) for x, y in zip(row, b)):
                return False
        if any(x <= 0 for x in a) or any(x <= 0 for x in b):
            return False
    return True


def _stacked_nullspace(mats, scale) -> list[sympy.Matrix]:
    sizes = [mats[0].shape[0]] + [g.shape[1] for g in mats]
    offsets = np.concatenate([[0], np.cumsum(sizes)])
    system = sympy.zeros(sum(g.shape[0] for g in mats), int(offsets[-1]))
    row = 0
    for n, g in enumerate(mats):
        for i in range(g.shape[0]):
            system[row + i, int(offsets[n]) + i] = scale
            for j in range(g.shape[1]):
                system[row + i, int(offsets[n + 1]) + j] = -int(g[i, j])
        row += g.shape[0]
    return system.nullspace(), sizes


def _solve_step(g: np.ndarray, rhs: list[int], bound: int):
    """All positive integer ``x`` with ``g @ x == rhs`` and entries ``<= bound``."""
    rows, cols = g.shape
    aug = [[Fraction(int(v)) for v in g[i]] + [Fraction(rhs[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        lead = aug[r][c]
        aug[r] = [v / lead for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][cols] != 0 for i in range(r, rows)):
        return
    free = [c for c in range(cols) if c not in pivots]
    for values in itertools.product(range(1, bound + 1), repeat=len(free)):
        x = [Fraction(0)] * cols
        for c, v in zip(free, values):
            x[c] = Fraction(v)
        ok = True
        for i, c in enumerate(pivots):
            val = aug[i][cols] - sum(aug[i][fc] * x[fc] for fc in free)
            if val.denominator != 1 or not 1 <= val <= bound:
                ok = False
                break
            x[c] = val
        if ok:
            yield tuple(int(v) for v in x)


def _seed_candidates(basis: list[sympy.Matrix], size: int, bound: int):
    """Integer seeds in the projection of the solution space onto the first block.

    The projection is spanned by the rows of its reduced echelon form, and the
    coefficient of row ``i`` equals the seed's entry at pivot column ``i``.
    Entries at non-pivot columns depend only on pivots to their left, so
    enumerating pivot values in order yields seeds in lexicographic order.
    """
    if not basis:
        return
    proj = sympy.Matrix.hstack(*[v[:size, 0] for v in basis])
    rref, pivots = proj.T.rref()
    rows = [[Fraction(int(x.p), int(x.q)) for x in rref.row(i)] for i in range(len(pivots))]

    def rec(col, coeffs, vec):
        if col == size:
            yield tuple(int(x) for x in vec)
            return
        if col in pivots:
            for v in range(1, bound + 1):
                yield from rec(col + 1, coeffs + [v], vec + [Fraction(v)])
            return
        x = sum((c * rows[i][col] for i, c in enumerate(coeffs)), Fraction(0))
        if x.denominator == 1 and 1 <= x <= bound:
            yield from rec(col + 1, coeffs, vec + [x])

    yield from rec(0, [], [])


def multiplicity_search(
    f: FusionData, w: int, m: int, window: int = 4, bound: int = 64
) -> MultiplicityWindow:
    """Search for positive integer ``a_l, ..., a_{l+window}`` with ``w^m a_n = G_n a_{n+1}``.

    ``l`` is the stabilization index.  Seeds ``a_l`` are enumerated in
    lexicographic order and propagated forward with exact rational solving;
    every entry of every vector is kept in ``[1, bound]``.
    """
    if w < 2 or m < 1 or window < 2:
        raise InputError("need w >= 2, m >= 1 and window >= 2")
    _, l = period_and_stabilization(f)
    mats = [inclusion_matrix(f, n).matrix for n in range(l, l + window)]
    scale = w**m
    basis, sizes = _stacked_nullspace(mats, scale)

    def result(vectors, status):
        return MultiplicityWindow(w, m, l, vectors, status == "feasible", status)

    if not basis:
        return result([], "infeasible")
    if len(basis) == 1:
        v = basis[0]
        if not (all(x > 0 for x in v) or all(x < 0 for x in v)):
            return result([], "infeasible")

    def extend(chain):
        if len(chain) == window + 1:
            return chain
        g = mats[len(chain) - 1]
        rhs = [scale * x for x in chain[-1]]
        for nxt in _solve_step(g, rhs, bound):
            found = extend(chain + [nxt])
            if found:
                return found
        return None

    for seed in _seed_candidates(basis, sizes[0], bound):
        chain = extend([seed])
        if chain:
            return result(chain, "feasible")
    return result([], "exhausted")
