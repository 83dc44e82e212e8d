"""
(k, m)-generalized Yang-Baxter operators.

An operator ``c`` acts on ``V^{(x)k}`` with ``dim V = d``.  Generator ``i`` of
``B_n`` acts as ``c`` on tensor factors ``(i-1)m+1 .. (i-1)m+k`` of
``V^{(x)(k+m(n-2))}`` and as the identity elsewhere, so that the ``n-1``
generators tile the space exactly.  The ordinary Yang-Baxter equation is the
case ``(k, m) = (2, 1)``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from .braid import BraidWord, relator_instances
from .linalg import (
    DEFAULT_TOL,
    InputError,
    Tolerance,
    as_cmatrix,
    eigenvalues,
    identity,
    kron,
    matrix_from_json,
    matrix_to_json,
)


@dataclass(frozen=True, eq=False)
class GybOperator:
    k: int
    m: int
    d: int
    c: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.k < 2 or self.m < 1 or self.k <= self.m:
            raise InputError(f"need k >= 2, m >= 1 and k > m, got (k, m) = ({self.k}, {self.m})")
        if self.d < 2:
            raise InputError(f"local dimension must be >= 2, got {self.d}")
        c = as_cmatrix(self.c)
        size = self.d**self.k
        if c.shape != (size, size):
            raise InputError(f"operator must be {size}x{size} for d={self.d}, k={self.k}; got {c.shape}")
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    @cached_property
    def c_inv(self) -> np.ndarray:
        inv = np.linalg.inv(self.c)
        inv.setflags(write=False)
        return inv

    def space_dim(self, n: int) -> int:
        """Dimension of the space ``B_n`` acts on."""
        return self.d ** (self.k + self.m * (n - 2))

    @classmethod
    def from_json(cls, obj) -> "GybOperator":
        try:
            k, m, d, mat = int(obj["k"]), int(obj["m"]), int(obj["dim"]), obj["matrix"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed gYB descriptor: {exc}") from exc
        return cls(k, m, d, matrix_from_json(mat))

    def to_json(self) -> dict:
        return {"k": self.k, "m": self.m, "dim": self.d, "matrix": matrix_to_json(self.c)}

    @classmethod
    def load(cls, path) -> "GybOperator":
        try:
            obj = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: not valid JSON: {exc}") from exc
        return cls.from_json(obj)


def check_gybe(op: GybOperator, tol: Tolerance = DEFAULT_TOL) -> float:
    """Frobenius residual of ``c1 c2 c1 - c2 c1 c2`` on ``V^{(x)(k+m)}``.

    Compare against ``tol`` with :meth:`Tolerance.accepts`.
    """
    im = identity(op.d**op.m)
    c1 = kron(op.c, im)
    c2 = kron(im, op.c)
    return float(np.linalg.norm(c1 @ c2 @ c1 - c2 @ c1 @ c2))


def far_distances(op: GybOperator) -> list[int]:
    # distances beyond this act on disjoint factors and commute trivially
    return [delta for delta in range(2, op.k) if delta * op.m < op.k]


def check_far_commutativity(op: GybOperator, tol: Tolerance = DEFAULT_TOL) -> list[tuple[int, float]]:
    out = []
    for delta in far_distances(op):
        pad = identity(op.d ** (op.m * delta))
        left = kron(op.c, pad)
        right = kron(pad, op.c)
        out.append((delta, float(np.linalg.norm(left @ right - right @ left))))
    return out


def build_generator(op: GybOperator, n: int, i: int, inverse: bool = False) -> np.ndarray:
    if n < 2 or not 1 <= i <= n - 1:
        raise InputError(f"generator index {i} out of range for B_{n}")
    core = op.c_inv if inverse else op.c
    before = op.d ** (op.m * (i - 1))
    after = op.d ** (op.m * (n - i - 1))
    return kron(identity(before), core, identity(after))


class _GeneratorCache:
    def __init__(self, op: GybOperator, n: int):
        self.op, self.n = op, n
        self._mats: dict[int, np.ndarray] = {}

    def __getitem__(self, letter: int) -> np.ndarray:
        if letter not in self._mats:
            self._mats[letter] = build_generator(self.op, self.n, abs(letter), inverse=letter < 0)
        return self._mats[letter]


def represent(op: GybOperator, w: BraidWord, _cache: _GeneratorCache | None = None) -> np.ndarray:
    gens = _cache if _cache is not None else _GeneratorCache(op, w.strands)
    out = identity(op.space_dim(w.strands))
    for g in w.letters:
        out = out @ gens[g]
    return out


def check_braid_relations(op: GybOperator, n: int, tol: Tolerance = DEFAULT_TOL) -> tuple[bool, float]:
    """Evaluate every relator of ``B_n``; return (all within tol, worst residual)."""
    gens = _GeneratorCache(op, n)
    eye = identity(op.space_dim(n))
    worst = 0.0
    for w in relator_instances(n):
        worst = max(worst, float(np.linalg.norm(represent(op, w, gens) - eye)))
    return tol.accepts(worst, np.sqrt(eye.shape[0])), worst


@dataclass
class SpectrumClass:
    eigenvalues: np.ndarray
    chi: complex | None
    matches_ratio: bool
    theta: float


def distinct_values(values, tol: Tolerance = DEFAULT_TOL) -> list[complex]:
    """Cluster complex numbers lying within ``tol`` of each other."""
    out: list[complex] = []
    for z in values:
        z = complex(z)
        if not any(tol.accepts(abs(z - u), abs(u)) for u in out):
            out.append(z)
    return out


def classify_spectrum(eigs, theta: float, tol: Tolerance = DEFAULT_TOL) -> SpectrumClass:
    """Test whether the spectrum has the form ``{-chi, chi * e^{i theta}}``."""
    eigs = np.asarray(list(eigs), dtype=np.complex128)
    if eigs.size == 0:
        raise InputError("empty eigenvalue list")
    vals = distinct_values(eigs, tol)
    target = -np.exp(1j * theta)
    chi = None
    if len(vals) == 2:
        a, b = vals
        if abs(a) > 0 and tol.accepts(abs(b / a - target), 1.0):
            chi = -a
        elif abs(b) > 0 and tol.accepts(abs(a / b - target), 1.0):
            chi = -b
    return SpectrumClass(eigs, chi, chi is not None, theta)


def projective_order(a, max_n: int, tol: Tolerance = DEFAULT_TOL) -> int | None:
    """Smallest ``N <= max_n`` with ``a**N`` a scalar multiple of the identity."""
    a = as_cmatrix(a)
    dim = a.shape[0]
    eye = identity(dim)
    power = eye
    for n in range(1, max_n + 1):
        power = power @ a
        scalar = np.trace(power) / dim
        if tol.accepts(float(np.linalg.norm(power - scalar * eye)), np.sqrt(dim)):
            return n
    return None


@dataclass
class ClosureReport:
    closed: bool
    size: int
    budget_exhausted: bool


def projective_key(a: np.ndarray) -> bytes:
    """Phase-normalized, rounded form of ``a`` used for hashing up to scalars."""
    flat = a.ravel()
    threshold = 0.5 / np.sqrt(a.shape[0])
    idx = int(np.argmax(np.abs(flat) > threshold))
    normed = flat * (abs(flat[idx]) / flat[idx])
    # +0.0 turns -0.0 into 0.0 so the bytes agree
    return (np.round(normed, 6) + 0.0).tobytes()


def _projectively_equal(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    inner = np.vdot(a, b)
    if abs(inner) == 0:
        return False
    phase = inner / abs(inner)
    return float(np.linalg.norm(a * phase - b)) <= tol


def image_closure(op: GybOperator, n: int, budget: int) -> ClosureReport:
    """Breadth-first enumeration of the projective image of ``B_n``."""
    if n < 2 or budget < 1:
        raise InputError("need n >= 2 and budget >= 1")
    gens = [build_generator(op, n, i, inverse=s) for i in range(1, n) for s in (False, True)]
    start = identity(op.space_dim(n))
    buckets: dict[bytes, list[np.ndarray]] = {projective_key(start): [start]}
    size = 1
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x @ g
            bucket = buckets.setdefault(projective_key(y), [])
            if any(_projectively_equal(z, y, 1e-8) for z in bucket):
                continue
            bucket.append(y)
            size += 1
            if size > budget:
                return ClosureReport(False, size, True)
            queue.append(y)
    return ClosureReport(True, size, False)


def operator_spectrum(op: GybOperator, n: int = 3, i: int = 1, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    return eigenvalues(build_generator(op, n, i), tol)
