"""
Quasi-braided vector spaces truncated at a finite level.

The associator ``a[p, q]`` is a matrix on ``V^{(x)(p+1+q)}`` representing
``(A^p (x) A) (x) A^q -> A^p (x) (A (x) A^q)``.  Only the associators up to the
truncation level are stored; boundary ones (``p == 0`` or ``q == 0``) are the
identity.  Matrices compose right-to-left: ``x @ y`` applies ``y`` first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from .braid import BraidWord
from .linalg import (
    DEFAULT_TOL,
    InputError,
    Tolerance,
    as_cmatrix,
    identity,
    kron,
    matrix_from_json,
    matrix_to_json,
)


class TruncationError(LookupError):
    """An associator beyond the stored truncation level was requested."""


DEFAULT_LEVEL = 6


@dataclass(eq=False)
class QuasiBraidedSpace:
    d: int
    c: np.ndarray
    level: int = DEFAULT_LEVEL
    assoc: dict[tuple[int, int], np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        if self.d < 2:
            raise InputError(f"local dimension must be >= 2, got {self.d}")
        if self.level < 1:
            raise InputError(f"truncation level must be >= 1, got {self.level}")
        self.c = as_cmatrix(self.c)
        if self.c.shape != (self.d**2, self.d**2):
            raise InputError(f"c must be {self.d**2}x{self.d**2}, got {self.c.shape}")
        checked = {}
        for (p, q), mat in self.assoc.items():
            if not (0 <= p <= self.level and 0 <= q <= self.level):
                raise InputError(f"associator ({p}, {q}) outside truncation level {self.level}")
            mat = as_cmatrix(mat)
            size = self.d ** (p + 1 + q)
            if mat.shape != (size, size):
                raise InputError(f"associator ({p}, {q}) must be {size}x{size}, got {mat.shape}")
            if p == 0 or q == 0:
                if not np.allclose(mat, np.eye(size)):
                    raise InputError(f"boundary associator ({p}, {q}) must be the identity")
                continue
            if np.linalg.matrix_rank(mat) < size:
                raise InputError(f"associator ({p}, {q}) is singular")
            checked[(p, q)] = mat
        self.assoc = checked
        self._inv: dict[tuple[int, int], np.ndarray] = {}

    def a(self, p: int, q: int) -> np.ndarray:
        if p < 0 or q < 0:
            raise InputError("associator indices must be nonnegative")
        if p > self.level or q > self.level:
            raise TruncationError(f"associator ({p}, {q}) beyond truncation level {self.level}")
        if p == 0 or q == 0 or (p, q) not in self.assoc:
            return identity(self.d ** (p + 1 + q))
        return self.assoc[(p, q)]

    def a_inv(self, p: int, q: int) -> np.ndarray:
        if (p, q) not in self._inv:
            self._inv[(p, q)] = np.linalg.inv(self.a(p, q))
        return self._inv[(p, q)]

    def eye(self, power: int) -> np.ndarray:
        return identity(self.d**power)

    @classmethod
    def scalar(cls, d: int, c, omega, level: int = DEFAULT_LEVEL) -> "QuasiBraidedSpace":
        """Associators ``a[p, q] = omega(p, q) * I`` for a scalar function ``omega``."""
        assoc = {
            (p, q): complex(omega(p, q)) * identity(d ** (p + 1 + q))
            for p in range(1, level + 1)
            for q in range(1, level + 1)
        }
        return cls(d, c, level, assoc)

    @classmethod
    def from_json(cls, obj) -> "QuasiBraidedSpace":
        try:
            d, level = int(obj["dim"]), int(obj["level"])
            c = matrix_from_json(obj["c"])
            assoc = {(int(e["p"]), int(e["q"])): matrix_from_json(e["matrix"]) for e in obj.get("assoc", [])}
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed quasi descriptor: {exc}") from exc
        return cls(d, c, level, assoc)

    def to_json(self) -> dict:
        return {
            "dim": self.d,
            "level": self.level,
            "c": matrix_to_json(self.c),
            "assoc": [{"p": p, "q": q, "matrix": matrix_to_json(m)} for (p, q), m in sorted(self.assoc.items())],
        }

    @classmethod
    def load(cls, path) -> "QuasiBraidedSpace":
        try:
            obj = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: not valid JSON: {exc}") from exc
        return cls.from_json(obj)


def build_a_n(qbs: QuasiBraidedSpace, r: int, p: int, q: int) -> np.ndarray:
    """The associator ``(A^p (x) A^r) (x) A^q -> A^p (x) (A^r (x) A^q)``.

    Defined by the pentagon
        a^r[p, q] = (I_p (x) a[r-1, q])^-1  a^{r-1}[p, 1+q]  a[p+r-1, q]  (a^{r-1}[p, 1] (x) I_q)^-1
    with ``a^1 = a``.
    """
    if r < 1:
        raise InputError(f"r must be >= 1, got {r}")

    @lru_cache(maxsize=None)
    def rec(r: int, p: int, q: int) -> np.ndarray:
        if r == 1:
            return qbs.a(p, q)
        left = kron(qbs.eye(p), qbs.a_inv(r - 1, q))
        right = np.linalg.inv(kron(rec(r - 1, p, 1), qbs.eye(q)))
        return left @ rec(r - 1, p, 1 + q) @ qbs.a(p + r - 1, q) @ right

    return rec(r, p, q)


def pentagon_a2(qbs: QuasiBraidedSpace, p: int, q: int) -> np.ndarray:
    left = kron(qbs.eye(p), qbs.a_inv(1, q))
    right = kron(qbs.a_inv(p, 1), qbs.eye(q))
    return left @ qbs.a(p, 1 + q) @ qbs.a(p + 1, q) @ right


def check_axiom1(qbs: QuasiBraidedSpace, tol: Tolerance = DEFAULT_TOL) -> float:
    """Residual of the a-conjugated braid relation on ``V^{(x)3}``."""
    a, a_inv = qbs.a(1, 1), qbs.a_inv(1, 1)
    c1 = kron(qbs.c, qbs.eye(1))
    c2 = kron(qbs.eye(1), qbs.c)
    lhs = a @ c1 @ a_inv @ c2 @ a @ c1
    rhs = c2 @ a @ c1 @ a_inv @ c2 @ a
    return float(np.linalg.norm(lhs - rhs))


def check_axiom2(qbs: QuasiBraidedSpace, p: int, q: int, tol: Tolerance = DEFAULT_TOL) -> float:
    """Residual of ``a^2[p, q]`` commuting with ``c`` in the middle."""
    a2 = pentagon_a2(qbs, p, q)
    mid = kron(qbs.eye(p), qbs.c, qbs.eye(q))
    return float(np.linalg.norm(a2 @ mid - mid @ a2))


def quasi_generator(qbs: QuasiBraidedSpace, n: int, i: int, inverse: bool = False) -> np.ndarray:
    if n < 2 or not 1 <= i <= n - 1:
        raise InputError(f"generator index {i} out of range for B_{n}")
    if n - 2 > qbs.level:
        raise TruncationError(f"B_{n} needs truncation level >= {n - 2}, have {qbs.level}")
    tail = qbs.eye(n - i - 1)
    conj = kron(qbs.a(i - 1, 1), tail)
    conj_inv = kron(qbs.a_inv(i - 1, 1), tail)
    core = np.linalg.inv(qbs.c) if inverse else qbs.c
    return conj_inv @ kron(qbs.eye(i - 1), core, tail) @ conj


def quasi_represent(qbs: QuasiBraidedSpace, w: BraidWord) -> np.ndarray:
    n = w.strands
    if n - 2 > qbs.level:
        raise TruncationError(f"B_{n} needs truncation level >= {n - 2}, have {qbs.level}")
    gens: dict[int, np.ndarray] = {}
    out = qbs.eye(n)
    for g in w.letters:
        if g not in gens:
            gens[g] = quasi_generator(qbs, n, abs(g), inverse=g < 0)
        out = out @ gens[g]
    return out


def axiom2_instances(qbs: QuasiBraidedSpace) -> list[tuple[int, int]]:
    """All (p, q) at which the pentagon ``a^2`` is computable within the level."""
    return [(p, q) for p in range(qbs.level) for q in range(qbs.level)]
