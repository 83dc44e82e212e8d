"""
Dense complex linear algebra used by every other module.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``; the
helpers here add shape checks, a tolerance convention and a JSON wire format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from pathlib import Path

import numpy as np


class InputError(ValueError):
    """Malformed input: wrong shape, bad file contents, index out of range."""


class DomainError(ValueError):
    """Input is well formed but outside the mathematical domain of the operation."""


class NumericalError(ArithmeticError):
    """An iterative numerical method failed to converge."""


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative bound on a Frobenius-norm residual.

    A residual ``r`` measured against a quantity of size ``scale`` is accepted
    when ``r <= abs + rel * scale``.
    """

    abs: float = 1e-9
    rel: float = 1e-9

    def __post_init__(self):
        if self.abs < 0 or self.rel < 0:
            raise InputError("tolerances must be nonnegative")
        if self.abs == 0 and self.rel == 0:
            raise InputError("at least one of abs, rel must be positive")

    def bound(self, scale: float = 0.0) -> float:
        return self.abs + self.rel * scale

    def accepts(self, residual: float, scale: float = 0.0) -> bool:
        return bool(residual <= self.bound(scale))

    @classmethod
    def of(cls, value: float) -> "Tolerance":
        """Absolute-only tolerance, the common case in tests and the CLI."""
        return cls(abs=value, rel=0.0)


DEFAULT_TOL = Tolerance()


def as_cmatrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise InputError(f"expected a nonempty 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InputError("matrix has non-finite entries")
    return m


def _square(a) -> np.ndarray:
    m = as_cmatrix(a)
    if m.shape[0] != m.shape[1]:
        raise InputError(f"expected a square matrix, got shape {m.shape}")
    return m


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def kron(a, b, *more) -> np.ndarray:
    """Kronecker product; block ``(i, j)`` of the result is ``a[i, j] * b``."""
    return reduce(np.kron, (as_cmatrix(x) for x in more), np.kron(as_cmatrix(a), as_cmatrix(b)))


def matmul(a, b) -> np.ndarray:
    a, b = as_cmatrix(a), as_cmatrix(b)
    if a.shape[1] != b.shape[0]:
        raise InputError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def dagger(a) -> np.ndarray:
    return as_cmatrix(a).conj().T


def frobenius_distance(a, b) -> float:
    a, b = as_cmatrix(a), as_cmatrix(b)
    if a.shape != b.shape:
        raise InputError(f"shape mismatch {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def is_unitary(a, tol: Tolerance = DEFAULT_TOL) -> bool:
    a = _square(a)
    eye = identity(a.shape[0])
    scale = np.sqrt(a.shape[0])
    return tol.accepts(frobenius_distance(a @ dagger(a), eye), scale) and tol.accepts(
        frobenius_distance(dagger(a) @ a, eye), scale
    )


def eigenvalues(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Eigenvalues with multiplicity.

    Only guaranteed to ``tol.abs`` for normal matrices; every operator checked
    in this package is unitary or a product of unitaries.
    """
    a = _square(a)
    try:
        return np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigenvalue iteration did not converge for {a.shape} matrix: {exc}") from exc


def matrix_power(a, n: int) -> np.ndarray:
    return np.linalg.matrix_power(_square(a), n)


def check_irreducible(m: np.ndarray) -> None:
    n = m.shape[0]
    adj = m > 0
    for graph, direction in ((adj, "reachable from"), (adj.T, "able to reach")):
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in np.flatnonzero(graph[i]):
                if j not in seen:
                    seen.add(int(j))
                    stack.append(int(j))
        if len(seen) < n:
            missing = min(set(range(n)) - seen)
            raise DomainError(f"matrix is reducible: index {missing} is not {direction} index 0")


def pf_eigendata(m, threshold: float = 1e-12, max_iter: int = 10**6) -> tuple[float, np.ndarray]:
    """Perron-Frobenius eigenvalue and positive unit-sum eigenvector.

    Power iteration runs on ``I + m`` so that periodic (imprimitive) matrices
    still converge.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise InputError(f"expected a square matrix, got shape {m.shape}")
    if np.any(m < 0) or not np.all(np.equal(np.mod(m, 1), 0)):
        raise InputError("expected a nonnegative integer matrix")
    m = m.astype(float)
    check_irreducible(m)

    shifted = m + np.eye(m.shape[0])
    v = np.full(m.shape[0], 1.0 / m.shape[0])
    for _ in range(max_iter):
        w = shifted @ v
        w /= w.sum()
        if np.max(np.abs(w - v)) < threshold:
            v = w
            break
        v = w
    else:
        raise NumericalError(f"power iteration did not reach {threshold} in {max_iter} steps")
    lam = float((m @ v).sum() / v.sum())
    return lam, v


def matrix_to_json(a) -> dict:
    a = as_cmatrix(a)
    return {
        "rows": a.shape[0],
        "cols": a.shape[1],
        "entries": [[float(z.real), float(z.imag)] for z in a.ravel()],
    }


def matrix_from_json(obj) -> np.ndarray:
    try:
        rows, cols, entries = int(obj["rows"]), int(obj["cols"]), obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed matrix object: {exc}") from exc
    if rows < 1 or cols < 1:
        raise InputError("rows and cols must be positive")
    if len(entries) != rows * cols:
        raise InputError(f"expected {rows * cols} entries, got {len(entries)}")
    try:
        flat = np.array([complex(float(re), float(im)) for re, im in entries], dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InputError(f"entries must be [re, im] pairs: {exc}") from exc
    return as_cmatrix(flat.reshape(rows, cols))


def load_matrix(path) -> np.ndarray:
    return matrix_from_json(json.loads(Path(path).read_text()))


def save_matrix(a, path) -> None:
    Path(path).write_text(json.dumps(matrix_to_json(a)))
