"""
Quaternions, elements of H (x) H (x) H, and their image under the 2-dimensional
complex representation of H.

The element ``r`` built here maps to the 8x8 (3,1)-gYB operator shipped as
``fixtures/r-gyb31.json``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .linalg import identity, kron

BASIS = ("1", "i", "j", "k")

# mult[(x, y)] = (sign, z) with x*y = sign * z
_MULT = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


@dataclass(frozen=True)
class Quat:
    a: float = 0.0
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0

    def coeffs(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other: "Quat") -> "Quat":
        return Quat(*(x + y for x, y in zip(self.coeffs(), other.coeffs())))

    def __mul__(self, other: "Quat") -> "Quat":
        return quat_mul(self, other)

    @classmethod
    def unit(cls, name: str) -> "Quat":
        vals = [0.0] * 4
        vals[BASIS.index(name)] = 1.0
        return cls(*vals)


def quat_mul(x: Quat, y: Quat) -> Quat:
    out = [0.0] * 4
    for (bx, cx), (by, cy) in itertools.product(zip(BASIS, x.coeffs()), zip(BASIS, y.coeffs())):
        sign, z = _MULT[(bx, by)]
        out[BASIS.index(z)] += sign * cx * cy
    return Quat(*out)


def basis_product(x: str, y: str) -> tuple[int, str]:
    return _MULT[(x, y)]


@dataclass
class QuatTensor3:
    """Complex combination of basis triples ``e1 (x) e2 (x) e3``."""

    coeffs: dict[tuple[str, str, str], complex] = field(default_factory=dict)

    def coefficient(self, triple) -> complex:
        return self.coeffs.get(tuple(triple), 0.0)

    def __add__(self, other: "QuatTensor3") -> "QuatTensor3":
        out = dict(self.coeffs)
        for t, v in other.coeffs.items():
            out[t] = out.get(t, 0.0) + v
        return QuatTensor3(out)

    def scale(self, s: complex) -> "QuatTensor3":
        return QuatTensor3({t: s * v for t, v in self.coeffs.items()})


def _pure_triple(factors) -> tuple[complex, tuple[str, str, str]]:
    """Reduce a triple of basis words (e.g. ``("1", "ij", "1")``) to sign and basis triple."""
    sign = 1
    out = []
    for word in factors:
        acc = "1"
        for letter in word:
            s, acc = basis_product(acc, letter)
            sign *= s
        out.append(acc)
    return sign, tuple(out)


# Terms of r = -e^{-pi i/3}/2 * (1 + i(x)j(x)i + 1(x)(ij)(x)1 + i(x)i(x)i).
# The last term is printed as j(x)i(x)i in the source material; with it the
# element is not unitary (it commutes with i(x)j(x)i), while i(x)i(x)i gives
# exactly the 8x8 operator of the fixture.
R_TERMS = (("1", "1", "1"), ("i", "j", "i"), ("1", "ij", "1"), ("i", "i", "i"))
R_TERMS_AS_PRINTED = (("1", "1", "1"), ("i", "j", "i"), ("1", "ij", "1"), ("j", "i", "i"))
R_SCALAR = -np.exp(-1j * np.pi / 3) / 2


def _element(terms, scalar) -> QuatTensor3:
    t = QuatTensor3()
    for factors in terms:
        sign, triple = _pure_triple(factors)
        t = t + QuatTensor3({triple: sign * scalar})
    return t


def build_r() -> QuatTensor3:
    return _element(R_TERMS, R_SCALAR)


def build_r_as_printed() -> QuatTensor3:
    """The variant with ``j (x) i (x) i``; kept to document why it is rejected."""
    return _element(R_TERMS_AS_PRINTED, R_SCALAR)


# i -> sign_i * diag(i, -i), j -> sign_j * [[0, 1], [-1, 0]], optionally transposed.
_I = np.array([[1j, 0], [0, -1j]])
_J = np.array([[0, 1], [-1, 0]], dtype=np.complex128)


def rep2_images(sign_i: int = 1, sign_j: int = 1, transpose: bool = False) -> dict[str, np.ndarray]:
    """Images of the basis under one of the 8 sign/transpose conventions.

    Transposing reverses products, so the transposed variants send ``k`` to
    ``(I J)^T`` and are anti-homomorphisms; they are enumerated only to pin the
    convention that reproduces the fixture.
    """
    i, j = sign_i * _I, sign_j * _J
    k = i @ j
    if transpose:
        i, j, k = i.T, j.T, k.T
    return {"1": identity(2), "i": i, "j": j, "k": k}


# Locked-in convention: the only one of the 8 that reproduces the fixture and
# is multiplicative (see tests/test_quaternion.py).
REP2 = rep2_images(1, 1, False)


def rep2(x: Quat, images: dict[str, np.ndarray] = REP2) -> np.ndarray:
    return sum(coef * images[b] for b, coef in zip(BASIS, x.coeffs()))


def emit_matrix(t: QuatTensor3, images: dict[str, np.ndarray] = REP2) -> np.ndarray:
    out = np.zeros((8, 8), dtype=np.complex128)
    for (e1, e2, e3), coef in t.coeffs.items():
        out += coef * kron(images[e1], images[e2], images[e3])
    return out


def conventions():
    for sign_i, sign_j, transpose in itertools.product((1, -1), (1, -1), (False, True)):
        yield (sign_i, sign_j, transpose), rep2_images(sign_i, sign_j, transpose)
