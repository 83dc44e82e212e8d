"""
Bundled operators and fusion data.

JSON files in this directory are produced by ``python -m braidloc.fixtures.build``
from the constructors below; the loaders read the files.
"""

from __future__ import annotations

from importlib import resources

import numpy as np

from ..fusion import FusionData
from ..gybe import GybOperator

R_GYB31 = "r-gyb31.json"
RZWG_GYB32 = "rzwg-gyb32.json"
SL3_LEVEL3 = "sl3-level-3.json"


def path(name: str):
    return resources.files(__name__).joinpath(name)


def case_study_matrix() -> np.ndarray:
    """The 8x8 (3,1)-gYB operator, block diagonal in the first tensor factor.

    Both 4x4 blocks carry the global scalar ``-e^{-pi i/3}/sqrt(2)``; with the
    phase on the first block only, the (3,1)-gYBE fails (residual ~5.5).
    """
    z = np.exp(2j * np.pi / 8)
    zi = 1 / z
    upper = np.array([[zi, 0, -zi, 0], [0, z, 0, z], [z, 0, z, 0], [0, -zi, 0, zi]])
    lower = np.array([[z, 0, z, 0], [0, zi, 0, -zi], [-zi, 0, zi, 0], [0, z, 0, z]])
    r = np.zeros((8, 8), dtype=np.complex128)
    r[:4, :4] = upper
    r[4:, 4:] = lower
    return -np.exp(-1j * np.pi / 3) / np.sqrt(2) * r


def rzwg_matrix() -> np.ndarray:
    """``(1/sqrt 2) [[I, J], [-J, I]]`` with ``J`` the 4x4 anti-diagonal."""
    eye, j = np.eye(4), np.fliplr(np.eye(4))
    return np.block([[eye, j], [-j, eye]]).astype(np.complex128) / np.sqrt(2)


def sl2_path(ell: int) -> FusionData:
    """Fusion with the spin-1/2 object at ``q = e^{2 pi i/ell}``: the path graph A_{ell-1}."""
    rank = ell - 1
    nx = np.zeros((rank, rank), dtype=int)
    for i in range(rank - 1):
        nx[i, i + 1] = nx[i + 1, i] = 1
    return FusionData(rank, 0, nx, f"sl2-path-{ell}")


def load_case_study() -> GybOperator:
    return GybOperator.load(path(R_GYB31))


def load_rzwg() -> GybOperator:
    return GybOperator.load(path(RZWG_GYB32))


def load_sl3_level3() -> FusionData:
    return FusionData.load(path(SL3_LEVEL3))
