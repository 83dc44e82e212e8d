"""Braid words and the relators of the standard presentation of B_n."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import InputError


@dataclass(frozen=True)
class BraidWord:
    """A word in sigma_1..sigma_{n-1}; letter ``g`` is sigma_g, ``-g`` its inverse."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        if self.strands < 2:
            raise InputError(f"a braid needs at least 2 strands, got {self.strands}")
        for g in self.letters:
            if g == 0 or abs(g) >= self.strands:
                raise InputError(f"letter {g} is not a generator of B_{self.strands}")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise InputError("cannot concatenate braids on different numbers of strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    @classmethod
    def parse(cls, text: str, strands: int) -> "BraidWord":
        """Parse the CLI syntax: space-separated signed integers, e.g. ``"1 2 -1"``."""
        try:
            letters = tuple(int(tok) for tok in text.split())
        except ValueError as exc:
            raise InputError(f"malformed braid word {text!r}") from exc
        return cls(strands, letters)

    def __str__(self):
        return " ".join(str(g) for g in self.letters)


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[int] = []
    for g in w.letters:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return BraidWord(w.strands, tuple(out))


def relator_instances(n: int) -> list[BraidWord]:
    """Relator words of B_n, each of which must evaluate to the identity.

    Far commutation ``s_i s_j s_i^-1 s_j^-1`` for ``j - i >= 2`` and the braid
    relation ``s_i s_{i+1} s_i s_{i+1}^-1 s_i^-1 s_{i+1}^-1``.
    """
    if n < 2:
        raise InputError(f"B_n needs n >= 2, got {n}")
    words = []
    for i in range(1, n - 1):
        words.append(BraidWord(n, (i, i + 1, i, -(i + 1), -i, -(i + 1))))
    for i in range(1, n):
        for j in range(i + 2, n):
            words.append(BraidWord(n, (i, j, -i, -j)))
    return words


def random_word(n: int, length: int, seed: int) -> BraidWord:
    if n < 2:
        raise InputError(f"B_n needs n >= 2, got {n}")
    if length < 0:
        raise InputError("word length must be nonnegative")
    rng = np.random.default_rng(seed)
    gens = rng.integers(1, n, size=length)
    signs = rng.choice([-1, 1], size=length)
    return BraidWord(n, tuple(int(g * s) for g, s in zip(gens, signs)))
