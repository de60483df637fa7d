"""Seeded random matrices for property suites and tests."""

from __future__ import annotations

import random
from typing import Optional

from .canonical import NilpotentPartition, partitions
from .field import Field, Rationals
from .lu import default_seed
from .matrix import Matrix, block_diag


def rng_for(seed: Optional[int]) -> random.Random:
    return random.Random(default_seed() if seed is None else seed)


def random_element(field: Field, rng: random.Random, spread: int = 3):
    if isinstance(field, Rationals):
        return rng.randint(-spread, spread)
    return rng.randrange(field.characteristic)


def random_nonzero(field: Field, rng: random.Random, spread: int = 3):
    while True:
        x = random_element(field, rng, spread)
        if x != 0:
            return x


def random_matrix(field: Field, n: int, rng: random.Random, m: Optional[int] = None) -> Matrix:
    m = n if m is None else m
    return Matrix(field, [[random_element(field, rng) for _ in range(m)] for _ in range(n)])


def random_invertible(field: Field, n: int, rng: random.Random) -> Matrix:
    while True:
        M = random_matrix(field, n, rng)
        if M.rank() == n:
            return M


def random_singular(field: Field, n: int, rng: random.Random, rank: Optional[int] = None) -> Matrix:
    """``P D Q`` with P, Q random invertible and D diagonal of rank < n."""
    r = rng.randrange(n) if rank is None else rank
    if not 0 <= r < n:
        raise ValueError(f"rank must be in [0, {n}), got {r}")
    core = [random_nonzero(field, rng) for _ in range(r)] + [0] * (n - r)
    rng.shuffle(core)
    return random_invertible(field, n, rng) @ Matrix.diag(field, core) @ random_invertible(field, n, rng)


def random_partition(n: int, rng: random.Random) -> NilpotentPartition:
    return NilpotentPartition(rng.choice(list(partitions(n))))


def random_structured_singular(field: Field, n: int, rng: random.Random) -> Matrix:
    """Conjugate of ``Dg[J, A1]`` with J a random nilpotent Jordan matrix and A1 invertible.

    Reaches the Jordan-structure routes that diagonal cores rarely hit.
    """
    n0 = rng.randint(1, n)
    J = random_partition(n0, rng).jordan_matrix(field)
    core = block_diag(J, random_invertible(field, n - n0, rng)) if n0 < n else J
    S = random_invertible(field, n, rng)
    return S @ core @ S.inverse()
