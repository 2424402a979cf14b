"""Seeded instance families for verification and the acceptance suite."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .geometry import SiteSet, lattice_sites, random_sites, ring_sites

# Mean of r^2 for r uniform on [0.5, 2.0].
_TG_MEAN_R2 = (2.0**3 - 0.5**3) / (3 * 1.5)


@dataclass(frozen=True)
class Instance:
    name: str
    sites: SiteSet


def _box_for_degree(n: int, mean_degree: float, area_per_neighbor: float) -> float:
    return math.sqrt(area_per_neighbor * n / mean_degree)


def udg_instance(n: int, mean_degree: float, seed: int) -> Instance:
    box = _box_for_degree(max(n, 1), mean_degree, 4 * math.pi)
    return Instance(f"udg(n={n},deg={mean_degree:.3g},seed={seed})", random_sites(n, box, (1.0, 1.0), seed))


def tg_instance(n: int, mean_degree: float, seed: int) -> Instance:
    box = _box_for_degree(max(n, 1), mean_degree, math.pi * _TG_MEAN_R2)
    return Instance(f"tg(n={n},deg={mean_degree:.3g},seed={seed})", random_sites(n, box, (0.5, 2.0), seed))


def udg_corpus(
    count: int, seed: int = 0, n_range=(10, 2000), degree_range=(0.02, 30.0)
) -> Iterator[Instance]:
    """Random unit disk graphs, mean degree log-uniform over ``degree_range``."""
    for i in range(count):
        rng = np.random.default_rng([seed, i])
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        deg = float(np.exp(rng.uniform(*np.log(degree_range))))
        yield udg_instance(n, deg, seed * 1_000_003 + i)


def girth_corpus(count: int, seed: int = 0, n_max: int = 1000) -> Iterator[Instance]:
    """Mix of random sparse unit disk graphs, thinned square/hex lattices and rings.

    Lattices are where girths 4, 6 and longer show up, rings give one long
    cycle; random instances at this density mostly have girth 3 or no cycle.
    """
    for i in range(count):
        rng = np.random.default_rng([seed, i, 1])
        sub = seed * 1_000_003 + i
        if i % 6 == 5:
            k = int(rng.integers(4, min(n_max, 200) + 1))
            yield Instance(f"ring(k={k},seed={sub})", ring_sites(k, seed=sub))
        elif i % 3 == 2:
            kind = "square" if (i // 6) % 2 else "hex"
            per = 1 if kind == "square" else 2
            side = int(rng.integers(2, int(math.sqrt(n_max / per)) + 1))
            keep = float(rng.uniform(0.7, 1.0))
            S = lattice_sites(side, side, kind, keep=keep, seed=sub)
            yield Instance(f"lattice({kind},{side}x{side},keep={keep:.2f},seed={sub})", S)
        else:
            n = int(rng.integers(10, n_max + 1))
            deg = float(np.exp(rng.uniform(np.log(0.3), np.log(8.0))))
            yield udg_instance(n, deg, sub)


def tg_corpus(
    count: int, seed: int = 0, n_range=(10, 2000), degree_range=(0.02, 20.0)
) -> Iterator[Instance]:
    """Random transmission graphs, radii uniform on [0.5, 2.0]."""
    for i in range(count):
        rng = np.random.default_rng([seed, i, 2])
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        deg = float(np.exp(rng.uniform(*np.log(degree_range))))
        yield tg_instance(n, deg, seed * 1_000_003 + i)


def dense_square(n: int, seed: int) -> Instance:
    """n unit-radius sites in the unit square: every pair is adjacent."""
    return Instance(f"dense(n={n},seed={seed})", random_sites(n, 1.0, (1.0, 1.0), seed))


@dataclass(frozen=True)
class CorpusConfig:
    """Which seeded family to draw and how many instances."""

    family: str = "udg"
    count: int = 500
    seed: int = 1

    def instances(self) -> Iterator[Instance]:
        try:
            make = _FAMILIES[self.family]
        except KeyError:
            raise ValueError(f"unknown corpus family {self.family!r}") from None
        return make(self.count, self.seed)


_FAMILIES = {"udg": udg_corpus, "girth": girth_corpus, "tg": tg_corpus}
