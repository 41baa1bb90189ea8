"""N-of-M sparse codes: construction, decoding and comparison.

An N-of-M code is a binary vector of length M with exactly N ones. It is
the single pattern currency of this package: addresses, data words and
address-decoder outputs are all instances with different (N, M). Codes are
stored as sorted index tuples rather than dense vectors because N is much
smaller than M in every configuration of interest (11 of 256 is typical);
``to_dense`` converts when matrix math needs it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidCode

__all__ = [
    "NofMCode",
    "TieRule",
    "make_code",
    "random_code",
    "top_n_decode",
    "rank_by_value",
    "exact_match",
]


@dataclass(frozen=True)
class NofMCode:
    """Sparse binary vector: ``m`` positions with ``active`` indices set.

    Instances are immutable and safe to share between threads. Equality is
    structural: same length and same active set.
    """

    m: int
    active: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.active)

    def to_dense(self, dtype=np.float64) -> np.ndarray:
        dense = np.zeros(self.m, dtype=dtype)
        if self.active:
            dense[list(self.active)] = 1
        return dense

    def to_text(self) -> str:
        """Serialize as ``m:idx1,idx2,...`` with ascending indices."""
        return f"{self.m}:" + ",".join(str(i) for i in self.active)

    @classmethod
    def from_text(cls, text: str) -> "NofMCode":
        head, _, tail = text.partition(":")
        try:
            m = int(head)
            indices = [int(tok) for tok in tail.split(",") if tok != ""]
        except ValueError as exc:
            raise InvalidCode(f"unparsable code text {text!r}") from exc
        return make_code(indices, m)

    def __repr__(self) -> str:
        return f"NofMCode({self.to_text()!r})"


@dataclass(frozen=True)
class TieRule:
    """How ties among equal values (or equal spike times) are broken.

    ``lowest_index`` is fully deterministic and is the default everywhere;
    ``seeded(seed)`` breaks ties by a seeded random preference order, which
    better models analog hardware where exactly equal drives are unlikely.
    Both variants are reproducible.
    """

    kind: str = "lowest_index"
    seed: int = 0

    @classmethod
    def lowest_index(cls) -> "TieRule":
        return cls(kind="lowest_index")

    @classmethod
    def seeded(cls, seed: int) -> "TieRule":
        return cls(kind="seeded_random", seed=seed)

    def preference(self, count: int) -> np.ndarray:
        """Per-index preference keys; lower key wins ties."""
        if self.kind == "lowest_index":
            return np.arange(count)
        if self.kind == "seeded_random":
            return np.random.default_rng(self.seed).permutation(count)
        raise InvalidCode(f"unknown tie rule kind {self.kind!r}")


def make_code(active_indices: Iterable[int], m: int) -> NofMCode:
    """Build a code from explicit indices, validating the invariants."""
    indices = tuple(sorted(int(i) for i in active_indices))
    if m < 0:
        raise InvalidCode(f"negative length m={m}")
    if len(set(indices)) != len(indices):
        raise InvalidCode(f"duplicate index in {indices}")
    if indices and (indices[0] < 0 or indices[-1] >= m):
        raise InvalidCode(f"index out of range [0, {m}) in {indices}")
    return NofMCode(m=m, active=indices)


def random_code(n: int, m: int, rng: np.random.Generator) -> NofMCode:
    """Strict n-of-m code sampled uniformly without replacement.

    Identical generator state yields an identical code, bit for bit,
    across runs and platforms.
    """
    if n > m or n < 0:
        raise InvalidCode(f"cannot place {n} active bits in {m} positions")
    picked = rng.choice(m, size=n, replace=False)
    return NofMCode(m=m, active=tuple(sorted(int(i) for i in picked)))


def rank_by_value(values: np.ndarray, tie: TieRule) -> np.ndarray:
    """Indices of ``values`` sorted descending, ties broken by ``tie``."""
    values = np.asarray(values, dtype=np.float64)
    pref = tie.preference(values.shape[0])
    # lexsort: last key is primary
    return np.lexsort((pref, -values))


def top_n_decode(values: Sequence[float] | np.ndarray, n: int,
                 tie: TieRule = TieRule.lowest_index()) -> NofMCode:
    """Decode an analog vector to the strict n-of-M code of its n largest
    entries.

    Every value strictly above the cutoff is always included; ties at the
    cutoff are resolved by the tie rule. Invariant under any strictly
    increasing transform of ``values``.
    """
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 1 or values.shape[0] == 0:
        raise InvalidCode("values must be a non-empty vector")
    if n > values.shape[0]:
        raise InvalidCode(f"cannot select top {n} of {values.shape[0]} values")
    winners = rank_by_value(values, tie)[:n]
    return NofMCode(m=values.shape[0], active=tuple(sorted(int(i) for i in winners)))


def exact_match(a: NofMCode, b: NofMCode) -> bool:
    """True iff both length and active set are identical."""
    return a.m == b.m and a.active == b.active
