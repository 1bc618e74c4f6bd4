"""Brute-force Hilbert depth of J/I for squarefree monomial ideals.

A squarefree monomial is identified with its support, a bit mask over the
variables. alpha_j counts masks of size j lying in J but not in I, and

    beta_k^q = sum_{j<=k} (-1)^(k-j) C(q-j, k-j) alpha_j.

hdepth(J/I) is the largest q for which every beta_k^q (0 <= k <= q) is
nonnegative. This module enumerates all 2^N masks on purpose: it is the
independent oracle for the bipartite criterion and should stay simple.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .combinatorics import binomial

DEFAULT_ENUM_CAP = 24
# masks materialized per numpy block
_CHUNK_BITS = 20


class IdealError(ValueError):
    """Base class for malformed ideal pairs."""


class ContainmentError(IdealError):
    """I is not contained in J."""


class EqualIdealsError(IdealError):
    """I = J, so J/I is zero and its Hilbert depth is undefined."""


class EnumerationCapError(IdealError):
    """Too many variables for exhaustive enumeration."""


class IdealFileError(IdealError):
    """The ideal-pair JSON document is malformed."""


def enum_cap() -> int:
    raw = os.environ.get("HDEPTH_ENUM_CAP")
    return int(raw) if raw else DEFAULT_ENUM_CAP


def _minimalize(gens: Iterable[int]) -> tuple[int, ...]:
    """Drop generators divisible by another generator."""
    unique = sorted(set(gens), key=lambda g: (bin(g).count("1"), g))
    kept: list[int] = []
    for g in unique:
        if not any(k & g == k for k in kept):
            kept.append(g)
    return tuple(kept)


def _divisible_by_some(mask: int, gens: Sequence[int]) -> bool:
    return any(g & mask == g for g in gens)


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class SqfreeIdealPair:
    """Squarefree ideals I (strictly) inside J, given by generator masks.

    An empty generator tuple is the zero ideal; a generator with empty
    support (mask 0) is the whole ring.
    """

    num_vars: int
    gens_I: tuple[int, ...]
    gens_J: tuple[int, ...]

    def __post_init__(self):
        if self.num_vars < 0:
            raise IdealError("num_vars must be nonnegative")
        limit = 1 << self.num_vars
        for g in (*self.gens_I, *self.gens_J):
            if not 0 <= g < limit:
                raise IdealError(f"generator mask {g:#x} uses variables beyond {self.num_vars}")
        gi, gj = _minimalize(self.gens_I), _minimalize(self.gens_J)
        object.__setattr__(self, "gens_I", gi)
        object.__setattr__(self, "gens_J", gj)
        bad = [g for g in gi if not _divisible_by_some(g, gj)]
        if bad:
            raise ContainmentError(
                f"generator {_support(bad[0])} of I does not lie in J"
            )
        if all(_divisible_by_some(g, gi) for g in gj):
            raise EqualIdealsError("I = J; the quotient J/I is zero")

    @classmethod
    def from_supports(cls, num_vars: int, gens_I, gens_J) -> "SqfreeIdealPair":
        return cls(num_vars, tuple(mask_of(g) for g in gens_I),
                   tuple(mask_of(g) for g in gens_J))


def _support(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _membership(masks: np.ndarray, gens: Sequence[int]) -> np.ndarray:
    inside = np.zeros(masks.shape, dtype=bool)
    for g in gens:
        inside |= (masks & g) == g
    return inside


def alpha_vector(pair: SqfreeIdealPair, cap: Optional[int] = None) -> list[int]:
    """Count squarefree monomials of J \\ I by degree, enumerating every subset."""
    cap = enum_cap() if cap is None else cap
    n = pair.num_vars
    if n > cap:
        raise EnumerationCapError(f"{n} variables exceeds the enumeration cap {cap}")
    counts = np.zeros(n + 1, dtype=np.int64)
    total = 1 << n
    step = 1 << min(n, _CHUNK_BITS)
    for start in range(0, total, step):
        masks = np.arange(start, start + step, dtype=np.int64)
        keep = _membership(masks, pair.gens_J) & ~_membership(masks, pair.gens_I)
        degrees = np.bitwise_count(masks[keep])
        counts += np.bincount(degrees, minlength=n + 1)[: n + 1]
    return [int(c) for c in counts]


def degree_census(pair: SqfreeIdealPair) -> dict[str, list[int]]:
    """Per-degree counts for I, J \\ I and the complement of J; they sum to C(N, j)."""
    n = pair.num_vars
    buckets = {"in_I": [0] * (n + 1), "J_minus_I": [0] * (n + 1), "outside_J": [0] * (n + 1)}
    for mask in range(1 << n):
        d = bin(mask).count("1")
        if _divisible_by_some(mask, pair.gens_I):
            buckets["in_I"][d] += 1
        elif _divisible_by_some(mask, pair.gens_J):
            buckets["J_minus_I"][d] += 1
        else:
            buckets["outside_J"][d] += 1
    return buckets


def bipartite_edge_pair(n: int, m: int, quotient: bool = True) -> SqfreeIdealPair:
    """S/I_{n,m} (quotient=True) or I_{n,m} itself, variables x_0..x_{n-1}, y_0..y_{m-1}."""
    edges = tuple((1 << i) | (1 << (n + j)) for i in range(n) for j in range(m))
    if quotient:
        return SqfreeIdealPair(n + m, edges, (0,))
    return SqfreeIdealPair(n + m, (), edges)


def bipartite_alpha_quotient(n: int, m: int) -> list[int]:
    """alpha of S/I_{n,m}: monomials supported inside one block only."""
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got ({n}, {m})")
    return [1] + [binomial(n, j) + binomial(m, j) for j in range(1, n + m + 1)]


def beta_table(q: int, alpha: Sequence[int]) -> list[int]:
    if not 0 <= q < len(alpha):
        raise ValueError(f"q={q} outside [0, {len(alpha) - 1}]")
    beta = []
    for k in range(q + 1):
        total = 0
        for j in range(k + 1):
            term = binomial(q - j, k - j) * alpha[j]
            total += term if (k - j) % 2 == 0 else -term
        beta.append(total)
    return beta


def first_negative_beta(q: int, alpha: Sequence[int]) -> Optional[tuple[int, int]]:
    for k, b in enumerate(beta_table(q, alpha)):
        if b < 0:
            return k, b
    return None


def hdepth_general(alpha: Sequence[int]) -> int:
    """Largest q in [0, N] whose beta table is nonnegative (every q is tried)."""
    if not any(alpha):
        raise ValueError("alpha is identically zero (the quotient is zero)")
    return max(q for q in range(len(alpha)) if first_negative_beta(q, alpha) is None)


def load_pair(doc) -> SqfreeIdealPair:
    """Build a pair from the JSON ideal-pair document (already parsed, or a path)."""
    if isinstance(doc, (str, os.PathLike)):
        try:
            with open(doc) as fh:
                doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise IdealFileError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "num_vars" not in doc:
        raise IdealFileError("expected an object with num_vars, gens_J and gens_I")
    n = doc["num_vars"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise IdealFileError("num_vars must be a nonnegative integer")
    if n > enum_cap():
        raise EnumerationCapError(f"{n} variables exceeds the enumeration cap {enum_cap()}")

    def gens(key, special, special_value):
        raw = doc.get(key)
        if raw == special:
            return special_value
        if not isinstance(raw, list):
            raise IdealFileError(f"{key} must be a list of index lists or {special!r}")
        out = []
        for g in raw:
            if not isinstance(g, list) or not all(
                isinstance(i, int) and not isinstance(i, bool) and 0 <= i < n for i in g
            ):
                raise IdealFileError(f"{key}: bad generator {g!r}")
            out.append(mask_of(g))
        return tuple(out)

    return SqfreeIdealPair(n, gens("gens_I", "zero", ()), gens("gens_J", "ring", (0,)))
