"""Brute-force ground truth by bounded enumeration of generator words."""

import itertools
import json
import os
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional, Tuple

from .errors import SearchSpaceTooLarge
from .matrix import IDENTITY, GenWord, Mat2, Params, gen_power, mul
from .membership import Mode, check_group, complete_matrix

CAP_ENV = "SL2CF_ORACLE_CAP"
DEFAULT_CAP = 2_000_000
DEFAULT_DENSITY_CAP = 1_000_000


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


@dataclass(frozen=True)
class EnumSpec:
    p: Params
    max_blocks: int
    max_abs_exponent: int
    mode: Mode = Mode.GROUP

    def __post_init__(self):
        if self.max_blocks < 0 or self.max_abs_exponent < 1:
            raise ValueError("need max_blocks >= 0 and max_abs_exponent >= 1")

    @property
    def exponents(self) -> Tuple[int, ...]:
        pos = tuple(range(1, self.max_abs_exponent + 1))
        if self.mode is Mode.MONOID:
            return pos
        return tuple(-e for e in reversed(pos)) + pos

    def size(self) -> int:
        """Exact number of words, identity included."""
        k = len(self.exponents)
        return 1 + sum(2 * k ** n for n in range(1, self.max_blocks + 1))


def _check_cap(spec: EnumSpec, cap: Optional[int]) -> None:
    cap = default_cap() if cap is None else cap
    size = spec.size()
    if size > cap:
        raise SearchSpaceTooLarge(f"search space has {size} words, cap is {cap}")


def enumerate_words(spec: EnumSpec, cap: Optional[int] = None) -> Iterator[Tuple[GenWord, Mat2]]:
    """Every canonical word within bounds, with its matrix.

    Order: by number of blocks, then words starting with L before R, then
    lexicographically by exponent tuple.
    """
    _check_cap(spec, cap)
    yield GenWord(), IDENTITY
    exps = spec.exponents
    for n in range(1, spec.max_blocks + 1):
        for first in ("L", "R"):
            letters = [first if i % 2 == 0 else ("R" if first == "L" else "L")
                       for i in range(n)]
            powers = [{e: gen_power(g, spec.p, e) for e in exps} for g in letters]
            yield from _dfs(letters, powers, exps, 0, IDENTITY, [])


def _dfs(letters, powers, exps, i, acc, chosen):
    if i == len(letters):
        yield GenWord(tuple(zip(letters, chosen))), acc
        return
    for e in exps:
        chosen.append(e)
        yield from _dfs(letters, powers, exps, i + 1, mul(acc, powers[i][e]), chosen)
        chosen.pop()


def oracle_check(m: Mat2, spec: EnumSpec, cap: Optional[int] = None) -> Optional[GenWord]:
    """The word within bounds whose matrix is ``m``, or None (bounded evidence only)."""
    for w, x in enumerate_words(spec, cap):
        if x == m:
            return w
    return None


def distinct_matrices(spec: EnumSpec, cap: Optional[int] = None) -> bool:
    seen = {}
    for w, x in enumerate_words(spec, cap):
        key = x.entries
        if key in seen:
            return False
        seen[key] = w
    return True


@dataclass(frozen=True)
class DensityReport:
    k: int
    entry_bound: int
    ambient: int
    members: int

    def to_json(self) -> dict:
        return {"k": self.k, "entry_bound": self.entry_bound,
                "ambient": self.ambient, "members": self.members}

    def __str__(self):
        return json.dumps(self.to_json())


def density_scan(k: int, entry_bound: int, max_pairs: int = DEFAULT_DENSITY_CAP) -> DensityReport:
    """Count group members among completions of every admissible column (b, d).

    Columns range over coprime pairs with |b|, |d| <= entry_bound,
    d = 1 (mod k^2) and b = 0 (mod k).
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    p = Params(k, k)
    ds = [d for d in range(-entry_bound, entry_bound + 1) if (d - 1) % (k * k) == 0]
    bs = [b for b in range(-entry_bound, entry_bound + 1) if b % k == 0]
    if len(ds) * len(bs) > max_pairs:
        raise SearchSpaceTooLarge(
            f"{len(ds) * len(bs)} column pairs exceed the cap of {max_pairs}")
    ambient = members = 0
    for d, b in itertools.product(ds, bs):
        if gcd(b, d) != 1:
            continue
        m = complete_matrix(b, d, p, Mode.GROUP)
        ambient += 1
        if check_group(m, p).member:
            members += 1
    return DensityReport(k, entry_bound, ambient, members)
