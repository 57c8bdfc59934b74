"""2x2 integer matrices, powers of the generators L_u and R_v, and words in them."""

import json
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .errors import InvalidInput, NotUnimodular


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def entries(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mul(self, other)

    def apply(self, x: int, y: int) -> Tuple[int, int]:
        """Act on the column vector ``(x, y)``."""
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __str__(self):
        return f"{self.a} {self.b} {self.c} {self.d}"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c), "d": str(self.d)}

    @classmethod
    def from_json(cls, obj) -> "Mat2":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(*(int(obj[k]) for k in "abcd"))
        except (KeyError, TypeError, ValueError):
            raise InvalidInput(f"bad matrix object {obj!r}") from None

    @classmethod
    def parse(cls, text: str) -> "Mat2":
        """Parse ``"a b c d"`` (row-major) or the JSON object form."""
        text = text.strip()
        if text.startswith("{"):
            try:
                return cls.from_json(json.loads(text))
            except json.JSONDecodeError:
                raise InvalidInput(f"bad matrix JSON {text!r}") from None
        toks = text.replace(",", " ").split()
        if len(toks) != 4:
            raise InvalidInput(f"expected 4 integers, got {text!r}")
        try:
            return cls(*(int(t) for t in toks))
        except ValueError:
            raise InvalidInput(f"non-integer entry in {text!r}") from None


IDENTITY = Mat2(1, 0, 0, 1)


@dataclass(frozen=True)
class Params:
    u: int
    v: int

    def __post_init__(self):
        if not (isinstance(self.u, int) and isinstance(self.v, int)):
            raise InvalidInput("u and v must be integers")
        if self.u < 1 or self.v < 1:
            raise InvalidInput(f"u and v must be positive, got u={self.u}, v={self.v}")


@dataclass(frozen=True)
class ScriptWitness:
    """Integers with a = 1 + uv*n1, b = v*n2, c = u*n3, d = 1 + uv*n4."""

    n1: int
    n2: int
    n3: int
    n4: int

    def to_matrix(self, p: Params) -> Mat2:
        uv = p.u * p.v
        return Mat2(1 + uv * self.n1, p.v * self.n2, p.u * self.n3, 1 + uv * self.n4)


def mul(x: Mat2, y: Mat2) -> Mat2:
    return Mat2(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


def inv(x: Mat2) -> Mat2:
    if x.det != 1:
        raise NotUnimodular(f"determinant of [{x}] is {x.det}, not 1")
    return Mat2(x.d, -x.b, -x.c, x.a)


def gen_power(which: str, p: Params, alpha: int) -> Mat2:
    if which == "L":
        return Mat2(1, 0, p.u * alpha, 1)
    if which == "R":
        return Mat2(1, p.v * alpha, 0, 1)
    raise InvalidInput(f"unknown generator {which!r}")


def _witness(m: Mat2, p: Params) -> Optional[ScriptWitness]:
    uv = p.u * p.v
    if m.det != 1:
        return None
    if (m.a - 1) % uv or m.b % p.v or m.c % p.u or (m.d - 1) % uv:
        return None
    return ScriptWitness((m.a - 1) // uv, m.b // p.v, m.c // p.u, (m.d - 1) // uv)


def in_script_G(m: Mat2, p: Params) -> Optional[ScriptWitness]:
    """Witness that ``m`` lies in the congruence set for the group, else None."""
    return _witness(m, p)


def in_script_S(m: Mat2, p: Params) -> Optional[ScriptWitness]:
    """As :func:`in_script_G`, additionally requiring nonnegative entries."""
    if min(m.entries) < 0:
        return None
    return _witness(m, p)


def compose_witness(n: ScriptWitness, m: ScriptWitness, p: Params) -> ScriptWitness:
    """Witness of the product, from the closed form in terms of both factors."""
    uv = p.u * p.v
    return ScriptWitness(
        n.n1 + m.n1 + uv * n.n1 * m.n1 + n.n2 * m.n3,
        (1 + uv * n.n1) * m.n2 + (1 + uv * m.n4) * n.n2,
        (1 + uv * m.n1) * n.n3 + (1 + uv * n.n4) * m.n3,
        n.n4 + m.n4 + uv * n.n4 * m.n4 + n.n3 * m.n2,
    )


def inverse_witness(n: ScriptWitness) -> ScriptWitness:
    return ScriptWitness(n.n4, -n.n2, -n.n3, n.n1)


_TOKEN_RE = re.compile(r"^([LR])(?:\^([-+]?\d+))?$")


@dataclass(frozen=True)
class GenWord:
    """Canonical alternating word in L and R with nonzero exponents.

    Use :meth:`from_blocks` to canonicalize arbitrary input; the constructor
    rejects non-canonical block lists.
    """

    blocks: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        blocks = tuple((str(g), int(e)) for g, e in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        for i, (g, e) in enumerate(blocks):
            if g not in ("L", "R"):
                raise InvalidInput(f"unknown generator {g!r}")
            if e == 0:
                raise InvalidInput("zero exponent in canonical word")
            if i and blocks[i - 1][0] == g:
                raise InvalidInput("adjacent blocks share a generator")

    @classmethod
    def from_blocks(cls, pairs: Iterable[Tuple[str, int]]) -> "GenWord":
        out: list = []
        for g, e in pairs:
            if e == 0:
                continue
            if out and out[-1][0] == g:
                e += out.pop()[1]
                if e == 0:
                    continue
            out.append((g, e))
        return cls(tuple(out))

    @classmethod
    def from_alternating(cls, exponents: Sequence[int], first: str = "R") -> "GenWord":
        """Word ``R^e0 L^e1 R^e2 ...`` (or starting with L); zeros are elided."""
        other = {"L": "R", "R": "L"}
        letters = [first if i % 2 == 0 else other[first] for i in range(len(exponents))]
        return cls.from_blocks(zip(letters, exponents))

    @classmethod
    def parse(cls, text: str) -> "GenWord":
        text = text.strip()
        if text in ("", "I"):
            return cls()
        pairs = []
        for tok in text.split():
            m = _TOKEN_RE.match(tok)
            if not m:
                raise InvalidInput(f"bad word token {tok!r}")
            pairs.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        return cls.from_blocks(pairs)

    @property
    def leading(self) -> int:
        """Exponent of a leading R block, 0 if the word starts with L or is empty."""
        if self.blocks and self.blocks[0][0] == "R":
            return self.blocks[0][1]
        return 0

    def inverse(self) -> "GenWord":
        return GenWord(tuple((g, -e) for g, e in reversed(self.blocks)))

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        if not self.blocks:
            return "I"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.blocks)


def word_to_matrix(w: GenWord, p: Params) -> Mat2:
    m = IDENTITY
    for g, e in w.blocks:
        m = mul(m, gen_power(g, p, e))
    return m
