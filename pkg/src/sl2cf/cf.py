"""Exact continued fraction sequences and the transforms between their classes.

A sequence ``[q0, q1, ..., qr]`` stands for the continued fraction
``q0 + 1/(q1 + 1/(... + 1/qr))``.  Sequences live in nested classes:

* ``A``  -- every entry after the first is nonzero
* ``A0`` -- additionally no tail ``[qi, ..., qr]`` (0 < i < r) evaluates to 0
* ``A1`` -- additionally inner entries are >= 1 and the last is > 1 (short form)
* ``A2`` -- additionally every entry after the first has absolute value > 1

All arithmetic is on Python ints; values are returned as ``fractions.Fraction``.
"""

import enum
import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DegenerateSequence, InvalidInput, SequenceClassError

Rational = Fraction


class SeqClass(enum.Enum):
    A = "A"
    A0 = "A0"
    A1 = "A1"
    A2 = "A2"


def normalize(num: int, den: int) -> Fraction:
    """Reduced fraction with positive denominator."""
    if den == 0:
        raise InvalidInput(f"zero denominator in {num}/{den}")
    return Fraction(int(num), int(den))


def _tail_values(q: Sequence[int]) -> Optional[Tuple[int, int]]:
    # Back-to-front evaluation as an unreduced pair (num, den); None on a zero tail.
    num, den = q[-1], 1
    for qi in reversed(q[:-1]):
        if num == 0:
            return None
        num, den = qi * num + den, num
    return num, den


def _in_A(q: Sequence[int]) -> bool:
    return len(q) > 0 and all(x != 0 for x in q[1:])


def _in_A0(q: Sequence[int]) -> bool:
    return _in_A(q) and _tail_values(q) is not None


def _in_A1(q: Sequence[int]) -> bool:
    if not _in_A(q):
        return False
    if len(q) > 1 and (q[-1] <= 1 or any(x < 1 for x in q[1:-1])):
        return False
    # positive inner entries never produce a zero tail
    return True


def _in_A2(q: Sequence[int]) -> bool:
    return (
        len(q) > 0
        and all(abs(x) > 1 for x in q[1:])
        and _tail_values(q) is not None
    )


_CHECKS = {
    SeqClass.A: _in_A,
    SeqClass.A0: _in_A0,
    SeqClass.A1: _in_A1,
    SeqClass.A2: _in_A2,
}


def in_class(quotients: Sequence[int], tag: SeqClass) -> bool:
    return _CHECKS[tag](quotients)


class PQSeq:
    """Immutable sequence of partial quotients tagged with a verified class.

    Pass ``verify=False`` only when the class is already guaranteed by
    construction; the A0/A2 checks cost one full evaluation.
    """

    __slots__ = ("_q", "_tag")

    def __init__(self, quotients: Iterable[int], tag: SeqClass = SeqClass.A,
                 verify: bool = True):
        q = tuple(int(x) for x in quotients)
        if verify and not _CHECKS[tag](q):
            raise SequenceClassError(f"{format_seq(q)} is not in class {tag.value}")
        object.__setattr__(self, "_q", q)
        object.__setattr__(self, "_tag", tag)

    def __setattr__(self, name, value):
        raise AttributeError("PQSeq is immutable")

    @property
    def quotients(self) -> Tuple[int, ...]:
        return self._q

    @property
    def tag(self) -> SeqClass:
        return self._tag

    def __len__(self):
        return len(self._q)

    def __iter__(self):
        return iter(self._q)

    def __getitem__(self, i):
        return self._q[i]

    def __eq__(self, other):
        if isinstance(other, PQSeq):
            return self._q == other._q
        if isinstance(other, (tuple, list)):
            return self._q == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._q)

    def __repr__(self):
        return f"PQSeq({format_seq(self._q)}, {self._tag.value})"

    def __str__(self):
        return format_seq(self._q)

    def __neg__(self):
        return negate_seq(self)

    def has_class(self, tag: SeqClass) -> bool:
        return _CHECKS[tag](self._q)

    def retag(self, tag: SeqClass) -> "PQSeq":
        return PQSeq(self._q, tag)

    @classmethod
    def parse(cls, text: str, tag: SeqClass = SeqClass.A) -> "PQSeq":
        return cls(parse_seq(text), tag)


def format_seq(q: Iterable[int]) -> str:
    return "[" + ",".join(str(x) for x in q) + "]"


_SEQ_RE = re.compile(r"^\s*\[\s*([-+]?\d+(\s*,\s*[-+]?\d+)*)\s*\]\s*$")


def parse_seq(text: str) -> Tuple[int, ...]:
    """Parse ``"[-3,4,2]"`` (whitespace tolerated) into a tuple of ints."""
    m = _SEQ_RE.match(text)
    if not m:
        raise InvalidInput(f"cannot parse sequence {text!r}")
    return tuple(int(tok) for tok in m.group(1).split(","))


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` with arbitrary-size integers."""
    parts = text.strip().split("/")
    try:
        if len(parts) == 1:
            return normalize(int(parts[0]), 1)
        if len(parts) == 2:
            return normalize(int(parts[0]), int(parts[1]))
    except ValueError as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise InvalidInput(f"cannot parse rational {text!r}") from None
    raise InvalidInput(f"cannot parse rational {text!r}")


def negate_seq(s: PQSeq) -> PQSeq:
    # negation preserves every class except A1
    tag = SeqClass.A0 if s.tag is SeqClass.A1 else s.tag
    return PQSeq((-x for x in s), tag, verify=False)


def concat(a: PQSeq, b: PQSeq) -> PQSeq:
    """The join ``a (+) b``: plain concatenation, or a merge when ``b`` starts with 0."""
    return PQSeq(_concat(a.quotients, b.quotients), SeqClass.A)


def _concat(a: Sequence[int], b: Sequence[int]) -> list:
    if b[0] != 0:
        return [*a, *b]
    if len(b) == 1:
        raise DegenerateSequence(f"cannot merge single-entry {format_seq(b)}")
    out = [*a[:-1], a[-1] + b[1], *b[2:]]
    if len(a) > 1 and out[len(a) - 1] == 0:
        raise DegenerateSequence(
            f"merging {format_seq(a)} and {format_seq(b)} produced an interior zero")
    return out


def short_cf(x: Fraction) -> PQSeq:
    """The unique short (class A1) continued fraction of ``x``."""
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    out = []
    while True:
        a, r = divmod(p, q)
        out.append(a)
        if r == 0:
            break
        p, q = q, r
    if len(out) > 1 and out[-1] == 1:
        # cannot arise from exact Euclid, kept as a guard on the last quotient
        out.pop()
        out[-1] += 1
    return PQSeq(out, SeqClass.A1, verify=False)


def evaluate(s: Iterable[int]) -> Fraction:
    """Exact value of an A0 sequence; raises DegenerateSequence on a zero tail."""
    q = tuple(s)
    if not q:
        raise InvalidInput("empty sequence")
    pair = _tail_values(q)
    if pair is None:
        raise DegenerateSequence(f"{format_seq(q)} has a zero tail")
    return Fraction(*pair)


eval_seq = evaluate


def _join_into(out: list, piece: Sequence[int]) -> None:
    # in-place ``out (+) piece``
    if not out or piece[0] != 0:
        out.extend(piece)
        return
    if len(piece) == 1:
        raise DegenerateSequence("cannot merge a single-entry sequence starting with 0")
    out[-1] += piece[1]
    if len(out) > 1 and out[-1] == 0:
        raise DegenerateSequence("merge produced an interior zero")
    out.extend(piece[2:])


def transform_f(s: PQSeq) -> PQSeq:
    """Rewrite a short continued fraction into class A2 by removing inner 1s.

    Each inner 1 closes a prefix (whose last entry gains 1) and the rest is
    negated, so the recursion unrolls into pieces of alternating sign.
    """
    q = s.quotients
    if not _in_A1(q):
        raise SequenceClassError(f"f needs an A1 sequence, got {format_seq(q)}")
    n = len(q)
    out: list = []
    head, start, sign = q[0], 0, 1
    while True:
        j = next((i for i in range(start + 1, n - 1) if q[i] == 1), None)
        if j is None:
            piece = [head, *q[start + 1:]]
        else:
            piece = [head, *q[start + 1:j]]
            piece[-1] += 1
        _join_into(out, [sign * x for x in piece])
        if j is None:
            break
        head, start, sign = q[j + 1] + 1, j + 1, -sign
    return PQSeq(out, SeqClass.A2)


def transform_g(s: PQSeq) -> PQSeq:
    """Rewrite an A2 sequence into one with positive inner entries and equal value.

    The result is the short form (class A1) whenever the last entry has
    absolute value at least 3.
    """
    q = s.quotients
    if not _in_A2(q):
        raise SequenceClassError(f"g needs an A2 sequence, got {format_seq(q)}")
    n = len(q)
    out: list = []
    # current sequence is [head, sign*q[start+1], ..., sign*q[n-1]]
    head, start, sign = q[0], 0, 1
    while True:
        j = next((i for i in range(start + 1, n) if sign * q[i] < 0), None)
        if j is None:
            piece = [head, *(sign * x for x in q[start + 1:])]
        else:
            piece = [head, *(sign * x for x in q[start + 1:j])]
            piece[-1] -= 1
            piece.append(1)
        _join_into(out, piece)
        if j is None:
            break
        head, start, sign = -(sign * q[j] + 1), j, -sign
    # a final effective entry of -2 leaves a trailing 1, which is A0 but not A1
    return PQSeq(out, SeqClass.A1 if _in_A1(out) else SeqClass.A0)


def prepend_L(s: PQSeq, u: int, alpha: int) -> PQSeq:
    """Sequence for ``a/(a*u*alpha + b)`` given a sequence ``s`` for ``a/b``.

    This is how the second-column ratio changes under left multiplication
    by ``L_u**alpha``.
    """
    q = s.quotients
    if u < 0:
        raise InvalidInput("u must be nonnegative")
    k = u * alpha
    if k == 0:
        return s
    if q[0] == 0:
        if len(q) == 1:
            return s
        if k + q[1] != 0:
            out = (0, k + q[1], *q[2:])
        elif len(q) == 2:
            raise DegenerateSequence("resulting denominator is zero")
        else:
            out = q[2:]
    else:
        out = (0, k, *q)
    res = PQSeq(out, SeqClass.A)
    if _tail_values(out) is None:
        raise DegenerateSequence("resulting denominator is zero")
    return res


def prepend_R(s: PQSeq, v: int, alpha: int) -> PQSeq:
    """Sequence for ``(a + b*v*alpha)/b`` given a sequence ``s`` for ``a/b``."""
    q = s.quotients
    if v < 0:
        raise InvalidInput("v must be nonnegative")
    return PQSeq((v * alpha + q[0], *q[1:]), SeqClass.A, verify=False)
