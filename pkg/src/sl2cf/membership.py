"""Membership deciders and factorizers for the monoid and group generated by L_u, R_v.

Membership is read off the second-column ratio b/d:

* monoid, u, v >= 2: ``short_cf(b/d)`` must be (u, v)-divisible;
* group, u, v >= 3: ``transform_f(short_cf(b/d))`` must be (u, v)-divisible;
* group, u = v = 2: every matrix of the congruence set is a member, and an
  all-even expansion of b/d is built by local rewriting.

In each case the divisible sequence spells out every generator power except
a final ``L**alpha``, which is recovered by peeling the prefix off the matrix.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence

from .cf import PQSeq, evaluate, format_seq, short_cf, transform_f
from .errors import (DegenerateSequence, Inconsistency, InvalidInput,
                     UnsupportedParameters)
from .matrix import (GenWord, Mat2, Params, gen_power, in_script_G,
                     in_script_S, mul, word_to_matrix)



class Mode(enum.Enum):
    MONOID = "monoid"
    GROUP = "group"


class Diagnostic(enum.Enum):
    AMBIENT = "ambient-set"
    DIVISIBILITY = "divisibility"


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    word: Optional[GenWord] = None
    diagnostic: Optional[Diagnostic] = None

    def __post_init__(self):
        if self.member != (self.word is not None):
            raise ValueError("a verdict carries a word exactly when it is a member")

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "word": None if self.word is None else str(self.word),
            "diagnostic": None if self.diagnostic is None else self.diagnostic.value,
        }

    def __str__(self):
        if self.member:
            return f"member {self.word}"
        return f"non-member ({self.diagnostic.value})"


def divisibility_check(s: Sequence[int], p: Params) -> bool:
    """Even-indexed entries divisible by v, odd-indexed entries by u."""
    return all(q % (p.v if i % 2 == 0 else p.u) == 0 for i, q in enumerate(s))


def extract_word(s: Sequence[int], m: Mat2, p: Params, mode: Mode = Mode.GROUP) -> GenWord:
    """Factor ``m`` given its divisible sequence ``[v*a0, u*a1, ..., v*a_{r-1}]``."""
    q = tuple(s)
    if not divisibility_check(q, p):
        raise InvalidInput(f"{format_seq(q)} is not ({p.u},{p.v})-divisible")
    if len(q) % 2 == 0:
        raise Inconsistency(
            f"divisible sequence {format_seq(q)} ends at an odd index; impossible for ambient matrices")
    exps = [x // (p.v if i % 2 == 0 else p.u) for i, x in enumerate(q)]
    n = m
    for i, e in enumerate(exps):
        n = mul(gen_power("R" if i % 2 == 0 else "L", p, -e), n)
    if n.a != 1 or n.b != 0 or n.d != 1 or n.c % p.u:
        raise Inconsistency(f"remainder [{n}] is not a power of L_{p.u}")
    exps.append(n.c // p.u)
    if mode is Mode.MONOID and (min(exps) < 0 or any(e == 0 for e in exps[1:-1])):
        raise Inconsistency(f"monoid factorization has bad exponents {exps}")
    return GenWord.from_alternating(exps, "R")


def _ratio(m: Mat2):
    if m.d == 0:
        raise InvalidInput("d = 0; b/d undefined")
    return Fraction(m.b, m.d)


def check_monoid(m: Mat2, p: Params) -> MembershipVerdict:
    if p.u < 2 or p.v < 2:
        raise UnsupportedParameters(f"monoid test needs u, v >= 2 (got {p.u}, {p.v})")
    if in_script_S(m, p) is None:
        return MembershipVerdict(False, diagnostic=Diagnostic.AMBIENT)
    s = short_cf(_ratio(m))
    if not divisibility_check(s, p):
        return MembershipVerdict(False, diagnostic=Diagnostic.DIVISIBILITY)
    return MembershipVerdict(True, extract_word(s, m, p, Mode.MONOID))


def group_sequence(m: Mat2, p: Params) -> PQSeq:
    """The A2 sequence ``transform_f(short_cf(b/d))`` tested in the group case."""
    return transform_f(short_cf(_ratio(m)))


def check_group(m: Mat2, p: Params) -> MembershipVerdict:
    sanov = p.u == 2 and p.v == 2
    if not sanov and (p.u < 3 or p.v < 3):
        raise UnsupportedParameters(
            f"group test supports u, v >= 3 or u = v = 2 (got {p.u}, {p.v})")
    if in_script_G(m, p) is None:
        return MembershipVerdict(False, diagnostic=Diagnostic.AMBIENT)
    if sanov:
        return MembershipVerdict(True, sanov_factor(m))
    s = group_sequence(m, p)
    if not divisibility_check(s, p):
        return MembershipVerdict(False, diagnostic=Diagnostic.DIVISIBILITY)
    return MembershipVerdict(True, extract_word(s, m, p, Mode.GROUP))


def check(m: Mat2, p: Params, mode: Mode) -> MembershipVerdict:
    return check_monoid(m, p) if mode is Mode.MONOID else check_group(m, p)


def even_expansion(q: Sequence[int], debug: bool = False) -> List[int]:
    """An all-even continued fraction with the same value as ``q``.

    Scans left to right. At the leftmost odd entry ``x`` followed by ``y``
    and a tail ``T``, with ``s = sign(y)`` and ``n = |y|``, rewrites

        [x, y, T]  ->  [x+s, -2s, 2s, -2s, ... (n-1 terms), (-1)^n * (T+s)]

    where ``(-1)^n * (T+s)`` adds ``s`` to the first entry of ``T`` and
    then flips the sign of every remaining entry when ``n`` is odd.
    A last entry of magnitude > 1 is first split as ``[y-s, s]``; a trailing
    +-1 is absorbed into its predecessor and an interior 0 merges its two
    neighbours.  Raises Inconsistency when an odd entry is stranded at the end,
    which cannot happen for matrices of the congruence set.
    """
    target = evaluate(q) if debug else None
    out: List[int] = []
    # remaining entries, reversed so the head is rest[-1]; true value = sign * stored
    rest = [x for x in reversed(q)]
    sign = 1

    def head_pop():
        return sign * rest.pop()

    def head_push(x):
        rest.append(sign * x)

    while rest:
        if debug:
            cur = out + [sign * x for x in reversed(rest)]
            try:
                ok = evaluate(cur) == target
            except DegenerateSequence:
                ok = True  # transient zero awaiting merge
            if not ok:
                raise Inconsistency(f"rewrite changed the value: {format_seq(cur)}")
        h = head_pop()
        if h == 0 and out:
            if not rest:
                raise Inconsistency("expansion ends in a zero quotient")
            head_push(out.pop() + head_pop())
            continue
        if not rest:
            if h in (1, -1) and out:
                head_push(out.pop() + h)
                continue
            if h % 2:
                raise Inconsistency(
                    f"odd final quotient after {format_seq(out)}; b/d is not from the congruence set")
            out.append(h)
            continue
        if h % 2 == 0:
            out.append(h)
            continue
        y = head_pop()
        if y == 0:
            if not rest:
                raise Inconsistency("expansion ends in a zero quotient")
            head_push(h + head_pop())
            continue
        if not rest:
            if y in (1, -1):
                head_push(h + y)
                continue
            s = 1 if y > 0 else -1
            head_push(s)
            y -= s
        s = 1 if y > 0 else -1
        n = abs(y)
        out.append(h + s)
        out.extend(-2 * s if k % 2 == 0 else 2 * s for k in range(n - 1))
        g = head_pop() + s
        if n % 2:
            sign = -sign
            g = -g
        head_push(g)
    if debug and evaluate(out) != target:
        raise Inconsistency("even expansion changed the value")
    return out


def sanov_factor(m: Mat2, debug: bool = False) -> GenWord:
    """Factor a matrix of the level-2 congruence set into L_2, R_2 powers."""
    p = Params(2, 2)
    if in_script_G(m, p) is None:
        raise InvalidInput(f"[{m}] is not in the u = v = 2 congruence set")
    seq = even_expansion(short_cf(_ratio(m)).quotients, debug=debug)
    word = extract_word(seq, m, p, Mode.GROUP)
    if word_to_matrix(word, p) != m:
        raise Inconsistency("Sanov factorization does not reconstruct the matrix")
    return word


def complete_matrix(b: int, d: int, p: Params, mode: Mode = Mode.GROUP) -> Optional[Mat2]:
    """Complete the column ``(b, d)`` to a matrix of the congruence set.

    Among the solutions ``a = a0 + t*b, c = c0 + t*d`` of ``ad - bc = 1``,
    returns the one with the least nonnegative ``a`` satisfying
    ``c = 0 (mod u)`` (which forces ``a = 1 (mod uv)``).  For the monoid
    set nonnegative entries are also required, and None is returned if
    ``b`` or ``d`` is negative.
    """
    uv = p.u * p.v
    if gcd(b, d) != 1 or (d - 1) % uv or b % p.v:
        raise InvalidInput(f"column ({b}, {d}) violates gcd/congruence preconditions")
    if mode is Mode.MONOID and (b < 0 or d < 0):
        return None
    if b == 0:
        m = Mat2(d, 0, 0, d)
    else:
        bb = abs(b)
        a0 = pow(d, -1, bb) if bb > 1 else 0
        for t in range(p.u):
            a = a0 + t * bb
            c = (a * d - 1) // b
            if c % p.u == 0:
                m = Mat2(a, b, c, d)
                break
        else:  # c steps through all residues mod u since d = 1 (mod u)
            raise Inconsistency("no residue class gave c = 0 (mod u)")
    witness = in_script_S(m, p) if mode is Mode.MONOID else in_script_G(m, p)
    return m if witness is not None else None
