import pytest

from sl2cf.errors import SearchSpaceTooLarge
from sl2cf.matrix import IDENTITY, GenWord, Mat2, Params, word_to_matrix
from sl2cf.membership import Mode, check_group, check_monoid
from sl2cf.oracle import (EnumSpec, density_scan, distinct_matrices,
                          enumerate_words, oracle_check)


def test_monoid_enumeration_small():
    spec = EnumSpec(Params(2, 2), 2, 1, Mode.MONOID)
    words = [str(w) for w, _ in enumerate_words(spec)]
    assert words == ["I", "L", "R", "L R", "R L"]
    assert spec.size() == 5


def test_zero_blocks():
    assert list(enumerate_words(EnumSpec(Params(3, 3), 0, 5))) == [(GenWord(), IDENTITY)]


def test_group_enumeration_small():
    spec = EnumSpec(Params(3, 3), 2, 1)
    pairs = list(enumerate_words(spec))
    assert len(pairs) == spec.size() == 13
    assert len({m for _, m in pairs}) == 13
    assert len({w for w, _ in pairs}) == 13


def test_enumeration_matrices_are_exact():
    spec = EnumSpec(Params(4, 3), 3, 2)
    for w, m in enumerate_words(spec):
        assert word_to_matrix(w, spec.p) == m


def test_enumeration_order_is_by_blocks():
    spec = EnumSpec(Params(3, 3), 3, 2)
    lengths = [len(w) for w, _ in enumerate_words(spec)]
    assert lengths == sorted(lengths)


def test_cap_refuses():
    with pytest.raises(SearchSpaceTooLarge):
        list(enumerate_words(EnumSpec(Params(3, 3), 10, 5), cap=1000))


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("SL2CF_ORACLE_CAP", "10")
    with pytest.raises(SearchSpaceTooLarge):
        oracle_check(IDENTITY, EnumSpec(Params(3, 3), 2, 1))


def test_oracle_check_examples():
    m = Mat2(10105, 2457, -3648, -887)
    w = oracle_check(m, EnumSpec(Params(4, 3), 6, 3))
    assert str(w) == "R^-1 L R L^-2 R^3 L"
    assert oracle_check(IDENTITY, EnumSpec(Params(4, 3), 3, 3)) == GenWord()
    assert oracle_check(Mat2(17, 12, 24, 17), EnumSpec(Params(4, 4), 4, 4)) is None


@pytest.mark.parametrize("u, v, mode", [
    (2, 2, Mode.MONOID), (2, 3, Mode.MONOID), (3, 3, Mode.GROUP), (3, 4, Mode.GROUP),
    (2, 2, Mode.GROUP),
])
def test_exhaustive_agreement(u, v, mode):
    spec = EnumSpec(Params(u, v), 4, 2, mode)
    decide = check_monoid if mode is Mode.MONOID else check_group
    for w, m in enumerate_words(spec):
        vd = decide(m, spec.p)
        assert vd.member and vd.word == w
    assert distinct_matrices(spec)


def test_density_examples():
    k2 = density_scan(2, 50)
    assert k2.members == k2.ambient > 0
    k3 = density_scan(3, 200)
    assert k3.members < k3.ambient
    assert k3.to_json() == {"k": 3, "entry_bound": 200,
                            "ambient": k3.ambient, "members": k3.members}
    assert density_scan(3, 200) == k3


def test_density_counts_known_non_member():
    # (b, d) = (12, 17) lies within the bound and its completion is not a member
    rep = density_scan(4, 20)
    assert not check_group(Mat2(17, 12, 24, 17), Params(4, 4)).member
    assert rep.members < rep.ambient


def test_density_refuses_large_bound():
    with pytest.raises(SearchSpaceTooLarge):
        density_scan(2, 10 ** 6)
