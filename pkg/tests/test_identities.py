import itertools

import pytest

from fibwords.identities import (
    IdentitySpec,
    catalog,
    deluca_minimality_check,
    deluca_transpositions,
    expected_factors,
    first_mismatch,
    identity,
    lucas_lengths,
    verify,
    verify_algorithmic_match,
    verify_all,
    verify_identity,
)
from fibwords.numeration import fib
from fibwords.words import fibonacci_stream

IDS = [f"I{k}" for k in range(1, 17)]


def head(spec, k):
    return list(itertools.islice(spec.factors(), k))


def test_catalog_shape():
    specs = catalog()
    assert [s.id for s in specs] == IDS
    for s in specs:
        total = 0
        for w in s.factors():
            assert len(w) > 0
            total += len(w)
            if total > 10**5:
                break


def test_catalog_examples():
    i6, i11, i16 = identity("I6"), identity("I11"), identity("I16")
    assert i6.prefix_word == "" and head(i6, 3) == ["0", "1", "00"]
    assert i11.prefix_word == "010" and next(i11.groups()) == ("01", "01", "001")
    assert i16.prefix_word == "01" and head(i16, 4) == ["0", "0", "10", "10"]


@pytest.mark.parametrize("ident", IDS)
def test_catalog_reproduces_displays(tables, ident):
    shown = tables["identity_displays"][ident]
    spec = identity(ident)
    produced = ([spec.prefix_word] if spec.prefix_word else []) + head(spec, len(shown))
    if ident == "I5":
        # the display's last factor is the misprinted f'_8
        assert produced[:3] == shown[:3]
        assert produced[3] != shown[3]
    else:
        assert produced[: len(shown)] == shown


def test_unknown_identity():
    with pytest.raises(ValueError):
        identity("I17")
    with pytest.raises(ValueError):
        verify_identity("nope", 10)


@pytest.mark.parametrize("ident", IDS)
def test_identity_holds_on_f25(ident):
    report = verify_identity(ident, fib(25))
    assert report.passed, report
    assert report.checked_length == 75025


def test_i6_short():
    r = verify_identity("I6", 19)
    assert r.passed and r.factors_consumed == 6


def test_negative_control_prefix():
    r = verify(identity("I1").with_prefix("1"), 10)
    assert not r.passed and r.mismatch == 0 and r.status == "fail@0"


def _corrupt(spec, factor_index, offset):
    def groups():
        k = 0
        for g in spec.groups():
            out = []
            for w in g:
                if k == factor_index:
                    w = w[:offset] + ("1" if w[offset] == "0" else "0") + w[offset + 1 :]
                out.append(w)
                k += 1
            yield tuple(out)

    return IdentitySpec(spec.id, spec.prefix_word, groups, spec.formula)


@pytest.mark.parametrize("ident", IDS)
def test_corrupted_factor_is_caught(ident):
    spec = identity(ident)
    for factor_index in (0, 3, 7):
        factors = head(spec, factor_index + 1)
        target = factors[factor_index]
        offset = len(target) // 2
        global_pos = len(spec.prefix_word) + sum(map(len, factors[:factor_index])) + offset
        r = verify(_corrupt(spec, factor_index, offset), 5000)
        assert not r.passed
        assert r.mismatch <= global_pos


def test_i1_factor_positions():
    f = fibonacci_stream().take(fib(23))
    pos = 1
    for k, w in enumerate(itertools.islice(identity("I1").factors(), 20), start=1):
        assert pos == fib(k + 1)
        assert f[pos : pos + len(w)] == w
        pos += len(w)


def test_verify_all_is_ordered():
    reports = verify_all(2000)
    assert [r.id for r in reports] == IDS
    assert all(r.passed for r in reports)


def test_first_mismatch():
    assert first_mismatch("0101", "0101") is None
    assert first_mismatch("0101", "0111") == 2
    assert first_mismatch("01", "010") == 2
    assert first_mismatch("1", "0") == 0


@pytest.mark.parametrize("method", ["lz", "lyndon-01", "lyndon-10", "crochemore"])
def test_algorithmic_match_f25(method):
    r = verify_algorithmic_match(method, 75025)
    assert r.passed, r
    assert r.factors_consumed >= 10


def test_algorithmic_match_short():
    r = verify_algorithmic_match("lyndon-01", 20)
    assert r.passed and r.factors_consumed == 2
    r = verify_algorithmic_match("lyndon-01", 2)
    assert r.passed and r.factors_consumed == 0


def test_algorithmic_match_errors():
    with pytest.raises(ValueError):
        verify_algorithmic_match("lz77", 100)
    with pytest.raises(ValueError):
        expected_factors("bogus")


def test_deluca_two_factors():
    # 01010010 010 ... > 010 01010010 ...
    assert "01010010" + "010" > "010" + "01010010"
    assert deluca_minimality_check(2, 200)


def test_deluca_four_and_five():
    outcomes = deluca_transpositions(4, 10**4)
    assert len(outcomes) == 6 and all(o == "greater" for _, _, o in outcomes)
    assert deluca_minimality_check(5, 10**5)


def test_deluca_identity_permutation_is_f():
    spec = identity("I14")
    word = "".join(head(spec, 6))
    assert fibonacci_stream().take(len(word)) == word


def test_deluca_shallow_probe_is_inconclusive():
    # with one symbol of probe nothing can be decided
    outcomes = deluca_transpositions(3, 1)
    assert {o for _, _, o in outcomes} == {"inconclusive"}
    assert not deluca_minimality_check(3, 1)


def test_lucas_lengths():
    assert lucas_lengths(6) == [2, 1, 3, 4, 7, 11]
    assert lucas_lengths(1) == [2]
    assert lucas_lengths(8) == [2, 1, 3, 4, 7, 11, 18, 29]
    seq = lucas_lengths(20)
    assert all(c == a + b for a, b, c in zip(seq, seq[1:], seq[2:]))
    # lengths are those of the actual I8 groups
    spec = identity("I8")
    groups = list(itertools.islice(spec.groups(), 6))
    assert seq[2:8] == [sum(map(len, g)) for g in groups]
    assert spec.prefix_word == "01" + "0"
