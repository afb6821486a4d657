from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monolef.core import (
    HilbertData,
    Monomial,
    MonomialIdeal,
    ParseError,
    add,
    colon_by_monomial,
    contains,
    degree_bound,
    hilbert_data,
    hilbert_values,
    is_artinian,
    is_subideal,
    is_symmetric,
    is_unimodal,
    minimalize,
    multiply,
    parse_ideal,
    parse_monomial,
    principal,
    render_ideal,
    render_monomial,
    scale,
    standard_basis,
    standard_monomials,
    verify_split,
)
from oracles import brute_minimal, brute_standard, hilbert_inclusion_exclusion
from strategies import artinian_ideals, proper_artinian_ideals


def I(text, n=3):
    return parse_ideal(text, n)


def M(text, n=3):
    return parse_monomial(text, n)


class TestMonomial:
    def test_arithmetic(self):
        a, b = Monomial((2, 1, 0)), Monomial((1, 1, 3))
        assert a * b == (3, 2, 3)
        assert (a * b) / b == a
        assert a.gcd(b) == (1, 1, 0)
        assert a.lcm(b) == (2, 1, 3)
        assert a.degree == 3

    def test_rejects_negative_and_bool(self):
        with pytest.raises(ValueError):
            Monomial((1, -1))
        with pytest.raises(ValueError):
            Monomial((True, 0))

    def test_non_divisible_quotient(self):
        with pytest.raises(ValueError):
            Monomial((1, 0)) / Monomial((0, 1))

    def test_pure_power_index(self):
        assert Monomial((0, 4, 0)).pure_power_index() == 1
        assert Monomial((1, 1, 0)).pure_power_index() is None
        assert Monomial((0, 0, 0)).pure_power_index() is None


class TestIdealOps:
    def test_minimalize_drops_multiples(self):
        ideal = minimalize([(2, 0), (3, 0), (2, 1), (0, 1)], 2)
        assert set(ideal.gens) == {(2, 0), (0, 1)}

    def test_minimalize_duplicates(self):
        assert minimalize([(1, 1), (1, 1)], 2).gens == ((1, 1),)

    def test_canonical_order(self):
        ideal = I("z^2, x*y, y^3, x^2")
        assert [render_monomial(g) for g in ideal.gens] == ["x^2", "x*y", "z^2", "y^3"]

    def test_unit_and_zero(self):
        assert minimalize([(0, 0), (1, 2)], 2).is_unit
        assert MonomialIdeal.unit(2).gens == ((0, 0),)
        assert MonomialIdeal.zero(3).is_zero
        assert render_ideal(MonomialIdeal.zero(3)) == "0"

    def test_mixed_lengths(self):
        with pytest.raises(ValueError):
            minimalize([(1, 0), (1, 0, 0)])

    def test_add_multiply_scale(self):
        a, b = I("x, y"), I("x, z")
        assert add(a, b) == I("x, y, z")
        assert multiply(a, b) == I("x^2, x*z, x*y, y*z")
        assert scale(I("x, y^2"), M("z")) == I("x*z, y^2*z")

    def test_colon(self):
        assert colon_by_monomial(I("x^2, y^3, z^4, x*y^2, x*z^3, x*y*z"), M("x")) == I("x, y^2, z^3, y*z")
        assert colon_by_monomial(I("x^2, y"), M("y")).is_unit

    def test_contains(self):
        assert contains(I("x^6, y^7, z^4, x^4*y"), M("x^4*z^4"))
        assert not contains(I("x^6, y^7, z^4, x^4*y"), M("x^3*y^6*z^3"))
        assert M("x^5*y") in I("x^4*y")

    def test_subideal(self):
        assert is_subideal(I("x^2, x*y"), I("x"))
        assert not is_subideal(I("x"), I("x^2"))

    def test_artinian(self):
        assert is_artinian(I("x^2, y^2, z^2, x*y"))
        assert not is_artinian(I("x^2, y^2"))
        with pytest.raises(ValueError):
            standard_basis(I("x^2, y^2"))

    def test_mismatch(self):
        with pytest.raises(ValueError):
            add(I("x", 2), I("x", 3))


class TestHilbert:
    def test_known_series(self):
        hd = hilbert_data(I("x^3, y^3, z^5, x^2*y^2, x*z, y*z"))
        assert hd == HilbertData((1, 3, 4, 3, 1), 4, True, True)

    def test_complete_intersection(self):
        assert hilbert_values(I("x^2, y^2, z^2")) == (1, 3, 3, 1)

    def test_unit(self):
        assert hilbert_values(MonomialIdeal.unit(3)) == ()
        with pytest.raises(ValueError):
            hilbert_data(MonomialIdeal.unit(3))

    def test_flags(self):
        assert is_unimodal([1, 3, 3, 1]) and is_unimodal([1, 2, 2, 5])
        assert not is_unimodal([1, 3, 2, 3])
        assert is_symmetric([1, 2, 1]) and not is_symmetric([1, 2])

    def test_standard_monomials_degree(self):
        ideal = I("x^3, y^3, z^5, x^2*y^2, x*z, y*z")
        assert set(standard_monomials(ideal, 2)) == {M("x^2"), M("x*y"), M("y^2"), M("z^2")}
        assert standard_monomials(ideal, 50) == []
        assert standard_monomials(ideal, -1) == []


class TestParsing:
    def test_aliases_and_indexed(self):
        assert parse_ideal("x1^2*x3, x2") == I("x^2*z, y")
        assert parse_ideal("x1 x2^2, x5").n == 5

    def test_minimalizes(self):
        assert parse_ideal("x^2, x^3") == parse_ideal("x^2")

    def test_optional_star_and_spaces(self):
        assert parse_monomial("x^2 y z^3", 3) == (2, 1, 3)
        assert parse_monomial("x*x", 1) == (2,)

    def test_unit_monomial(self):
        assert parse_monomial("1", 3) == (0, 0, 0)
        assert render_monomial((0, 0)) == "1"

    def test_error_offset(self):
        with pytest.raises(ParseError) as err:
            parse_ideal("x^^2")
        assert err.value.pos == 3

    @pytest.mark.parametrize("text", ["x^", "x,,y", "x + y", "q", "x0"])
    def test_syntax_errors(self, text):
        with pytest.raises(ParseError):
            parse_ideal(text)

    def test_too_many_variables(self):
        with pytest.raises(ParseError):
            parse_ideal("x4", 3)

    def test_zero_ideal(self):
        assert parse_ideal("0", 2).is_zero

    def test_json_roundtrip(self):
        ideal = I("x^3, y^3, z^5, x^2*y^2, x*z, y*z")
        assert MonomialIdeal.from_json(ideal.to_json()) == ideal
        assert ideal.to_json()["gens"][0] == [1, 0, 1]


# -- properties ------------------------------------------------------------


@given(artinian_ideals())
def test_minimal_generators_match_bruteforce(ideal):
    assert set(ideal.gens) == brute_minimal(ideal.gens)


@given(artinian_ideals(), st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
                                            st.integers(0, 3)), max_size=3))
def test_minimalize_idempotent_and_order_free(ideal, extra):
    n = ideal.n
    gens = list(ideal.gens) + [tuple(e[:n]) for e in extra]
    once = minimalize(gens, n)
    assert minimalize(once.gens, n) == once
    assert minimalize(reversed(gens), n) == once


@given(proper_artinian_ideals())
def test_standard_monomials_match_bruteforce(ideal):
    for t, layer in enumerate(standard_basis(ideal)):
        assert set(layer) == brute_standard(ideal.gens, ideal.n, t)


@given(proper_artinian_ideals(max_extra=3))
def test_hilbert_matches_inclusion_exclusion(ideal):
    values = hilbert_values(ideal)
    top = degree_bound(ideal) + 2
    expected = hilbert_inclusion_exclusion(ideal.gens, ideal.n, top)
    assert list(values) + [0] * (top + 1 - len(values)) == expected


@given(proper_artinian_ideals(), st.data())
def test_split_identity(ideal, data):
    std = [m for layer in standard_basis(ideal) for m in layer]
    m = data.draw(st.sampled_from(std))
    assert verify_split(ideal, m)
    hk = hilbert_values(ideal)
    hi = hilbert_values(add(ideal, principal(m)))
    hj = hilbert_values(colon_by_monomial(ideal, m))
    for t in range(len(hk) + 1):
        get = lambda v, k: v[k] if 0 <= k < len(v) else 0  # noqa: E731
        assert get(hk, t) == get(hi, t) + get(hj, t - m.degree)


@given(proper_artinian_ideals(), st.data())
def test_colon_characterisation(ideal, data):
    std = [u for layer in standard_basis(ideal) for u in layer]
    m = data.draw(st.sampled_from(std))
    colon = colon_by_monomial(ideal, m)
    for u in std:
        assert (u in colon) == ((u * m) in ideal)


@given(artinian_ideals())
def test_text_roundtrip(ideal):
    assert parse_ideal(render_ideal(ideal), ideal.n) == ideal
    assert MonomialIdeal.from_json(ideal.to_json()) == ideal


@given(artinian_ideals(), artinian_ideals())
def test_add_is_union(a, b):
    if a.n != b.n:
        return
    s = add(a, b)
    assert is_subideal(a, s) and is_subideal(b, s)
    assert all(contains(a, g) or contains(b, g) for g in s.gens)


@given(artinian_ideals())
def test_identities_with_trivial_ideals(ideal):
    n = ideal.n
    assert add(ideal, MonomialIdeal.zero(n)) == ideal
    assert colon_by_monomial(ideal, Monomial.one(n)) == ideal


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4))
def test_complete_intersection_hilbert(exps):
    n = len(exps)
    hd = hilbert_data(minimalize([Monomial.var(k, n, e) for k, e in enumerate(exps)], n))
    assert hd.socle_degree == sum(e - 1 for e in exps)
    assert hd.symmetric and hd.unimodal
