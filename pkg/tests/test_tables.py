from __future__ import annotations

import random
from itertools import product

import pytest

from monolef.core import hilbert_data, minimalize, parse_ideal
from monolef.lefschetz import has_narrow_slp
from monolef.tables import (
    Table,
    enumerate_tables,
    ideal_of,
    gorenstein_initial_ideal,
    gorenstein_initial_table,
    predicted_socle,
    validate,
)


def I(text, n=3):
    return parse_ideal(text, n)


def test_basic_table():
    t = Table(1, 3, (6, 7, 4), ((2, 6, 0),))
    assert validate(t) == []
    assert ideal_of(t) == I("x^6, y^7, z^4, x^4*y")
    assert predicted_socle(t) == 12
    assert hilbert_data(ideal_of(t)).socle_degree == 12


def test_tables_sharing_an_ideal():
    tables = [
        Table(2, 4, (12, 7, 5, 4), ((3, 4, 3, 2), (0, 3, 2, 1))),
        Table(1, 4, (12, 7, 5, 4), ((3, 7, 3, 2),)),
        Table(0, 4, (9, 7, 5, 4), ()),
    ]
    for t in tables:
        assert ideal_of(t) == I("x^9, y^7, z^5, w^4", 4)


def test_glued_table():
    t = Table(1, 3, (4, 2, 4), ((1, 1, 3),))
    assert ideal_of(t) == I("x^4, y^2, z^4, x^3*y, x^3*z")
    assert predicted_socle(t) == 6


def test_validate_messages():
    bad = Table(2, 3, (3, 2, 2), ((1, 1, 2), (1, 1, 0)))
    msgs = validate(bad)
    assert any(m.startswith("(1)") for m in msgs)
    assert any(m.startswith("(3)") for m in msgs)
    over = Table(1, 3, (1, 1, 0), ((0, 0, 1),))
    assert any(m.startswith("(2)") for m in validate(over))
    with pytest.raises(ValueError):
        ideal_of(bad)


def test_shape_checks():
    with pytest.raises(ValueError):
        Table(3, 3, (1, 1, 1), ((0, 0, 0),) * 3)
    with pytest.raises(ValueError):
        Table(1, 3, (1, 1), ((0, 0, 0),))
    with pytest.raises(ValueError):
        Table(1, 3, (1, 1, -1), ((0, 1, 0),))


def test_json_roundtrip():
    t = Table(1, 3, (6, 7, 4), ((2, 6, 0),))
    assert Table.from_json(t.to_json()) == t
    assert Table.from_json('{"s":1,"n":3,"d":[6,7,4],"alpha":[[2,6,0]]}') == t


def test_accessors():
    t = Table(2, 4, (12, 7, 5, 4), ((3, 4, 3, 2), (0, 3, 2, 1)))
    assert t.a(1, 2) == 4 and t.a(3, 3) == 0
    assert t.residual(2, 3) == 0 and t.residual(1, 1) == 9


def test_predicted_socle_errors():
    with pytest.raises(ValueError):
        predicted_socle(Table(0, 3, (1, 2, 3), ()))
    unit = gorenstein_initial_table((2, 2, 1), (2, 2, 0))
    assert ideal_of(unit).is_unit
    with pytest.raises(ValueError):
        predicted_socle(unit)


class TestLemmaFamilyCases:
    def test_unit(self):
        assert gorenstein_initial_ideal((3, 2, 2), (3, 2, 1)).is_unit

    def test_alpha_i_full(self):
        assert gorenstein_initial_ideal((3, 3, 2), (1, 3, 0)) == I("x^2, y^3, z^2")

    def test_alpha1_zero(self):
        assert gorenstein_initial_ideal((3, 2, 4), (0, 1, 2)) == I("x^3, y^2, z^4")

    def test_alpha1_full(self):
        assert gorenstein_initial_ideal((3, 2, 4), (3, 1, 2)) == I("x^3, y, z^2")

    def test_preconditions(self):
        with pytest.raises(ValueError):
            gorenstein_initial_ideal((3, 2, 4), (0, 1, 1))
        with pytest.raises(ValueError):
            gorenstein_initial_ideal((3, 2, 4), (0, 3, 0))


def _brute_tables(n, s, max_d):
    out = set()
    cells = n + s * n
    for values in product(range(max_d + 1), repeat=cells):
        d, rest = values[:n], values[n:]
        alpha = tuple(tuple(rest[k * n:(k + 1) * n]) for k in range(s))
        t = Table(s, n, d, alpha)
        if not validate(t):
            out.add(t)
    return out


@pytest.mark.parametrize("n,s,max_d", [(2, 1, 3), (3, 1, 2), (3, 2, 1)])
def test_enumeration_complete(n, s, max_d):
    assert set(enumerate_tables(n, s, max_d)) == _brute_tables(n, s, max_d)


def test_s1_matches_lemma_family():
    for t in enumerate_tables(3, 1, 4):
        assert ideal_of(t) == gorenstein_initial_ideal(t.d, t.alpha[0])


def test_random_four_variable_tables():
    rng = random.Random(5)
    checked = 0
    while checked < 15:
        s = rng.randint(1, 3)
        rows = [[0] * 4 for _ in range(s)]
        for i in range(s):
            for j in range(i, 4):
                rows[i][j] = rng.randint(0, 2)
        a = lambda i, j: rows[i - 1][j - 1] if 1 <= i <= s else 0  # noqa: E731
        head = [sum(a(i, k) for i in range(1, k)) + sum(a(k, j) for j in range(k + 1, 5)) + a(k + 1, k + 1)
                for k in range(1, s + 1)]
        d = tuple(head + [rng.randint(1, 3) for _ in range(4 - s)])
        t = Table(s, 4, d, tuple(tuple(r) for r in rows))
        if validate(t):
            continue
        ideal = ideal_of(t)
        if ideal.is_unit:
            continue
        assert has_narrow_slp(ideal), t
        assert hilbert_data(ideal).socle_degree == predicted_socle(t)
        checked += 1


def test_same_ideal_minimalization():
    gens = [(12, 0, 0, 0), (0, 7, 0, 0), (0, 0, 5, 0), (0, 0, 0, 4), (9, 0, 0, 0)]
    assert minimalize(gens, 4) == I("x^9, y^7, z^5, w^4", 4)


def test_interface_aliases():
    from monolef import maci, tables

    assert tables.lemma31_ideal is tables.gorenstein_initial_ideal
    assert maci.thm51_ideal is maci.mixed_power_ideal
