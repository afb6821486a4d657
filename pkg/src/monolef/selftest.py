"""Fixture suite of known results, run by ``monolef selftest``."""

from __future__ import annotations

import time
from typing import Callable

from .binomial import (
    check_slp_binomial,
    gorenstein_certificate,
    initial_ideal,
    kprime_from_table,
    kprime_gens,
    socle_dimension,
)
from .core import (
    add,
    colon_by_monomial,
    contains,
    hilbert_data,
    minimalize,
    parse_ideal,
    parse_monomial,
    standard_monomials,
    verify_split,
)
from .glue import (
    can_glue,
    centre_to_centre,
    family_product_linear,
    family_squares_squared,
    find_witness,
    generators_without,
    glue,
    glue_candidates,
    split,
)
from .lefschetz import Property, check_lefschetz, has_narrow_slp
from .maci import MaciParams, fixed_count, maci_ideal, predict_slp, predict_wlp, scan, mixed_power_ideal, twin_peak_values
from .tables import Table, ideal_of, gorenstein_initial_ideal, predicted_socle, validate


def _i(text: str, n: int = 3):
    return parse_ideal(text, n)


def _m(text: str, n: int = 3):
    return parse_monomial(text, n)


NON_GLUEABLE = "x^3, y^3, z^5, x^2*y^2, x*z, y*z"
GLUED = "x^4, y^2, z^4, x^3*y, x^3*z"
BRENNER_KAID = "x^3, y^3, z^3, x*y*z"
TABLE_674 = Table(1, 3, (6, 7, 4), ((2, 6, 0),))
TABLE_424 = Table(1, 3, (4, 2, 4), ((1, 1, 3),))
SAME_IDEAL_TABLES = (
    Table(2, 4, (12, 7, 5, 4), ((3, 4, 3, 2), (0, 3, 2, 1))),
    Table(1, 4, (12, 7, 5, 4), ((3, 7, 3, 2),)),
    Table(0, 4, (9, 7, 5, 4), ()),
)


def connected_sum_family(a: int, b: int, k: int, c: int = 1):
    """``(x^(a+b-k) + y^(b-k) z^a, y^(b+1), z^(a+1)) + x (y^(k+1), z)`` as a family."""
    return kprime_gens((a + b - k, b + 1, a + 1), (a + b - k - 1, b - k, a), c)


def _fixtures() -> list[tuple[str, Callable[[], bool]]]:
    return [
        ("minimalize-same-ideal-tables",
         lambda: minimalize([(12, 0, 0, 0), (0, 7, 0, 0), (0, 0, 5, 0), (0, 0, 0, 4), (9, 0, 0, 0),
                             (9, 0, 2, 0), (9, 0, 0, 2)], 4) == _i("x^9, y^7, z^5, w^4", 4)),
        ("add-squares-squared",
         lambda: add(family_squares_squared(3), _i("x^2"))
         == add(_i("x^2"), _i("y^2*y^2, y^2*z^2, z^4"))),
        ("colon-by-x", lambda: colon_by_monomial(_i("x^2, y^3, z^4, x*y^2, x*z^3, x*y*z"), _m("x"))
         == _i("x, y^2, z^3, y*z")),
        ("contains-redundant-generator", lambda: contains(_i("x^6, y^7, z^4, x^4*y"), _m("x^4*z^4"))),
        ("standard-monomials-degree-2", lambda: len(standard_monomials(_i(NON_GLUEABLE), 2)) == 4),
        ("hilbert-non-glueable", lambda: hilbert_data(_i(NON_GLUEABLE)).values == (1, 3, 4, 3, 1)),
        ("split-identity-glued", lambda: verify_split(_i(GLUED), _m("x^3"))),
        ("brenner-kaid-fails-wlp", lambda: not check_lefschetz(_i(BRENNER_KAID), Property.WEAK).verdict),
        ("complete-intersection-slp", lambda: check_lefschetz(_i("x^2, y^2, z^2"), Property.STRONG).verdict),
        ("squares-squared-wlp-n3", lambda: check_lefschetz(family_squares_squared(3), Property.WEAK).verdict),
        ("squares-squared-wlp-n5", lambda: check_lefschetz(family_squares_squared(5), Property.WEAK).verdict),
        ("table-ideal-narrow-slp",
         lambda: has_narrow_slp(_i("x^6, y^7, z^4, x^4*y"))
         and hilbert_data(_i("x^6, y^7, z^4, x^4*y")).socle_degree == 12),
        ("non-glueable-slp", lambda: check_lefschetz(_i(NON_GLUEABLE), Property.STRONG).verdict),
        ("non-glueable-no-witness", lambda: find_witness(_i(NON_GLUEABLE)) is None),
        ("glued-has-witness", lambda: find_witness(_i(GLUED)) is not None),
        ("split-squares-squared",
         lambda: split(family_squares_squared(3), _m("x^2")).j == _i("x^2, y^2, z^2")),
        ("split-glued", lambda: (lambda s: s.i == _i("x^3, y^2, z^4") and s.j == _i("x, y, z"))(
            split(_i(GLUED), _m("x^3")))),
        ("centre-to-centre-glued", lambda: centre_to_centre(_i(GLUED), _m("x^3"))),
        ("centre-to-centre-lemma-family",
         lambda: centre_to_centre(gorenstein_initial_ideal((3, 3, 3), (2, 1, 2)), _m("x"))),
        ("generators-without", lambda: generators_without(_i("x^3, y^2, z^4"), _m("x^3")) == _i("y^2, z^4")),
        ("can-glue", lambda: can_glue(_i("x^3, y^2, z^4"), _i("x, y, z"), _m("x^3"))),
        ("can-glue-principal", lambda: can_glue(_i("x*y"), _i("x, y^2, z"), _m("x*y"))),
        ("glue-complete-intersections", lambda: glue(_i("x^3, y^2, z^4"), _i("x, y, z"), _m("x^3")).k == _i(GLUED)),
        ("glue-smallest-choice",
         lambda: glue(_i("x, y^3, z^4"), _i("x, y^2, z^3, y*z"), _m("x")).k
         == _i("x^2, y^3, z^4, x*y^2, x*z^3, x*y*z")),
        ("glue-principal", lambda: glue(_i("x*y"), _i("x, y^2, z"), _m("x*y")).k == _i("x^2*y, x*y^3, x*y*z")),
        ("glue-candidates-all", lambda: len(glue_candidates(_i("x^3, y^2, z^4"), _i("x, y, z"))) == 3),
        ("product-linear-family",
         lambda: has_narrow_slp(family_product_linear([1, 1, 1]))
         and hilbert_data(family_product_linear([1, 1, 1])).socle_degree == 3),
        ("product-linear-family-uneven",
         lambda: has_narrow_slp(family_product_linear([3, 1, 2]))
         and hilbert_data(family_product_linear([3, 1, 2])).socle_degree == 6),
        ("table-valid", lambda: not validate(TABLE_674) and not validate(TABLE_424)),
        ("table-ideal", lambda: ideal_of(TABLE_674) == _i("x^6, y^7, z^4, x^4*y")),
        ("same-ideal-tables", lambda: all(ideal_of(t) == _i("x^9, y^7, z^5, w^4", 4) for t in SAME_IDEAL_TABLES)),
        ("predicted-socle", lambda: predicted_socle(TABLE_674) == 12 and predicted_socle(TABLE_424) == 6),
        ("table-gives-glued", lambda: ideal_of(TABLE_424) == _i(GLUED)),
        ("lemma-family-complete-intersection",
         lambda: gorenstein_initial_ideal((2, 3, 4), (0, 1, 1)) == _i("x^2, y^3, z^4")),
        ("lemma-family-unit", lambda: gorenstein_initial_ideal((3, 3, 2), (3, 1, 2)).is_unit),
        ("connected-sum-gens",
         lambda: [str(g) for g in connected_sum_family(2, 2, 1).gens]
         == ["x^3 + y*z^2", "y^3", "z^3", "x*y^2", "x*z"]),
        ("connected-sum-certificate-221", lambda: gorenstein_certificate(connected_sum_family(2, 2, 1))["ok"]),
        ("connected-sum-certificate-321", lambda: gorenstein_certificate(connected_sum_family(3, 2, 1))["ok"]),
        ("table-binomial", lambda: [str(g) for g in kprime_from_table(TABLE_674, 1)][0] == "x^6 + y^6"),
        ("binomial-initial-ideal",
         lambda: initial_ideal(connected_sum_family(2, 2, 1)) == gorenstein_initial_ideal((3, 3, 3), (2, 1, 2))),
        ("binomial-gorenstein", lambda: socle_dimension(connected_sum_family(2, 2, 1)) == 1),
        ("binomial-slp", lambda: check_slp_binomial(connected_sum_family(2, 2, 1)).verdict),
        ("maci-ideal", lambda: maci_ideal(MaciParams(1, 1, 1)) == _i(BRENNER_KAID)),
        ("mixed-power-family-slp", lambda: check_lefschetz(mixed_power_ideal(3, 3), Property.STRONG).verdict),
        ("predict-wlp", lambda: not predict_wlp(MaciParams(1, 1, 1)) and predict_wlp(MaciParams(4, 3, 2))
         and not predict_wlp(MaciParams(4, 4, 1))),
        ("predict-slp-sporadic", lambda: predict_slp((2, 2, 1), 5) and predict_slp((3, 2, 2), 7)
         and not predict_slp((1, 1, 1), 3)),
        ("twin-peaks", lambda: twin_peak_values(MaciParams(1, 1, 1)) == (6, 6)
         and twin_peak_values(MaciParams(4, 4, 1)) == (54, 54)
         and twin_peak_values(MaciParams(5, 2, 2)) == (54, 54)),
        ("fixed-count-difference",
         lambda: fixed_count(MaciParams(5, 2, 2), 10, (1, 2)) - fixed_count(MaciParams(5, 2, 2), 11, (1, 2)) == 2
         and fixed_count(MaciParams(4, 4, 1), 10, (0, 1)) - fixed_count(MaciParams(4, 4, 1), 11, (0, 1)) == 2),
        ("scan-d9-wlp-failures",
         lambda: {(r.a, r.b, r.c) for r in scan([9]).rows if not r.computed_wlp} == {(3, 3, 3), (4, 4, 1), (5, 2, 2)}),
    ]


def run_selftest() -> list[dict]:
    results = []
    for name, check in _fixtures():
        start = time.perf_counter()
        try:
            ok, error = bool(check()), None
        except Exception as exc:  # a crash counts as a failed fixture
            ok, error = False, f"{type(exc).__name__}: {exc}"
        results.append({"name": name, "passed": ok, "seconds": round(time.perf_counter() - start, 3),
                        "error": error})
    return results
