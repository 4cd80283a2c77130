import random

from wreath_hochschild.betti import AlgebraPreset, BettiTable
from wreath_hochschild.partitions import count_by_length
from wreath_hochschild.series import BiSeries
from wreath_hochschild.wreath import (
    CLOSED_FORM_PRESETS,
    PRESETS,
    closed_form,
    deformation_parameter_count,
    gamma_preset,
    gamma_series,
    generating_series_product,
    generating_series_sum,
    hh_cohomology_wreath,
    hh_homology_wreath,
    hilb_poincare,
    surface_preset,
)


def test_preset_catalog():
    assert PRESETS["weyl"].betti == {0: 1}
    assert PRESETS["trig"].betti == {0: 1, 1: 1}
    assert PRESETS["qweyl"].betti == {0: 1, 1: 2, 2: 1}
    assert PRESETS["z2_weyl"].betti == {0: 1, 2: 1}
    assert PRESETS["z2_trig"].betti == {0: 1, 2: 2}
    assert PRESETS["z2_qweyl"].betti == {0: 1, 2: 5}
    assert all(p.d == 2 for p in PRESETS.values())
    assert gamma_preset(4).betti == {0: 1, 2: 3}
    assert gamma_preset(1).betti == {0: 1}
    assert surface_preset(1, 0, 1).betti == {0: 1, 2: 1}


def test_preset_validation():
    for bad in (lambda: AlgebraPreset("x", 3, BettiTable({0: 1})),
                lambda: AlgebraPreset("x", 2, BettiTable({3: 1})),
                lambda: gamma_preset(0)):
        try:
            bad()
        except ValueError:
            pass
        else:
            assert False


def test_homology_wreath_examples():
    assert hh_homology_wreath(BettiTable({0: 1}), 3) == {0: 3}
    hom = BettiTable({0: 1, 1: 2, 2: 1})
    assert hh_homology_wreath(hom, 1) == hom
    assert hh_homology_wreath(hom, 0) == {0: 1}
    assert hh_homology_wreath(BettiTable({}), 4) == {}


def test_cohomology_wreath_examples():
    assert hh_cohomology_wreath(BettiTable({0: 1}), 2, 2) == {0: 1, 2: 1}
    assert hh_cohomology_wreath(BettiTable({0: 1, 2: 1}), 2, 2) == {0: 1, 2: 2, 4: 2}
    assert hh_cohomology_wreath(BettiTable({0: 1, 1: 2, 2: 1}), 2, 2) == {
        0: 1, 1: 2, 2: 3, 3: 4, 4: 2,
    }
    coh = BettiTable({0: 1, 1: 1})
    assert hh_cohomology_wreath(coh, 2, 1) == coh
    assert hh_cohomology_wreath(coh, 2, 0) == {0: 1}


def test_cohomology_wreath_support_bound():
    rng = random.Random(2)
    for _ in range(10):
        d = rng.choice([2, 4])
        coh = BettiTable({k: rng.randrange(3) for k in range(d + 1)})
        n = rng.randrange(5)
        assert hh_cohomology_wreath(coh, d, n).max_degree <= n * d


def test_validation_errors():
    ok = BettiTable({0: 1})
    for bad in (lambda: hh_cohomology_wreath(ok, 3, 2),
                lambda: hh_cohomology_wreath(BettiTable({4: 1}), 2, 2),
                lambda: hh_cohomology_wreath(ok, 2, -1),
                lambda: hh_homology_wreath(ok, -2),
                lambda: closed_form("nope", 3),
                lambda: gamma_series(0, 3),
                lambda: hilb_poincare(BettiTable({3: 1}), 2)):
        try:
            bad()
        except ValueError:
            pass
        else:
            assert False


def test_product_equals_sum_on_presets():
    for preset in PRESETS.values():
        p = generating_series_product(preset.betti, preset.d, 5)
        s = generating_series_sum(preset.betti, preset.d, 5)
        assert p == s, preset.name


def test_product_equals_sum_random_tables():
    rng = random.Random(23)
    for _ in range(12):
        d = rng.choice([2, 4])
        coh = BettiTable({k: rng.randrange(3) for k in range(d + 1)})
        p = generating_series_product(coh, d, 4)
        s = generating_series_sum(coh, d, 4)
        assert p == s


def test_closed_form_expansions():
    pa = closed_form("PA", 3)
    assert pa.q_coefficient(3) == {0: 1, 2: 1, 4: 1}
    paq = closed_form("PA_q", 2)
    assert paq.q_coefficient(2) == {0: 1, 1: 2, 2: 3, 3: 4, 4: 2}


def test_closed_forms_match_preset_products():
    for label, name in CLOSED_FORM_PRESETS.items():
        preset = PRESETS[name]
        cf = closed_form(label, 5)
        pr = generating_series_product(preset.betti, preset.d, 5)
        assert cf == pr, label


def test_series_low_order_rows():
    for preset in PRESETS.values():
        s = generating_series_sum(preset.betti, preset.d, 3)
        assert s.q_coefficient(0) == {0: 1}
        assert s.q_coefficient(1) == preset.betti.dims()


def test_gamma_series():
    assert gamma_series(1, 5) == closed_form("PA", 5)
    assert gamma_series(2, 5) == closed_form("PB", 5)
    g3 = gamma_series(3, 4)
    pr = generating_series_product(BettiTable({0: 1, 2: 2}), 2, 4)
    assert g3 == pr


def test_duality_reversal():
    # cohomology table reversed about degree n*d = homology of the
    # reversed input table
    rng = random.Random(31)
    for _ in range(10):
        d = rng.choice([2, 4])
        n = rng.randrange(1, 5)
        coh = BettiTable({k: rng.randrange(3) for k in range(d + 1)})
        dual = BettiTable({d - k: v for k, v in coh.dims().items()})
        cw = hh_cohomology_wreath(coh, d, n)
        hw = hh_homology_wreath(dual, n)
        reversed_cw = BettiTable({n * d - k: v for k, v in cw.dims().items()})
        assert reversed_cw == hw


def test_hilb_poincare():
    assert hilb_poincare(BettiTable({0: 1}), 3) == {0: 1, 2: 1, 4: 1}
    assert hilb_poincare(BettiTable({0: 1}), 1) == {0: 1}
    assert hilb_poincare(BettiTable({0: 1, 2: 1}), 2) == {0: 1, 2: 2, 4: 2}


def test_hilb_partition_statistic():
    # coefficient of t^{2(n-l)} in the n-th polynomial counts partitions
    # of n with l parts
    for n in range(1, 9):
        table = hilb_poincare(BettiTable({0: 1}), n).dims()
        by_length = count_by_length(n)
        expected = {2 * (n - l): c for l, c in by_length.items()}
        assert table == expected


def test_deformation_counts():
    assert deformation_parameter_count(BettiTable({0: 1}), 2, 2) == 1
    assert deformation_parameter_count(BettiTable({0: 1, 1: 1}), 2, 2) == 1
    assert deformation_parameter_count(BettiTable({0: 1, 1: 2, 2: 1}), 2, 2) == 3
    assert deformation_parameter_count(BettiTable({0: 1, 2: 5}), 2, 2) == 6
    assert deformation_parameter_count(BettiTable({0: 1}), 4, 2) == 0
    # stable in n
    for n in range(2, 6):
        assert deformation_parameter_count(BettiTable({0: 1, 1: 2, 2: 1}), 2, n) == 3


def test_deformation_count_closed_form():
    # degree-2 entry = b2 + C(b1,2) + 1 when d=2 (the +1 drops for d>2)
    rng = random.Random(41)
    for _ in range(10):
        b1, b2 = rng.randrange(4), rng.randrange(4)
        coh = BettiTable({0: 1, 1: b1, 2: b2})
        got = deformation_parameter_count(coh, 2, 3)
        assert got == b2 + b1 * (b1 - 1) // 2 + 1


def test_deformation_count_validation():
    for bad in (lambda: deformation_parameter_count(BettiTable({0: 2}), 2, 2),
                lambda: deformation_parameter_count(BettiTable({0: 1}), 2, 1)):
        try:
            bad()
        except ValueError:
            pass
        else:
            assert False


def test_series_default_t_bound():
    s = generating_series_sum(BettiTable({0: 1, 2: 1}), 2, 3)
    assert isinstance(s, BiSeries)
    assert s.t_bound == 6
    s4 = generating_series_product(BettiTable({0: 1, 4: 1}), 4, 2)
    assert s4.t_bound == 8
