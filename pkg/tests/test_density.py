import json
import random

import pytest

from cmparity import (
    BadBaseError,
    Parity,
    RatMatrix2,
    TauExact,
    coverage_report_from_points,
    emit,
    enumerate_real_odd_cm,
    j_numeric,
    moebius,
    parity_of_tau,
    parity_transport_check,
)
from cmparity.density import (
    DensityConfig,
    Mode,
    _draw_matrix,
    sample_complex,
    sample_even,
    sample_odd,
)

BASE_ODD = TauExact(1, -1, 1)


def odd_cfg(n, base=BASE_ODD):
    return DensityConfig(mode=Mode.ODD_REAL, base=base, denom_bound=n)


def even_cfg(base, n):
    return DensityConfig(mode=Mode.EVEN_REAL, base=base, denom_bound=n)


def test_odd_single_pair_is_base():
    report = sample_odd(odd_cfg(1))
    assert len(report.samples) == 1
    s = report.samples[0]
    assert s.label == "1,1"
    assert abs(s.j.real) < 1e-6  # the base point itself, j = 0
    assert s.degree == 1


def test_odd_n9():
    report = sample_odd(odd_cfg(9))
    assert report.all_below_1728
    assert all(s.j.real < 1728 for s in report.samples)
    assert all(s.parity is Parity.ODD for s in report.samples)
    assert all(s.branch == "T2" for s in report.samples)
    best = max(report.samples, key=lambda s: s.j.real)
    assert best.label == "3,5"
    assert all(s.degree % 2 == 1 for s in report.samples)


def test_odd_max_strictly_increases():
    maxima = [sample_odd(odd_cfg(n)).max_j for n in (9, 99)]
    assert maxima[0] < maxima[1] < 1728


def test_odd_nesting():
    small = sample_odd(odd_cfg(3))
    big = sample_odd(odd_cfg(9))
    small_labels = {s.label for s in small.samples}
    big_labels = {s.label for s in big.samples}
    assert small_labels <= big_labels
    assert big.min_j <= small.min_j
    assert big.max_j >= small.max_j


def test_odd_parity_transport_of_family_matrices():
    # each family member comes from an explicit upper-triangular matrix
    from cmparity import odd_isogeny

    report = sample_odd(odd_cfg(7))
    for s in report.samples:
        m, n = (int(v) for v in s.label.split(","))
        matrix = RatMatrix2.from_ints(m, (n - m) // 2, 0, n)
        assert parity_transport_check(matrix, BASE_ODD)
        assert odd_isogeny(matrix, BASE_ODD).degree == s.degree
        moved = moebius(matrix, BASE_ODD)
        assert abs(j_numeric(complex(moved)) - s.j) <= 1e-9 * (1 + abs(s.j))


def test_odd_bad_bases():
    with pytest.raises(BadBaseError):
        sample_odd(odd_cfg(5, base=TauExact(1, 0, 1)))  # even base
    with pytest.raises(BadBaseError):
        sample_odd(odd_cfg(5, base=TauExact(1, 1, 2)))  # odd disc but real part -1/2
    # a different odd base of the right shape works fine
    report = sample_odd(odd_cfg(3, base=TauExact(1, -1, 2)))
    assert report.all_below_1728


def test_even_spread_for_small_fields():
    for base in (TauExact(1, 0, 1), TauExact(1, 0, 2), TauExact(1, 0, 3), TauExact(1, 0, 7)):
        report = sample_even(even_cfg(base, 9))
        res = [s.j.real for s in report.samples]
        assert any(r >= 1728 for r in res)
        assert any(r < 1728 for r in res)
        assert all(s.parity is Parity.EVEN for s in report.samples)
        assert not report.all_below_1728


def test_even_includes_unit_point():
    report = sample_even(even_cfg(TauExact(1, 0, 1), 9))
    by_label = {s.label: s for s in report.samples}
    assert abs(by_label["T1:1,1"].j.real - 1728) < 1e-6  # tau = i
    # tau = 1/2 + i has the exact triple (4, -4, 5) of discriminant -64
    expected = j_numeric(complex(TauExact(4, -4, 5)))
    assert abs(by_label["T2:1,1"].j - expected) <= 1e-9 * (1 + abs(expected))


def test_even_line_restriction_mod_4():
    # d = -3 is 1 mod 4: line samples use odd m, n only
    report = sample_even(even_cfg(TauExact(1, 0, 3), 8))
    for s in report.samples:
        if s.branch == "T2":
            m, n = (int(v) for v in s.label.split(":")[1].split(","))
            assert m % 2 == 1 and n % 2 == 1
    # d = -1 allows every pair
    report = sample_even(even_cfg(TauExact(1, 0, 1), 4))
    labels = {s.label for s in report.samples}
    assert "T2:2,1" in labels


def test_even_parity_matches_base():
    base = TauExact(1, 0, 3)
    report = sample_even(even_cfg(base, 5))
    assert all(s.parity is parity_of_tau(base) for s in report.samples)


def test_even_nesting():
    base = TauExact(1, 0, 2)
    small = sample_even(even_cfg(base, 3))
    big = sample_even(even_cfg(base, 6))
    assert {s.label for s in small.samples} <= {s.label for s in big.samples}
    assert big.min_j <= small.min_j
    assert big.max_j >= small.max_j


def test_even_rejects_odd_base():
    with pytest.raises(BadBaseError):
        sample_even(even_cfg(TauExact(1, -1, 1), 5))


def test_complex_zero_draws():
    report = sample_complex(DensityConfig(mode=Mode.COMPLEX, base=BASE_ODD, draws=0, seed=5))
    assert report.samples == []
    assert report.min_j is None and report.max_j is None
    assert emit(report, "csv") == b"label,re_j,im_j,branch,parity,degree\n"


def test_complex_single_draw_matches_manual_replay():
    cfg = DensityConfig(mode=Mode.COMPLEX, base=BASE_ODD, draws=1, seed=1234)
    report = sample_complex(cfg)
    assert len(report.samples) == 1
    matrix = _draw_matrix(random.Random(1234))
    expected = j_numeric(complex(moebius(matrix, BASE_ODD)))
    got = report.samples[0].j
    assert abs(got - expected) <= 1e-12 * (1 + abs(expected))


def test_complex_deterministic_and_parity_checked():
    cfg = DensityConfig(mode=Mode.COMPLEX, base=BASE_ODD, draws=300, seed=42)
    r1 = sample_complex(cfg)
    r2 = sample_complex(cfg)
    assert emit(r1, "csv") == emit(r2, "csv")
    assert emit(r1, "json") == emit(r2, "json")
    assert len(r1.samples) == 300
    assert all(s.degree % 2 == 1 for s in r1.samples)
    assert all(s.parity is Parity.ODD for s in r1.samples)


def test_emit_single_sample():
    report = sample_odd(odd_cfg(1))
    text = emit(report, "csv").decode()
    lines = text.strip().split("\n")
    assert lines[0] == "label,re_j,im_j,branch,parity,degree"
    assert len(lines) == 2
    assert lines[1].startswith('"1,1",')


def test_emit_enumeration_rows_sorted_by_divisor():
    report = coverage_report_from_points(enumerate_real_odd_cm(-15))
    lines = emit(report, "csv").decode().strip().split("\n")
    assert len(lines) == 3
    assert lines[1].startswith("beta=1,")
    assert lines[2].startswith("beta=3,")


def test_emit_json_fields():
    report = sample_odd(odd_cfg(3))
    payload = json.loads(emit(report, "json"))
    assert payload["mode"] == "odd"
    assert payload["sample_count"] == len(report.samples)
    assert payload["all_below_1728"] is True
    assert payload["threads"] >= 1
    assert payload["branch_counts"] == {"T2": len(report.samples)}
    assert all(set(s) == {"label", "re_j", "im_j", "branch", "parity", "degree"} for s in payload["samples"])


def test_emit_rejects_unknown_format():
    report = sample_odd(odd_cfg(1))
    with pytest.raises(ValueError):
        emit(report, "yaml")


def test_nonfinite_json_is_strict():
    # deep-cusp values must not produce bare Infinity tokens
    report = sample_odd(odd_cfg(199))
    data = emit(report, "json")
    json.loads(data)
    assert b"Infinity" not in data


def test_thread_count_does_not_change_output(monkeypatch):
    cfg = odd_cfg(7)
    monkeypatch.setenv("CMPARITY_THREADS", "1")
    single = emit(sample_odd(cfg), "csv")
    monkeypatch.setenv("CMPARITY_THREADS", "4")
    pooled = sample_odd(cfg)
    assert pooled.threads == 4
    assert emit(pooled, "csv") == single


def test_thread_count_env_validation(monkeypatch):
    from cmparity.density import thread_count

    monkeypatch.setenv("CMPARITY_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("CMPARITY_THREADS", "0")
    with pytest.raises(ValueError):
        thread_count()


def test_config_validation():
    with pytest.raises(ValueError):
        DensityConfig(mode=Mode.ODD_REAL, base=BASE_ODD, denom_bound=0)
    with pytest.raises(ValueError):
        DensityConfig(mode=Mode.ODD_REAL, base=BASE_ODD, bin_width=-1.0)
    with pytest.raises(ValueError):
        DensityConfig(mode=Mode.COMPLEX, base=BASE_ODD, draws=-1)
    with pytest.raises(ValueError):
        sample_odd(DensityConfig(mode=Mode.COMPLEX, base=BASE_ODD))
