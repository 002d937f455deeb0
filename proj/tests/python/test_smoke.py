import pytest

import skylr


def test_single_box_atom():
    assert skylr.poly_string("atom", [1, 0], 2) == "x1"
    assert skylr.atom([0, 1], 2) == {(0, 1): 1}


def test_character_is_sum_of_atoms():
    kappa = skylr.character([0, 1], 2)
    assert kappa == {(1, 0): 1, (0, 1): 1}


def test_schur_coefficients_are_python_ints():
    s = skylr.schur([2, 1], 3)
    assert s[(1, 1, 1)] == 2
    assert all(isinstance(c, int) for c in s.values())


def test_lrc_count_and_representatives():
    assert skylr.count_lrc([4, 3, 1, 2, 2], [3, 2, 1], [1, 2, 3]) == 4
    reps = skylr.lrc_representatives([4, 3, 1, 2, 2], [3, 2, 1], [1, 2, 3])
    assert len(reps) == 4
    assert all(r["basement"] == "large" for r in reps)
    assert "|" in skylr.render_filling(reps[0])


def test_classical_coefficient():
    assert skylr.coeff_classical([2, 1], [2, 1], [3, 2, 1]) == 2


def test_verify_report():
    report = skylr.verify("atom", [1, 0], [1], 2)
    assert report["pass"]
    assert report["identity_holds"] and report["coefficients_agree"]


def test_small_sweep_passes():
    passed, failed = skylr.sweep("qs", max_n=2, max_size=2, max_lambda=1)
    assert failed == 0 and passed > 0


def test_consistency_forms():
    assert skylr.consistency_sides([0, 1], [0, 0], [1], "derived") == (1, 1)
    lit = skylr.consistency_sides([0, 1], [0, 0], [1], "literal")
    assert lit[0] != lit[1]


def test_rem_k_and_words():
    assert skylr.rem_k([1, 0, 4, 2, 0, 1, 2, 3], 2) == [1, 0, 4, 2, 0, 1, 1, 3]
    assert skylr.is_regular_contre_lattice([3, 2, 3, 1, 3, 2, 1])
    assert not skylr.is_regular_contre_lattice([])


def test_errors_surface_as_value_errors():
    with pytest.raises(skylr.SkylrError):
        skylr.atom([1, -1], 2)
    with pytest.raises(ValueError):
        skylr.rem_k([1, 2], 3)
