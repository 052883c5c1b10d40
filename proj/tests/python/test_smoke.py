import json
from fractions import Fraction

import pytest

import fuchscount as fc


def test_measure_of_hurwitz_signature():
    assert fc.measure("o:g=0:m=2,3,7") == Fraction(1, 42)


def test_validate_rejects_euclidean_triangle():
    valid, reasons = fc.validate("o:g=0:m=2,3,6")
    assert not valid
    assert reasons


def test_thresholds_missing_entries_are_none():
    th = fc.thresholds("o:g=0:m=2,3,7")
    assert th["mu"] == Fraction(1, 42)
    assert th["N2"] is None


def test_degrees_square_sum_is_group_order():
    assert sum(d * d for d in fc.character_degrees("A(5)")) == 60


def test_formula_matches_oracle():
    for sig in ["o:g=0:m=2,2,2", "n:g=1:m=2,2", "o:g=1:m=3"]:
        assert fc.hom_count(sig, "S(4)") == fc.hom_count(sig, "S(4)", method="oracle")


def test_surface_group_into_c3():
    assert fc.hom_count("o:g=2", "C(3)") == 81


def test_hurwitz_generation_of_psl27():
    epi, hom = fc.epi_count("o:g=0:m=2,3,7", "PSL(2,7)")
    assert 0 < epi <= hom


def test_alpha_example():
    assert fc.alpha("GL(4):2,2") == (Fraction(1, 2), "(2|2)")
    assert fc.alpha("GL(4):2,2")[0] <= fc.alpha_bound("GL(4):2,2")


def test_dim_jm_so14():
    assert fc.dim_jm("SO", 14, 7) == 78


def test_errors_raise():
    with pytest.raises(fc.FuchsError):
        fc.measure("not a signature")


def test_cli_in_process():
    status, out, err = fc.run_cli(["alpha", "--levi", "GL(4):2,2"])
    assert status == 0, err
    report = json.loads(out)
    assert report["alpha"] == "1/2"
    assert report["witness"] == "(2|2)"
