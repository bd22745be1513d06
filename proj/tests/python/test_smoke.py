from fractions import Fraction

import pytest

import hompoisson as hp


def test_matrix_commutator_passes():
    a = hp.commutator_poisson(hp.matrix_algebra(2))
    report = hp.check_hom_poisson(a)
    assert report["passed"]
    assert [p["identity"] for p in report["parts"]] == [
        "antisymmetry",
        "hom-jacobi",
        "hom-associativity",
        "hom-leibniz",
    ]


def test_heisenberg_twist_is_multiplicative():
    p = hp.catalog("heisenberg-p31", {"zeta": "1"})
    beta = hp.heisenberg_morphism("2", "0", "0", "3", "1/2", "-1")
    assert hp.matrix(beta)[2][2] == Fraction(6)
    t = hp.yau_twist(p, beta)
    assert hp.check_hom_poisson(t)["passed"]
    assert hp.check_multiplicative(t)["passed"]


def test_polarization_round_trip():
    p = hp.catalog("heisenberg-p32")
    assert hp.polarize(hp.depolarize(p)) == p
    assert hp.check_admissible(hp.depolarize(p))["passed"]


def test_corrupted_algebra_reports_witness():
    spec = hp.catalog("heisenberg-p31").to_spec() + "bracket 1 1 3 1\n"
    report = hp.check_hom_poisson(hp.parse_spec(spec))
    assert not report["passed"]
    w = report["parts"][0]["witnesses"][0]
    assert w["labels"] == ["X", "X"]
    assert w["residual"] == ["0", "0", "2"]


def test_free_poly_witness():
    r = hp.run_witness("free-poly")
    assert r["passed"]
    assert r["values"]["associator(X, X, alpha(X))"] == "X + 2"


def test_power_generic_element():
    d = hp.depolarize(hp.yau_twist(hp.catalog("heisenberg-p31"), hp.heisenberg_morphism("2", "0", "0", "3", "0", "0")))
    for n in range(3, 7):
        assert hp.check_nth_power_assoc(d, n)["passed"]
    assert hp.check_criterion_34(d)["passed"]


def test_structure_constants_are_exact():
    p = hp.catalog("heisenberg-p31", {"zeta": "1/2"})
    mu = hp.structure_constants(p.mu_entries())
    assert mu == {(0, 1, 2): Fraction(1, 2), (1, 0, 2): Fraction(1, 2)}


def test_errors_are_typed():
    with pytest.raises(hp.ParseError):
        hp.parse_spec("hompoisson-algebra 1\ndim 2\nmu 1 2 3 1\n")
    with pytest.raises(hp.Error):
        hp.catalog("no-such-algebra")


def test_run_command_exit_codes():
    code, out, _ = hp.run_command(["witness", "sl2", "--param", "lambda=2"])
    assert code == 0 and "2*e*h^2" in out
    code, _, err = hp.run_command(["check", "/nonexistent.spec"])
    assert code == 2 and "cannot open" in err
