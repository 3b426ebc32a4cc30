"""Text formats: polynomial expressions, manifold files, map files."""

import pytest

from segrekit.gaussian import GaussianRational as QI
from segrekit.parsing import (ParseError, parse_manifold_text, parse_map_text,
                              parse_poly)
from segrekit.poly import VarTable

TABLE = VarTable.make(["z1", "z2"])


def test_constants_and_i():
    p = parse_poly("1/2 + 3*i", TABLE)
    v = p.eval({})
    assert str(v.re) == "1/2" and str(v.im) == "3"


def test_conjugate_variable():
    p = parse_poly("z1*~z1 - 1", TABLE)
    assert p.eval({"z1": QI.from_value(2), "~z1": QI.from_value(2)}).re == 3


def test_powers_and_parens():
    p = parse_poly("(z1 + z2)^2", TABLE)
    q = parse_poly("z1^2 + 2*z1*z2 + z2^2", TABLE)
    assert p == q


def test_unary_minus():
    assert parse_poly("-z1 + z1", TABLE).is_zero()


def test_division_by_constant_only():
    p = parse_poly("z1/2", TABLE)
    assert str(p) == "1/2*z1"
    with pytest.raises(ParseError):
        parse_poly("1/z1", TABLE)


def test_unknown_variable():
    with pytest.raises(ParseError):
        parse_poly("w1 + 1", TABLE)


def test_unbalanced_parens():
    with pytest.raises(ParseError):
        parse_poly("(z1 + 1", TABLE)


def test_manifold_format():
    spec = parse_manifold_text("""
    # unit sphere
    vars z1 z2
    rho: z1*~z1 + z2*~z2 - 1
    """)
    assert spec.zvars == ("z1", "z2")
    assert len(spec.rho_sources) == 1
    assert spec.chart == "affine"


def test_manifold_projective_chart():
    spec = parse_manifold_text("""
    vars z1 z2
    rho: 1 + z1^2*~z1^2 - z2^2*~z2^2
    chart: projective 0
    """)
    assert spec.chart == 0


def test_manifold_missing_rho():
    with pytest.raises(ParseError):
        parse_manifold_text("vars z1 z2\n")


def test_map_format():
    spec = parse_map_text("""
    vars z1 z2
    component: z1^2
    component: z2^2
    """)
    assert len(spec.components) == 2
    assert spec.components[0][1] is None


def test_map_with_denominator():
    spec = parse_map_text("""
    vars z1 z2
    component: z1 / z2
    """)
    num, den = spec.components[0]
    assert num.strip() == "z1" and den.strip() == "z2"


def test_map_missing_vars():
    with pytest.raises(ParseError):
        parse_map_text("component: z1\n")
