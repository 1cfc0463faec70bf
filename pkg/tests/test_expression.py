import numpy as np
import numpy.testing as npt
import pytest

from plaplace.datatypes import (
    ExpressionEvaluationError,
    ExpressionSyntaxError,
    QuadratureAccuracyError,
    UnknownIdentifierError,
)
from plaplace.nonlinearity import (
    ExpressionNonlinearity,
    GrowthData,
    evaluate,
    free_variables,
    parse_expression,
    to_source,
)


def _value(text, k=1.0, x=0.0, u=0.0):
    return float(evaluate(parse_expression(text), k, x, u))


def test_precedence_and_associativity():
    assert _value("1 + 2 * 3") == 7.0
    assert _value("(1 + 2) * 3") == 9.0
    assert _value("2 ^ 3 ^ 2") == 512.0
    assert _value("-2 ^ 2") == -4.0
    assert _value("2 * -3") == -6.0
    assert _value("8 / 4 / 2") == 1.0
    assert _value("10 - 4 - 3") == 3.0


def test_variables_and_functions():
    assert _value("k * x + u", k=2.0, x=3.0, u=1.0) == 7.0
    assert _value("powq(x, 3)", x=-2.0) == -8.0
    assert _value("abs(x) + cos(0) + exp(0) + sin(0)", x=-1.5) == 3.5
    assert free_variables(parse_expression("sin(u) * 2 + k")) == {"u", "k"}


ROUND_TRIP_CORPUS = (
    "1 + 2 * x",
    "-x ^ 2",
    "powq(x - u, 1.5) / k",
    "2 ^ 3 ^ 2",
    "-powq(x, 3) + 1 + 0.5 * sin(u)",
    "x - u - k",
    "x / k / 2",
    "(x + u) * (x - u)",
    "exp(-x ^ 2) * cos(u)",
    "abs(x) ^ 1.5",
    "-(-x)",
    "-(x * -u)",
    "sin(cos(x)) + exp(sin(u))",
    "k ^ 2 * x ^ 3 - u",
    "1 / (1 + x ^ 2)",
    "powq(sin(x), 3) - powq(abs(u), 0.5)",
    "-2 ^ 2 + x",
    "abs(x - 1) * abs(u + 1) / (k + 1)",
    "(x) + ((u))",
    "3 - 2 * (x - 4 * (u + 1))",
)


def test_to_source_reparses(rng):
    ks = rng.integers(1, 11, 100).astype(float)
    xs = rng.uniform(-3.0, 3.0, 100)
    us = rng.uniform(-3.0, 3.0, 100)
    for text in ROUND_TRIP_CORPUS:
        tree = parse_expression(text)
        again = parse_expression(to_source(tree))
        assert again == tree
        npt.assert_array_equal(evaluate(again, ks, xs, us), evaluate(tree, ks, xs, us))


def test_vectorized_evaluation():
    ks = np.arange(1, 4)[:, None]
    xs = np.linspace(-1, 1, 5)[None, :]
    out = evaluate(parse_expression("k * x"), ks, xs, 0.0)
    assert out.shape == (3, 5)
    npt.assert_allclose(out[2], 3 * xs[0])
    assert evaluate(parse_expression("2"), ks, xs, 0.0).shape == (3, 5)


def test_syntax_errors_carry_position():
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_expression("1 +")
    assert err.value.position == 3

    with pytest.raises(ExpressionSyntaxError, match="position 2"):
        parse_expression("x $ 2")
    with pytest.raises(ExpressionSyntaxError):
        parse_expression("")
    with pytest.raises(ExpressionSyntaxError):
        parse_expression("(x + 1")
    with pytest.raises(ExpressionSyntaxError):
        parse_expression("powq(x)")
    with pytest.raises(ExpressionSyntaxError):
        parse_expression("sin + 1")


def test_unknown_identifiers():
    with pytest.raises(UnknownIdentifierError) as err:
        parse_expression("x + y")
    assert err.value.position == 4
    with pytest.raises(UnknownIdentifierError):
        parse_expression("tan(x)")


def test_evaluation_errors():
    with pytest.raises(ExpressionEvaluationError):
        _value("1 / x", x=0.0)
    with pytest.raises(ExpressionEvaluationError):
        _value("x ^ -1", x=0.0)
    with pytest.raises(ExpressionEvaluationError):
        _value("x ^ 0.5", x=-1.0)
    with pytest.raises(ExpressionEvaluationError):
        _value("powq(x, 0)", x=0.0)


def test_primitive_by_quadrature():
    n = ExpressionNonlinearity("1 - x^3")
    assert n.F(1, 2.0, 0.0) == pytest.approx(2.0 - 4.0, abs=1e-10)
    assert n.F(1, 0.0, 0.0) == 0.0


def test_supplied_primitive_is_anchored():
    n = ExpressionNonlinearity("cos(x)", F="sin(x) + 5")
    assert n.F(1, np.pi / 2, 0.0) == pytest.approx(1.0)
    assert n.F(1, 0.0, 0.0) == 0.0


def test_quadrature_accuracy_error():
    n = ExpressionNonlinearity("sin(1 / (x + 0.0001))")
    with pytest.raises(QuadratureAccuracyError):
        n.F(1, 10.0, 0.0)


def test_growth_and_nodes():
    g = GrowthData(3, 1.0, 0.0, 3.0)
    n = ExpressionNonlinearity("powq(x, 3)", growth=g)
    assert n.T == 3
    assert n.depends_on_x
    assert not ExpressionNonlinearity("sin(u)").depends_on_x
    with pytest.raises(ValueError):
        n.f(4, 0.0, 0.0)
    assert n.describe() == {"family": "expression", "f": "powq(x, 3)", "growth": g.to_dict()}
