import pytest

from ftopa.algebra import make_algebra
from ftopa.expr import ExprError, evaluate, tokenize
from ftopa.ranges import DomainError, PRange, format_belief

M88 = make_algebra("8:{1,2,3,4,5,6,7,8}")
M83 = make_algebra("8:{1,7,8}")


@pytest.mark.parametrize("alg, text, expected", [
    (M88, "e2*e5/e5", "[e5,e1]"),
    (M88, "e2*(e5/e5)", "[e5,e2]"),
    (M83, "i[i[e3]]", "e3"),
    (M83, "e2 * e3", "e4"),
    (M83, "[e4,e2]*[e3,e2]", "[e6,e3]"),
    (M83, "e7/[e3,e2]", "[e7,e5]"),
    (M83, "i[e2*e6]", "e2"),
    (M83, "e4/e2/e2", "e2"),
])
def test_evaluate(alg, text, expected):
    assert format_belief(evaluate(alg, text)) == expected


def test_left_associative_chain():
    # e2 * e6 / e4 reads as (e2 * e6) / e4
    alg = make_algebra("8:{1,5,7,8}")
    assert evaluate(alg, "e2*e6/e4") == PRange.point(6)


@pytest.mark.parametrize("text", ["e2*", "(e2", "e2)", "i[e2", "[e2,e5]", "e9", "x", "e2 e3", ""])
def test_parse_errors(text):
    with pytest.raises(ExprError):
        evaluate(M83, text)


def test_domain_error():
    with pytest.raises(DomainError):
        evaluate(M83, "e2/e5")


def test_tokens():
    assert [k for k, _ in tokenize("i[e1]*(e2/[e3,e2])")] == [
        "inv", "val", "]", "*", "(", "val", "/", "[", "val", ",", "val", "]", ")"]
