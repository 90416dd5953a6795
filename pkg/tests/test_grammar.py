"""
Tests for the expression grammar: parsing, printing and evaluation
"""

from fractions import Fraction

import pytest

from gwpower.cli.grammar import (
    Angle,
    Atom,
    BinOp,
    Hyperbolic,
    Neg,
    Num,
    Sym,
    parse_expression,
    parse_gw,
    parse_variety,
    print_tree,
    tokenize,
)
from gwpower.exceptions import InvalidArgument, ParseError
from gwpower.gw.element import GwElement
from gwpower.motivic.atoms import SymCurve
from gwpower.motivic.classes import VarietyClass
from gwpower.utils.sampling import case_rng


def random_gw_tree(rng, depth):
    if depth == 0 or rng.random() < 0.3:
        choice = int(rng.integers(0, 3))
        if choice == 0:
            return Num(int(rng.integers(0, 5)))
        if choice == 1:
            return Angle(Fraction(int(rng.choice([-6, -3, -1, 1, 2, 5, 7]))))
        return Hyperbolic()
    if rng.random() < 0.15:
        return Neg(random_gw_tree(rng, depth - 1))
    op = str(rng.choice(["+", "-", "*"]))
    return BinOp(op, random_gw_tree(rng, depth - 1), random_gw_tree(rng, depth - 1))


def random_variety_tree(rng, depth):
    if depth == 0 or rng.random() < 0.3:
        choice = int(rng.integers(0, 5))
        if choice == 0:
            return Atom("Pt")
        if choice == 1:
            return Atom(str(rng.choice(["A", "P"])), (int(rng.integers(0, 4)),))
        if choice == 2:
            return Atom("Et", (Fraction(int(rng.choice([-1, 2, 3]))), Fraction(5)))
        if choice == 3:
            return Atom("Curve", (int(rng.integers(0, 4)),))
        return Sym(int(rng.integers(0, 4)), Atom("Gm"))
    op = str(rng.choice(["+", "-", "*"]))
    return BinOp(op, random_variety_tree(rng, depth - 1), random_variety_tree(rng, depth - 1))


class TestTokenizer:
    def test_positions(self):
        tokens = tokenize("<2> + H")
        assert [t.type for t in tokens] == ["<", "INT", ">", "+", "IDENT", "end"]
        assert tokens[4].position == 6

    def test_rejects_unknown_character(self):
        with pytest.raises(ParseError) as e:
            tokenize("<2> $ H")
        assert e.value.position == 4


class TestParser:
    def test_gw_precedence(self):
        tree = parse_expression("<2> + <-1> - H", "gw")
        assert tree == BinOp("-", BinOp("+", Angle(Fraction(2)), Angle(Fraction(-1))), Hyperbolic())

    def test_multiplication_binds_tighter(self):
        assert parse_expression("1 + 2*H", "gw") == BinOp("+", Num(1), BinOp("*", Num(2), Hyperbolic()))

    def test_variety_expression(self):
        tree = parse_expression("Sym^2(Et(2,3) * A^1)", "variety")
        assert tree == Sym(2, BinOp("*", Atom("Et", (Fraction(2), Fraction(3))), Atom("A", (1,))))

    def test_curve_keyword_is_optional(self):
        assert parse_expression("Curve(g=2)", "variety") == parse_expression("Curve(2)", "variety")

    def test_zero_square_class(self):
        with pytest.raises(ParseError, match="zero square class"):
            parse_expression("<0>", "gw")

    def test_fraction(self):
        assert parse_expression("<1/2>", "gw") == Angle(Fraction(1, 2))

    @pytest.mark.parametrize(
        "text, kind", [("<2> +", "gw"), ("P^2 + H", "variety"), ("H <2>", "gw"), ("Et(2", "variety")]
    )
    def test_errors_carry_expected_tokens(self, text, kind):
        with pytest.raises(ParseError) as e:
            parse_expression(text, kind)
        assert e.value.expected
        assert "expected one of" in str(e.value)

    def test_angle_is_not_a_variety(self):
        with pytest.raises(ParseError):
            parse_expression("<2>", "variety")

    def test_unknown_kind(self):
        with pytest.raises(InvalidArgument):
            parse_expression("H", "motive")


class TestPrinter:
    def test_keeps_needed_parentheses(self):
        assert print_tree(parse_expression("2*(<1> + <3>)", "gw")) == "2*(<1> + <3>)"

    def test_drops_redundant_parentheses(self):
        assert print_tree(parse_expression("(<1>) + (2*H)", "gw")) == "<1> + 2*H"

    def test_right_nested_difference(self):
        assert print_tree(parse_expression("H - (<1> - <2>)", "gw")) == "H - (<1> - <2>)"

    def test_gw_round_trip(self, seed):
        for case in range(200):
            tree = random_gw_tree(case_rng(seed, case), 4)
            assert parse_expression(print_tree(tree), "gw") == tree

    def test_variety_round_trip(self, seed):
        for case in range(200):
            tree = random_variety_tree(case_rng(seed, case), 3)
            assert parse_expression(print_tree(tree), "variety") == tree


class TestEvaluation:
    def test_gw(self, Q):
        assert parse_gw("<1/2>", Q) == GwElement.of(Q, 2)
        assert parse_gw("H + <1>", Q) == GwElement.from_terms(Q, [(1, 2), (-1, 1)])
        assert parse_gw("-<3> * 2", Q) == GwElement.from_terms(Q, [(3, -2)])

    def test_variety(self, Q):
        assert parse_variety("P^2 - A^2", Q) == VarietyClass.projective(Q, 1)
        assert parse_variety("Gm + 1", Q) == VarietyClass.affine(Q, 1)

    def test_sym_of_curve_is_opaque(self, Q):
        assert parse_variety("Sym^2(Curve(g=2))", Q) == VarietyClass.opaque(Q, SymCurve(2, 2))

    def test_sym_of_fragment_class(self, Q):
        assert parse_variety("Sym^2(P^1)", Q) == VarietyClass.projective(Q, 2)

    def test_field_dependence(self, R):
        assert parse_gw("<5>", R) == GwElement.one(R)
