#include "qoc/qoc.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qoc;

TEST_CASE("grammar shapes") {
    ExprPtr e = parse_expr("bT(1)^2 + p2");
    REQUIRE(e->k == Expr::K::Sum);
    REQUIRE(e->kids.size() == 2);
    CHECK(e->kids[0]->k == Expr::K::Pow);
    CHECK(e->kids[0]->base->k == Expr::K::BT);
    CHECK(e->kids[0]->exp == 2);
    CHECK(e->kids[1]->k == Expr::K::Gen);
    CHECK(e->kids[1]->name == "p2");

    ExprPtr prod = parse_expr("e4*e4");
    REQUIRE(prod->k == Expr::K::Prod);
    CHECK(prod->kids.size() == 2);

    ExprPtr b = parse_expr("b(c2*c4)");
    REQUIRE(b->k == Expr::K::B);
    CHECK(b->arg->k == Expr::K::Prod);

    // whitespace insensitivity and precedence ^ > * > +
    CHECK(print_expr(parse_expr("  th ^2*  c2+ 1 ")) == "th^2*c2 + 1");
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse_expr("p2 + q7");
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 5);
    }
    CHECK_THROWS_AS(parse_expr("b(c2"), parse_error);
    CHECK_THROWS_AS(parse_expr("c2 +"), parse_error);
    CHECK_THROWS_AS(parse_expr("c2 c3"), parse_error);
    CHECK_THROWS_AS(parse_expr("th^"), parse_error);
}

TEST_CASE("print and parse round-trip") {
    for (const char* src :
         {"th", "c2^2 + 2*c4", "b(c2)*bT(c2*c4)", "H(c2)*e4", "(p2 + e4)^2",
          "bT(1)^3 + bT(c2)", "1 + 2*th"}) {
        ExprPtr e = parse_expr(src);
        CHECK(expr_equal(e, parse_expr(print_expr(e))));
    }
    CHECK(suites::expr_roundtrip_suite(SuiteParams{}).ok);
}

TEST_CASE("evaluation in the chow theories") {
    EvalConfig ch{Theory::Ch, 4, WittModel{Field::RealClosed}};
    Space s = Space::bslnc(4);
    PolyF2 th = PolyF2::generator(s, s.theta_index());
    CHECK(*eval_string("th^2", ch).ch == th * th);
    CHECK(eval_string("c1", ch).ch->is_zero());  // c1 = 2 th = 0 mod 2

    EvalConfig chow{Theory::Chow, 4, WittModel{Field::RealClosed}};
    CHECK(*eval_string("c1", chow).chow ==
          PolyZ::generator(s, s.theta_index()).scaled(2));
    CHECK_THROWS_AS(eval_string("c7", chow), input_error);
    CHECK_THROWS_AS(eval_string("p2", chow), input_error);
}

TEST_CASE("evaluation in icoh matches the example relation") {
    EvalConfig cfg{Theory::ICoh, 4, WittModel{Field::RealClosed}};
    Value lhs = eval_string("bT(c2)*bT(c2)", cfg);
    Value rhs = eval_string("b(c2)^2 + bT(1)^2*p2", cfg);
    CHECK(lhs == rhs);
    CHECK(eval_string("bT(c2)^2 + b(c2)^2 + bT(1)^2*p2", cfg).is_zero());

    // e5 resolves to the Bockstein b(c4) for odd rank
    EvalConfig cfg5{Theory::ICoh, 5, WittModel{Field::RealClosed}};
    Value e5 = eval_string("e5", cfg5);
    Value bc4 = eval_string("b(c4)", cfg5);
    CHECK(e5 == bc4);
}

TEST_CASE("evaluation in chw") {
    EvalConfig cfg{Theory::CHW, 4, WittModel{Field::RealClosed}};
    Value v = eval_string("H(c2)*e4", cfg);
    REQUIRE(v.chw.size() == 1);
    const ChowWittClass& cls = v.chw.begin()->second;
    Space s = Space::bslnc(4);
    CHECK(cls.i_part().is_zero());
    CHECK(cls.ch_part() ==
          (PolyZ::generator(s, s.c_index(2)) * PolyZ::generator(s, s.c_index(4))).scaled(2));

    // sums of different degrees stay separate components
    Value mixed = eval_string("p2 + e4*e4", cfg);
    CHECK(mixed.chw.size() == 2);

    CHECK_THROWS_AS(eval_string("e5", cfg), input_error);
    CHECK_THROWS_AS(eval_string("th", cfg), input_error);
}

TEST_CASE("symbolic model refuses coefficient arithmetic") {
    EvalConfig cfg{Theory::Witt, 4, WittModel{Field::Symbolic}};
    CHECK_NOTHROW(eval_string("p2*e4", cfg));
    CHECK_THROWS_AS(eval_string("p2 + p2", cfg), unsupported_error);
}
