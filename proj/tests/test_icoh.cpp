#include "qoc/qoc.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qoc;

namespace {

const WittModel kReal{Field::RealClosed};

PolyF2 gen(const Space& s, const std::string& name) {
    return PolyF2::generator(s, s.index_of(name));
}

}  // namespace

TEST_CASE("rho on free generators") {
    int n = 4;
    Space s = Space::bslnc(n);
    Space ws = Space::witt_free(n);
    WittPoly p2 = WittPoly::generator(kReal, n, ws.p_index(1));
    CHECK(rho_free(p2, s) == gen(s, "c2") * gen(s, "c2"));
    WittPoly e4 = WittPoly::generator(kReal, n, ws.e_index());
    CHECK(rho_free(e4, s) == gen(s, "c4"));

    // torsion class named bT(1)^2 reduces to th^2
    TorsionClass t = bockstein(gen(s, "th"), Twist::O);  // beta(th), canon th^2
    ICohClass cls = ICohClass::from_torsion(kReal, t);
    CHECK(rho(cls) == gen(s, "th") * gen(s, "th"));
}

TEST_CASE("bockstein basics") {
    Space s = Space::bslnc(4);
    CHECK(bockstein(gen(s, "c2"), Twist::O).canonical_form() == gen(s, "c3"));
    CHECK(bockstein(PolyF2::one(s), Twist::T).canonical_form() == gen(s, "th"));
    CHECK(bockstein(gen(s, "th") * gen(s, "th"), Twist::O).is_zero());
    CHECK(bockstein(PolyF2::one(s), Twist::O).is_zero());  // beta(1) = 0
}

TEST_CASE("lift_torsion solves against the square") {
    Space s = Space::bslnc(4);
    TorsionClass t1 = lift_torsion(gen(s, "th"), Twist::T);
    CHECK(t1.degree() == 1);
    CHECK(t1.canonical_form() == gen(s, "th"));

    TorsionClass t3 = lift_torsion(gen(s, "c3"), Twist::O);
    CHECK(t3.canonical_form() == gen(s, "c3"));

    try {
        lift_torsion(gen(s, "c2"), Twist::O);
        FAIL("expected not_torsion_error");
    } catch (const not_torsion_error& e) {
        CHECK(e.residual == "c2");
    }
}

TEST_CASE("products through reduce-and-lift") {
    int n = 4;
    Space s = Space::bslnc(n);
    ICohClass bTc2 = ICohClass::from_torsion(kReal, bockstein(gen(s, "c2"), Twist::T));
    ICohClass bc2 = ICohClass::from_torsion(kReal, bockstein(gen(s, "c2"), Twist::O));
    ICohClass bT1 = ICohClass::from_torsion(kReal, bockstein(PolyF2::one(s), Twist::T));
    ICohClass p2 = ICohClass::from_free(WittPoly::generator(kReal, n, 0));

    // beta_T(c2)^2 = beta(c2)^2 + beta_T(1)^2 p2
    ICohClass lhs = icoh_mul(bTc2, bTc2);
    ICohClass rhs = icoh_mul(bc2, bc2) + icoh_mul(icoh_mul(bT1, bT1), p2);
    CHECK(lhs == rhs);
    CHECK(lhs.twist() == Twist::O);

    // p2 * beta_T(1) is torsion with rho-image c2^2 th
    ICohClass m = icoh_mul(p2, bT1);
    CHECK(m.free_part().is_zero());
    CHECK(m.torsion_part().canonical_form() ==
          gen(s, "c2") * gen(s, "c2") * gen(s, "th"));

    // unit law
    CHECK(icoh_mul(ICohClass::one(kReal, n), bc2) == bc2);
}

TEST_CASE("named monomial products via the closed formulas") {
    // beta(c2 c4) * beta_T(c2) at n = 5
    TorsionName x;
    x.fkind = TorsionName::FKind::Plain;
    x.fJ = {1, 2};
    TorsionName y;
    y.fkind = TorsionName::FKind::Theta;
    y.fJ = {1};
    NameSum prod = icoh_mul_formula(x, y, 5);
    REQUIRE(prod.size() == 2);
    std::vector<std::string> strs;
    for (const TorsionName& t : prod) strs.push_back(t.str());
    std::sort(strs.begin(), strs.end());
    CHECK(strs == std::vector<std::string>{"b(c2)*bT(c2*c4)", "p2*b(c4)*bT(1)"});

    // beta_T(c2) * beta_T(1) stays the normal monomial bT(c2)*bT(1) = beta(th c2)
    TorsionName bT1;
    bT1.a = 1;
    NameSum p2t = icoh_mul_formula(y, bT1, 5);
    REQUIRE(p2t.size() == 1);
    CHECK(p2t.begin()->str() == "bT(c2)*bT(1)");
    auto named = bockstein_name(5, 1, {1}, Twist::O);
    REQUIRE(named.has_value());
    CHECK(*named == *p2t.begin());

    // beta(th) = bT(1)^2, beta_T(th) = 0
    auto bth = bockstein_name(4, 1, {}, Twist::O);
    REQUIRE(bth.has_value());
    CHECK(bth->a == 2);
    CHECK_FALSE(bockstein_name(4, 1, {}, Twist::T).has_value());
}

TEST_CASE("torsion bases with names") {
    TorsionBasis t2 = torsion_basis(4, 2, Twist::O);
    REQUIRE(t2.vectors.size() == 1);
    CHECK(t2.labels == std::vector<std::string>{"bT(1)^2"});
    Space s = Space::bslnc(4);
    CHECK(t2.vectors[0] == gen(s, "th") * gen(s, "th"));

    TorsionBasis t3 = torsion_basis(4, 3, Twist::T);
    REQUIRE(t3.vectors.size() == 2);
    CHECK(t3.labels == std::vector<std::string>{"bT(1)^3", "bT(c2)"});

    CHECK(torsion_basis(4, 1, Twist::O).vectors.empty());
}

TEST_CASE("group reports for BSL_4^c") {
    auto untw = [&](int q) { return icoh_group(kReal, 4, q, Twist::O); };
    auto tw = [&](int q) { return icoh_group(kReal, 4, q, Twist::T); };
    CHECK(untw(0).w_rank == 1);
    CHECK(untw(0).torsion_rank == 0);
    CHECK(untw(4).w_rank == 2);
    CHECK(untw(4).torsion_rank == 2);
    CHECK(tw(3).torsion_rank == 2);
    CHECK(tw(4).torsion_rank == 1);
    CHECK(suites::bsl4c_golden_suite(SuiteParams{}).ok);
}

TEST_CASE("witt groups") {
    GroupReport g44 = witt_group(kReal, 4, 4, Twist::O);
    CHECK(g44.w_rank == 2);
    CHECK(g44.basis == std::vector<std::string>{"p2", "e4"});
    CHECK(witt_group(kReal, 4, 3, Twist::T).w_rank == 0);
    GroupReport g58 = witt_group(kReal, 5, 8, Twist::O);
    CHECK(g58.w_rank == 2);
    CHECK(g58.basis == std::vector<std::string>{"p2^2", "p4"});
}

TEST_CASE("restriction to BSL_n") {
    int n = 4;
    Space s = Space::bslnc(n);
    ICohClass bT1 = ICohClass::from_torsion(kReal, bockstein(PolyF2::one(s), Twist::T));
    CHECK(restrict_to_bsln(icoh_mul(bT1, bT1)).is_zero());

    ICohClass bc2 = ICohClass::from_torsion(kReal, bockstein(gen(s, "c2"), Twist::O));
    CHECK_FALSE(restrict_to_bsln(bc2).is_zero());

    ICohClass bTc2 = ICohClass::from_torsion(kReal, bockstein(gen(s, "c2"), Twist::T));
    CHECK(restrict_to_bsln(icoh_mul(bTc2, bTc2)) == restrict_to_bsln(icoh_mul(bc2, bc2)));
}

TEST_CASE("torsion is killed by the fundamental ideal") {
    Space s = Space::bslnc(4);
    ICohClass bc2 = ICohClass::from_torsion(kReal, bockstein(gen(s, "c2"), Twist::O));
    CHECK(bc2.scaled(2).is_zero());
    ICohClass two = ICohClass::one(kReal, 4).scaled(2);
    CHECK(icoh_mul(two, bc2).is_zero());
}

TEST_CASE("icoh property suites on a small range") {
    SuiteParams prm;
    prm.n = 4;
    prm.qmax = 8;
    CHECK(suites::torsion_dim_suite(prm).ok);
    CHECK(suites::product_formula_suite(prm).ok);
    CHECK(suites::icoh_props_suite(prm).ok);
}

TEST_CASE("twisted classes carry no free part") {
    CHECK_THROWS_AS(ICohClass(kReal, WittPoly::one(kReal, 4),
                              TorsionClass::zero(Space::bslnc(4), Twist::T, 0)),
                    input_error);
}
