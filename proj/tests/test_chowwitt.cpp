#include "qoc/qoc.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qoc;

namespace {

const WittModel kReal{Field::RealClosed};

PolyZ zgen(const Space& s, const std::string& name) {
    return PolyZ::generator(s, s.index_of(name));
}

}  // namespace

TEST_CASE("pair validation") {
    int n = 4;
    Space s = Space::bslnc(n);
    Space ws = Space::witt_free(n);

    // (e4, c4) is the Euler class
    ICohClass e4 = ICohClass::from_free(WittPoly::generator(kReal, n, ws.e_index()));
    CHECK_NOTHROW(ChowWittClass::make(e4, zgen(s, "c4")));

    // (beta_T(1), th) is e(Theta)
    ICohClass bT1 =
        ICohClass::from_torsion(kReal, bockstein(PolyF2::one(s), Twist::T));
    CHECK_NOTHROW(ChowWittClass::make(bT1, zgen(s, "th")));

    // (p2, c2^2) is compatible; (p2, c4) is not, residual c2^2 + c4
    ICohClass p2 = ICohClass::from_free(WittPoly::generator(kReal, n, ws.p_index(1)));
    CHECK_NOTHROW(ChowWittClass::make(p2, zgen(s, "c2") * zgen(s, "c2")));
    try {
        ChowWittClass::make(p2, zgen(s, "c4"));
        FAIL("expected incompatibility");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("c2^2 + c4") != std::string::npos);
    }
}

TEST_CASE("pontryagin classes") {
    Space s4 = Space::bslnc(4);
    ChowWittClass p2 = pontryagin_class(kReal, 4, 1);
    PolyZ expect = zgen(s4, "c2") * zgen(s4, "c2") + zgen(s4, "c4").scaled(2) -
                   (zgen(s4, "th") * zgen(s4, "c3")).scaled(4);
    CHECK(p2.ch_part() == expect);
    CHECK(mod2_reduce(p2.ch_part()) == rho(p2.i_part()));

    Space s5 = Space::bslnc(5);
    ChowWittClass p4 = pontryagin_class(kReal, 5, 2);
    PolyZ expect5 = zgen(s5, "c4") * zgen(s5, "c4") - (zgen(s5, "c3") * zgen(s5, "c5")).scaled(2);
    CHECK(p4.ch_part() == expect5);

    CHECK_THROWS_AS(pontryagin_class(kReal, 4, 2), input_error);
}

TEST_CASE("euler classes") {
    ChowWittClass e4 = euler_class(kReal, 4);
    Space s = Space::bslnc(4);
    CHECK(e4.ch_part() == zgen(s, "c4"));
    CHECK(e4.degree() == 4);

    try {
        euler_class(kReal, 5);
        FAIL("expected error for odd rank");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("b(c4)") != std::string::npos);
    }

    ChowWittClass eT = theta_euler(kReal, 4);
    CHECK(eT.degree() == 1);
    CHECK(eT.twist() == Twist::T);
    CHECK(eT.ch_part() == zgen(s, "th"));
}

TEST_CASE("bockstein classes with the 0/1 lift") {
    Space s = Space::bslnc(4);
    ChowWittClass b = bockstein_class(kReal, 4, Twist::O, {1});
    CHECK(b.ch_part() == zgen(s, "c3"));

    ChowWittClass bT0 = bockstein_class(kReal, 4, Twist::T, {});
    CHECK(bT0 == theta_euler(kReal, 4));

    ChowWittClass bT1 = bockstein_class(kReal, 4, Twist::T, {1});
    CHECK(bT1.ch_part() == zgen(s, "th") * zgen(s, "c2") + zgen(s, "c3"));

    // beta(1) = 0 gives the zero class
    CHECK(bockstein_class(kReal, 4, Twist::O, {}).is_zero());
}

TEST_CASE("hyperbolic classes") {
    Space s = Space::bslnc(4);
    ChowWittClass h1 = hyperbolic(kReal, PolyZ::one(s), Twist::O);
    CHECK(h1.i_part().is_zero());
    CHECK(h1.ch_part() == PolyZ::constant(s, 2));

    ChowWittClass hc2 = hyperbolic(kReal, zgen(s, "c2"), Twist::O);
    ChowWittClass prod = cw_mul(hc2, euler_class(kReal, 4));
    CHECK(prod.i_part().is_zero());
    CHECK(prod.ch_part() == (zgen(s, "c2") * zgen(s, "c4")).scaled(2));

    CHECK(hyperbolic(kReal, PolyZ::zero(s), Twist::O).is_zero());

    // H(1) * H(1) = (0, 4) = H(2)
    ChowWittClass h2 = cw_mul(h1, h1);
    CHECK(h2.i_part().is_zero());
    CHECK(h2.ch_part() == PolyZ::constant(s, 4));
}

TEST_CASE("products of characteristic classes") {
    ChowWittClass eT = theta_euler(kReal, 4);
    ChowWittClass sq = cw_mul(eT, eT);
    CHECK(sq.twist() == Twist::O);
    Space s = Space::bslnc(4);
    CHECK(sq.ch_part() == zgen(s, "th") * zgen(s, "th"));
    CHECK(rho(sq.i_part()) == mod2_reduce(sq.ch_part()));

    ChowWittClass one = ChowWittClass::one(kReal, 4);
    CHECK(cw_mul(one, eT) == eT);
}

TEST_CASE("symbolic groups with generators") {
    GroupReport g0 = cw_group(kReal, 4, 0, Twist::O, GroupMode::Symbolic);
    CHECK(g0.gw_rank == 1);
    CHECK(g0.z_rank == 0);
    CHECK(g0.group_str() == "GW^1");

    GroupReport g2 = cw_group(kReal, 4, 2, Twist::O, GroupMode::Symbolic);
    CHECK(g2.gw_rank == 0);
    CHECK(g2.z_rank == 2);
    CHECK(g2.basis == std::vector<std::string>{"(bT(1)^2, th^2)", "H(c2)"});

    GroupReport g1 = cw_group(kReal, 4, 1, Twist::T, GroupMode::Symbolic);
    CHECK(g1.z_rank == 1);
    CHECK(g1.basis == std::vector<std::string>{"(bT(1), th)"});
}

TEST_CASE("instantiated groups agree with the symbolic formula") {
    for (int n = 1; n <= 4; ++n)
        for (int j = 0; j <= 8; ++j)
            for (Twist tw : {Twist::O, Twist::T}) {
                GroupReport sym = cw_group(kReal, n, j, tw, GroupMode::Symbolic);
                GroupReport inst = cw_group(kReal, n, j, tw, GroupMode::Instantiated);
                CHECK(inst.two_torsion.empty());
                CHECK(inst.free_rank == 2 * sym.gw_rank + sym.z_rank);

                WittModel quad{Field::QuadClosed};
                GroupReport instq = cw_group(quad, n, j, tw, GroupMode::Instantiated);
                CHECK(instq.two_torsion.empty());
                CHECK(instq.free_rank == sym.gw_rank + sym.z_rank);
            }
}

TEST_CASE("instantiated mode rejects the symbolic model") {
    CHECK_THROWS_AS(cw_group(WittModel{Field::Symbolic}, 4, 2, Twist::O,
                             GroupMode::Instantiated),
                    unsupported_error);
}

TEST_CASE("chow-witt property suites on a small range") {
    SuiteParams prm;
    prm.n = 4;
    prm.qmax = 6;
    CHECK(suites::cw_groups_suite(prm).ok);
    CHECK(suites::cw_props_suite(prm).ok);
}
