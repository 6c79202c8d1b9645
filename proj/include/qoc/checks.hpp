#pragma once

// Named oracle suites. Each suite re-derives a claim of the presentation
// through an independent route (Smith normal form, F2 elimination, brute
// counting, random sampling) and reports the first counterexample on failure.

#include "eval.hpp"

#include <chrono>
#include <functional>
#include <random>

namespace qoc {

struct SuiteParams {
    int n = -1;      // max rank; -1 = suite default
    int qmax = -1;   // max degree; -1 = suite default
    uint64_t seed = 0x5eed;
    WittModel model{Field::RealClosed};
};

struct SuiteResult {
    std::string name;
    bool ok = true;
    std::string detail;
    double seconds = 0.0;
};

namespace suites {

using Rng = std::mt19937_64;

inline SuiteResult fail(const std::string& name, const std::string& detail) {
    return {name, false, detail, 0.0};
}

inline SuiteResult pass(const std::string& name, const std::string& detail = "") {
    return {name, true, detail, 0.0};
}

// Independent count of monomials of a given degree (partition DP).
inline Int count_monomials_dp(const Space& s, int degree) {
    std::vector<Int> dp(degree + 1, 0);
    dp[0] = 1;
    for (int g = 0; g < s.gen_count(); ++g) {
        int w = s.weight(g);
        for (int d = w; d <= degree; ++d) dp[d] += dp[d - w];
    }
    return dp[degree];
}

inline PolyF2 random_poly(Rng& rng, const Space& s, int degree, int max_terms = 6) {
    std::vector<Monomial> basis = chow_basis(s, degree);
    PolyF2 p(s);
    if (basis.empty()) return p;
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    int terms = count(rng);
    for (int i = 0; i < terms; ++i) p.add_term(basis[pick(rng)], 1);
    return p;
}

inline SuiteResult chow_basis_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 8 : prm.n;
    int jmax = prm.qmax < 0 ? 16 : prm.qmax;
    for (int n = 1; n <= nmax; ++n)
        for (int j = 0; j <= jmax; ++j) {
            Space s = Space::bslnc(n);
            size_t enumerated = chow_basis(s, j).size();
            Int counted = count_monomials_dp(s, j);
            if (counted != enumerated)
                return fail("chow-basis", "count mismatch at n=" + std::to_string(n) +
                                              " j=" + std::to_string(j));
        }
    return pass("chow-basis");
}

inline SuiteResult localization_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 6 : prm.n;
    int jmax = prm.qmax < 0 ? 12 : prm.qmax;
    for (int n = 1; n <= nmax; ++n)
        for (int j = 1; j <= jmax; ++j) {
            LocalizationReport rep = localization_cokernel_check(n, j);
            if (!rep.ok) return fail("localization", rep.detail);
        }
    return pass("localization");
}

inline SuiteResult sq2_nilpotent_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 6 : prm.n;
    int jmax = prm.qmax < 0 ? 12 : prm.qmax;
    for (int n = 1; n <= nmax; ++n)
        for (int j = 0; j <= jmax; ++j)
            for (Twist tw : {Twist::O, Twist::T}) {
                Space s = Space::bslnc(n);
                Sq2Matrix a = sq2_matrix(s, j, tw);
                Sq2Matrix b = sq2_matrix(s, j + 1, tw);
                // The composite matrix b.mat * a.mat must vanish. Column c of
                // the composite is b applied to column c of a.
                for (size_t c = 0; c < a.dom.size(); ++c) {
                    BitVec out(b.cod.size());
                    for (size_t r = 0; r < a.cod.size(); ++r)
                        if (a.mat.get(r, c)) {
                            for (size_t r2 = 0; r2 < b.cod.size(); ++r2)
                                if (b.mat.get(r2, r)) out.set(r2, !out.get(r2));
                        }
                    if (!out.is_zero())
                        return fail("sq2-nilpotent",
                                    "composite matrix nonzero at n=" + std::to_string(n) +
                                        " j=" + std::to_string(j) + " twist=" + twist_name(tw) +
                                        " on " + a.dom[c].str(s));
                    // Same fact along the polynomial route.
                    PolyF2 m = PolyF2::from_monomial(s, a.dom[c]);
                    if (!sq2(sq2(m, tw), tw).is_zero())
                        return fail("sq2-nilpotent",
                                    "Sq2 o Sq2 != 0 at n=" + std::to_string(n) + " j=" +
                                        std::to_string(j) + " twist=" + twist_name(tw) +
                                        " on " + a.dom[c].str(s));
                }
            }
    return pass("sq2-nilpotent");
}

inline SuiteResult sq2_derivation_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 6 : prm.n;
    int qmax = prm.qmax < 0 ? 10 : prm.qmax;
    Rng rng(prm.seed);
    std::uniform_int_distribution<int> pick_n(1, nmax), pick_d(0, qmax);
    for (int trial = 0; trial < 500; ++trial) {
        Space s = Space::bslnc(pick_n(rng));
        PolyF2 a = random_poly(rng, s, pick_d(rng));
        PolyF2 b = random_poly(rng, s, pick_d(rng));
        if (sq2(a * b, Twist::O) != sq2(a, Twist::O) * b + a * sq2(b, Twist::O))
            return fail("sq2-derivation", "derivation law fails on n=" +
                                              std::to_string(s.n) + ": a=" + a.str() +
                                              ", b=" + b.str());
    }
    for (int trial = 0; trial < 100; ++trial) {
        Space s = Space::bgln(pick_n(rng));
        PolyF2 a = random_poly(rng, s, pick_d(rng));
        PolyF2 b = random_poly(rng, s, pick_d(rng));
        if (sq2_bgln(a * b) != sq2_bgln(a) * b + a * sq2_bgln(b))
            return fail("sq2-derivation", "BGL derivation law fails on n=" +
                                              std::to_string(s.n));
    }
    return pass("sq2-derivation");
}

inline SuiteResult sq2_twist_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 6 : prm.n;
    int jmax = prm.qmax < 0 ? 12 : prm.qmax;
    for (int n = 1; n <= nmax; ++n) {
        Space s = Space::bslnc(n);
        PolyF2 th = PolyF2::generator(s, s.theta_index());
        for (int j = 0; j <= jmax; ++j)
            for (const Monomial& m : chow_basis(s, j)) {
                PolyF2 p = PolyF2::from_monomial(s, m);
                if (sq2(p, Twist::T) + sq2(p, Twist::O) != th * p)
                    return fail("sq2-twist", "Sq2_T - Sq2 != th* on " + m.str(s));
            }
    }
    return pass("sq2-twist");
}

inline SuiteResult sq2_naturality_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 6 : prm.n;
    int jmax = prm.qmax < 0 ? 10 : prm.qmax;
    for (int n = 1; n <= nmax; ++n) {
        Space g = Space::bgln(n);
        for (int j = 0; j <= jmax; ++j)
            for (const Monomial& m : chow_basis(g, j)) {
                PolyF2 p = PolyF2::from_monomial(g, m);
                if (sq2(pullback_from_bgln(p), Twist::O) != pullback_from_bgln(sq2_bgln(p)))
                    return fail("sq2-naturality",
                                "diagram fails at n=" + std::to_string(n) + " on " + m.str(g));
            }
    }
    return pass("sq2-naturality");
}

inline SuiteResult rank_nullity_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 6 : prm.n;
    int jmax = prm.qmax < 0 ? 12 : prm.qmax;
    for (int n = 1; n <= nmax; ++n)
        for (int j = 0; j <= jmax; ++j)
            for (Twist tw : {Twist::O, Twist::T}) {
                Space s = Space::bslnc(n);
                size_t rk = sq2_rank(s, j, tw);
                size_t nul = ker_sq2(s, j, tw).size();
                size_t dim = chow_basis(s, j).size();
                if (rk + nul != dim)
                    return fail("rank-nullity", "rank+nullity != dim at n=" +
                                                    std::to_string(n) + " j=" +
                                                    std::to_string(j));
            }
    return pass("rank-nullity");
}

inline SuiteResult kernel_subring_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 6 : prm.n;
    int jmax = prm.qmax < 0 ? 10 : prm.qmax;
    for (int n = 2; n <= nmax; ++n)
        for (Twist tw : {Twist::O, Twist::T}) {
            CheckResult r = kernel_subring_check(n, jmax, tw);
            if (!r.ok) return fail("kernel-subring", r.detail);
        }
    return pass("kernel-subring");
}

inline SuiteResult torsion_dim_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 6 : prm.n;
    int qmax = prm.qmax < 0 ? 12 : prm.qmax;
    for (int n = 1; n <= nmax; ++n)
        for (int q = 1; q <= qmax; ++q)
            for (Twist tw : {Twist::O, Twist::T}) {
                Space s = Space::bslnc(n);
                size_t dim_basis = torsion_basis(n, q, tw).vectors.size();
                size_t rk = sq2_rank(s, q - 1, tw);
                size_t dom = chow_basis(s, q - 1).size();
                size_t nul = ker_sq2(s, q - 1, tw).size();
                if (dim_basis != rk || rk != dom - nul)
                    return fail("torsion-dim",
                                "dimension identity fails at n=" + std::to_string(n) +
                                    " q=" + std::to_string(q) + " twist=" + twist_name(tw));
            }
    return pass("torsion-dim");
}

inline TorsionName random_name(Rng& rng, int n, int degree_cap) {
    int top = (n - 1) / 2;
    std::uniform_int_distribution<int> small(0, 2);
    for (int attempt = 0; attempt < 200; ++attempt) {
        TorsionName t;
        t.a = small(rng);
        for (int i = 1; i <= top; ++i) {
            int e = small(rng) == 0 ? 1 : 0;
            if (e) t.m.emplace_back(i, 1);
        }
        for (int i = 1; i <= top; ++i) {
            int e = small(rng) == 0 ? 1 : 0;
            if (e) t.k.emplace_back(i, 1);
        }
        int fk = small(rng);
        if (fk > 0 && top >= 1) {
            std::vector<int> J;
            for (int i = 1; i <= top; ++i)
                if (small(rng) == 0) J.push_back(i);
            if (fk == 1 && J.size() >= 2) {
                t.fkind = TorsionName::FKind::Plain;
                t.fJ = J;
            } else if (fk == 2 && !J.empty()) {
                t.fkind = TorsionName::FKind::Theta;
                t.fJ = J;
            }
        }
        if (t.has_torsion_factor() && t.valid(n) && t.degree() <= degree_cap) return t;
    }
    TorsionName t;
    t.a = 1;
    return t;
}

inline SuiteResult product_formula_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 6 : prm.n;
    int cap = prm.qmax < 0 ? 12 : prm.qmax;
    Rng rng(prm.seed);
    std::uniform_int_distribution<int> pick_n(2, std::max(2, nmax));
    for (int trial = 0; trial < 500; ++trial) {
        int n = pick_n(rng);
        Space s = Space::bslnc(n);
        TorsionName x = random_name(rng, n, cap);
        TorsionName y = random_name(rng, n, cap - x.degree());
        NameSum prod = icoh_mul_formula(x, y, n);
        if (rho_image(prod, s) != x.rho_image(s) * y.rho_image(s))
            return fail("product-formula", "formula path disagrees with reduction on " +
                                               x.str() + " times " + y.str() +
                                               " (n=" + std::to_string(n) + ")");
    }
    return pass("product-formula");
}

inline ICohClass random_icoh(Rng& rng, WittModel model, int n, int degree, Twist tw) {
    WittPoly free = WittPoly::zero(model, n);
    Space ws = Space::witt_free(n);
    std::uniform_int_distribution<int> coin(0, 1);
    if (tw == Twist::O) {
        PolyZ p(ws);
        for (const Monomial& m : witt_monomials(n, degree))
            if (coin(rng)) p.add_term(m, 1 + coin(rng));
        free = WittPoly(model, std::move(p));
    }
    TorsionBasis tb = torsion_basis(n, degree, tw);
    PolyF2 canon(Space::bslnc(n));
    for (const PolyF2& v : tb.vectors)
        if (coin(rng)) canon += v;
    return ICohClass(model, free,
                     TorsionClass::from_sq2_image(std::move(canon), tw, degree));
}

inline SuiteResult icoh_props_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 6 : prm.n;
    int qmax = prm.qmax < 0 ? 12 : prm.qmax;
    Rng rng(prm.seed);
    WittModel real{Field::RealClosed};

    // lift o canonical-form = identity on every torsion basis vector.
    for (int n = 1; n <= nmax; ++n)
        for (int q = 0; q <= qmax; ++q)
            for (Twist tw : {Twist::O, Twist::T}) {
                for (const PolyF2& v : torsion_basis(n, q, tw).vectors) {
                    TorsionClass t = lift_torsion(v, tw, q);
                    if (t.canonical_form() != v)
                        return fail("icoh-props", "lift not identity on torsion basis");
                }
            }

    // R1: multiplication by 2 kills torsion over the real-closed model.
    for (int n = 2; n <= std::min(nmax, 5); ++n)
        for (int q = 1; q <= std::min(qmax, 8); ++q)
            for (Twist tw : {Twist::O, Twist::T}) {
                ICohClass x = random_icoh(rng, real, n, q, tw);
                ICohClass two = ICohClass::one(real, n).scaled(2);
                if (!icoh_mul(two, x).torsion_part().is_zero())
                    return fail("icoh-props", "I(k)-torsion fails: 2*torsion != 0");
            }

    // beta o rho o beta = 0 (equivalently Sq2 o Sq2 = 0 at class level).
    for (int n = 1; n <= nmax; ++n)
        for (int q = 0; q <= std::min(qmax, 8); ++q)
            for (Twist tw : {Twist::O, Twist::T})
                for (const Monomial& m : chow_basis(Space::bslnc(n), q)) {
                    PolyF2 p = PolyF2::from_monomial(Space::bslnc(n), m);
                    TorsionClass b1 = bockstein(p, tw);
                    if (!bockstein(b1.canonical_form(), tw).is_zero())
                        return fail("icoh-props", "beta o beta != 0");
                }

    // Naming identities beta(th^t c_J) through beta-tcj.
    for (int n = 2; n <= nmax; ++n) {
        Space s = Space::bslnc(n);
        for (int t = 0; t <= 3; ++t)
            for (const auto& J : detail::admissible_sets(n, true))
                for (Twist tw : {Twist::O, Twist::T}) {
                    Monomial arg = Monomial::one();
                    if (t > 0) arg = arg.with(s.theta_index(), t);
                    for (int j : J) arg = arg.times(Monomial::one().with(s.c_index(2 * j), 1));
                    PolyF2 expect = sq2(PolyF2::from_monomial(s, arg), tw);
                    auto name = bockstein_name(n, t, J, tw);
                    PolyF2 got = name ? name->rho_image(s) : PolyF2::zero(s);
                    if (expect != got)
                        return fail("icoh-props", "beta-tcj naming fails at n=" +
                                                      std::to_string(n) + " th^" +
                                                      std::to_string(t));
                }
    }

    // Associativity and commutativity of icoh_mul on random triples.
    std::uniform_int_distribution<int> pick_n(2, std::min(nmax, 5)), pick_d(0, 3),
        pick_t(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        int n = pick_n(rng);
        ICohClass x = random_icoh(rng, real, n, pick_d(rng), static_cast<Twist>(pick_t(rng)));
        ICohClass y = random_icoh(rng, real, n, pick_d(rng), static_cast<Twist>(pick_t(rng)));
        ICohClass z = random_icoh(rng, real, n, pick_d(rng), static_cast<Twist>(pick_t(rng)));
        if (icoh_mul(icoh_mul(x, y), z) != icoh_mul(x, icoh_mul(y, z)))
            return fail("icoh-props", "associativity fails");
        if (icoh_mul(x, y) != icoh_mul(y, x)) return fail("icoh-props", "commutativity fails");
    }

    // The golden relation of BSL_4^c.
    EvalConfig cfg{Theory::ICoh, 4, real};
    if (!eval_string("bT(c2)^2 + b(c2)^2 + bT(1)^2*p2", cfg).is_zero())
        return fail("icoh-props", "golden relation bT(c2)^2 = b(c2)^2 + bT(1)^2*p2 fails");
    return pass("icoh-props");
}

inline SuiteResult bsl4c_golden_suite(const SuiteParams& prm) {
    WittModel model = prm.model;
    struct Row {
        int q;
        Twist tw;
        int w, t;
    };
    const std::vector<Row> table = {
        {0, Twist::O, 1, 0}, {1, Twist::O, 0, 0}, {2, Twist::O, 0, 1},
        {3, Twist::O, 0, 1}, {4, Twist::O, 2, 2}, {0, Twist::T, 0, 0},
        {1, Twist::T, 0, 1}, {2, Twist::T, 0, 0}, {3, Twist::T, 0, 2},
        {4, Twist::T, 0, 1},
    };
    for (const Row& row : table) {
        GroupReport rep = icoh_group(model, 4, row.q, row.tw);
        if (rep.w_rank != row.w || rep.torsion_rank != row.t)
            return fail("bsl4c-golden",
                        "group (q=" + std::to_string(row.q) + ", twist=" +
                            twist_name(row.tw) + ") = W^" + std::to_string(rep.w_rank) +
                            " + (Z/2)^" + std::to_string(rep.torsion_rank) + ", expected W^" +
                            std::to_string(row.w) + " + (Z/2)^" + std::to_string(row.t));
    }
    return pass("bsl4c-golden");
}

inline SuiteResult cw_groups_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 5 : prm.n;
    int jmax = prm.qmax < 0 ? 10 : prm.qmax;
    WittModel real{Field::RealClosed};
    for (int n = 1; n <= nmax; ++n)
        for (int j = 0; j <= jmax; ++j)
            for (Twist tw : {Twist::O, Twist::T}) {
                GroupReport sym = cw_group(real, n, j, tw, GroupMode::Symbolic);
                GroupReport inst = cw_group(real, n, j, tw, GroupMode::Instantiated);
                if (!inst.two_torsion.empty())
                    return fail("cw-groups", "instantiated SNF shows finite torsion at n=" +
                                                 std::to_string(n) + " j=" + std::to_string(j) +
                                                 " twist=" + twist_name(tw));
                if (inst.free_rank != 2 * sym.gw_rank + sym.z_rank)
                    return fail("cw-groups",
                                "symbolic GW^a+Z^b disagrees with SNF rank at n=" +
                                    std::to_string(n) + " j=" + std::to_string(j) + " twist=" +
                                    twist_name(tw) + ": free rank " +
                                    std::to_string(inst.free_rank) + " vs 2*" +
                                    std::to_string(sym.gw_rank) + "+" +
                                    std::to_string(sym.z_rank));
            }
    // Spot values from the BSL_4^c example.
    GroupReport g0 = cw_group(real, 4, 0, Twist::O, GroupMode::Symbolic);
    if (g0.gw_rank != 1 || g0.z_rank != 0) return fail("cw-groups", "CHW^0 != GW");
    GroupReport g2 = cw_group(real, 4, 2, Twist::O, GroupMode::Symbolic);
    if (g2.gw_rank != 0 || g2.z_rank != 2) return fail("cw-groups", "CHW^2 != Z^2");
    GroupReport g1 = cw_group(real, 4, 1, Twist::T, GroupMode::Symbolic);
    if (g1.gw_rank != 0 || g1.z_rank != 1 || g1.basis != std::vector<std::string>{"(bT(1), th)"})
        return fail("cw-groups", "CHW^1(T) != Z<e(Theta)>");
    return pass("cw-groups");
}

inline SuiteResult cw_props_suite(const SuiteParams& prm) {
    int nmax = prm.n < 0 ? 5 : prm.n;
    Rng rng(prm.seed);
    WittModel real{Field::RealClosed};
    std::uniform_int_distribution<int> pick_n(2, std::max(2, nmax)), pick_d(0, 5),
        pick_t(0, 1), coin(0, 1);

    auto random_cw = [&](int n, int degree, Twist tw) {
        ICohClass i = random_icoh(rng, real, n, degree, tw);
        Space s = Space::bslnc(n);
        PolyZ ch = lift01(rho(i));
        for (const Monomial& m : chow_basis(s, degree))
            if (coin(rng)) ch += PolyZ::from_monomial(s, m).scaled(2);
        return ChowWittClass::make(std::move(i), std::move(ch));
    };

    // Compatibility is closed under products.
    for (int trial = 0; trial < 200; ++trial) {
        int n = pick_n(rng);
        ChowWittClass x = random_cw(n, pick_d(rng), static_cast<Twist>(pick_t(rng)));
        ChowWittClass y = random_cw(n, pick_d(rng), static_cast<Twist>(pick_t(rng)));
        ChowWittClass xy = cw_mul(x, y);  // make() inside re-validates
        if (xy.ch_part() != x.ch_part() * y.ch_part())
            return fail("cw-props", "chPart projection is not multiplicative");
    }

    // Projection identities for hyperbolic classes.
    for (int n = 2; n <= nmax; ++n) {
        Space s = Space::bslnc(n);
        for (int d = 0; d <= 4; ++d)
            for (const Monomial& m : chow_basis(s, d)) {
                PolyZ x = PolyZ::from_monomial(s, m);
                ChowWittClass h = hyperbolic(real, x, Twist::O);
                if (!h.i_part().is_zero() || h.ch_part() != x.scaled(2))
                    return fail("cw-props", "H(x) != (0, 2x)");
            }
    }

    // Changing the 0/1 lift moves a Bockstein class by a hyperbolic class.
    for (int n = 2; n <= nmax; ++n) {
        for (const auto& J : detail::admissible_sets(n, true))
            for (Twist tw : {Twist::O, Twist::T}) {
                if (tw == Twist::O && J.empty()) continue;
                ChowWittClass std_class = bockstein_class(real, n, tw, J);
                if (std_class.is_zero()) continue;
                Space s = Space::bslnc(n);
                int q = std_class.degree();
                PolyZ alt = std_class.ch_part() +
                            PolyZ::from_monomial(s, chow_basis(s, q).front()).scaled(2);
                ChowWittClass alt_class = ChowWittClass::make(std_class.i_part(), alt);
                PolyZ diff = alt_class.ch_part() - std_class.ch_part();
                if (!mod2_reduce(diff).is_zero())
                    return fail("cw-props", "alternative lift differs by an odd class");
            }
    }

    // Pontryagin compatibility: chPart(p_2i) reduces to rho(p_2i) = c_{2i}^2.
    for (int n = 2; n <= std::max(nmax, 8); ++n) {
        Space s = Space::bslnc(n);
        Space ws = Space::witt_free(n);
        for (int i = 1; i <= ws.pontryagin_count(); ++i) {
            ChowWittClass p = pontryagin_class(real, n, i);
            PolyF2 expect = PolyF2::from_monomial(s, Monomial::one().with(s.c_index(2 * i), 2));
            if (mod2_reduce(p.ch_part()) != expect || rho(p.i_part()) != expect)
                return fail("cw-props", "pontryagin reduction fails at n=" +
                                            std::to_string(n) + " i=" + std::to_string(i));
        }
    }
    return pass("cw-props");
}

inline ExprPtr random_expr(Rng& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, 9), small(1, 3), idx(2, 4);
    int roll = depth <= 0 ? pick(rng) % 4 : pick(rng);
    switch (roll) {
        case 0: return mk_gen("th");
        case 1: return mk_gen("c" + std::to_string(idx(rng)));
        case 2: return mk_gen("p2");
        case 3: return mk_lit(Int(small(rng)));
        case 4: return mk_call(Expr::K::B, random_expr(rng, depth - 1));
        case 5: return mk_call(Expr::K::BT, random_expr(rng, depth - 1));
        case 6: return mk_call(Expr::K::H, random_expr(rng, depth - 1));
        case 7: {
            std::vector<ExprPtr> kids{random_expr(rng, depth - 1), random_expr(rng, depth - 1)};
            return mk_nary(Expr::K::Sum, std::move(kids));
        }
        case 8: {
            std::vector<ExprPtr> kids{random_expr(rng, depth - 1), random_expr(rng, depth - 1)};
            return mk_nary(Expr::K::Prod, std::move(kids));
        }
        default: {
            ExprPtr base = random_expr(rng, depth - 1);
            if (base->k == Expr::K::Pow) return base;
            return mk_pow(std::move(base), static_cast<unsigned>(small(rng)));
        }
    }
}

inline SuiteResult expr_roundtrip_suite(const SuiteParams& prm) {
    Rng rng(prm.seed);
    for (int trial = 0; trial < 100; ++trial) {
        ExprPtr e = random_expr(rng, 3);
        ExprPtr back = parse_expr(print_expr(e));
        if (!expr_equal(e, back))
            return fail("expr-roundtrip", "parse(print(e)) != e for: " + print_expr(e));
    }
    // Round-trip through evaluation on a fixed vocabulary.
    EvalConfig cfg{Theory::CHW, 4, WittModel{Field::RealClosed}};
    for (const char* src : {"p2", "e4", "bT(1)", "b(c2)", "bT(c2)", "H(c2)*e4",
                            "bT(1)^2 + H(c2)", "(p2 + H(th^4))*e4"}) {
        ExprPtr e = parse_expr(src);
        Value v1 = eval_expr(e, cfg);
        Value v2 = eval_expr(parse_expr(print_expr(e)), cfg);
        if (!(v1 == v2)) return fail("expr-roundtrip", std::string("eval mismatch on ") + src);
    }
    return pass("expr-roundtrip");
}

}  // namespace suites

inline const std::vector<std::pair<std::string, SuiteResult (*)(const SuiteParams&)>>&
suite_registry() {
    static const std::vector<std::pair<std::string, SuiteResult (*)(const SuiteParams&)>> reg = {
        {"chow-basis", suites::chow_basis_suite},
        {"localization", suites::localization_suite},
        {"sq2-nilpotent", suites::sq2_nilpotent_suite},
        {"sq2-derivation", suites::sq2_derivation_suite},
        {"sq2-twist", suites::sq2_twist_suite},
        {"sq2-naturality", suites::sq2_naturality_suite},
        {"rank-nullity", suites::rank_nullity_suite},
        {"kernel-subring", suites::kernel_subring_suite},
        {"torsion-dim", suites::torsion_dim_suite},
        {"product-formula", suites::product_formula_suite},
        {"icoh-props", suites::icoh_props_suite},
        {"bsl4c-golden", suites::bsl4c_golden_suite},
        {"cw-groups", suites::cw_groups_suite},
        {"cw-props", suites::cw_props_suite},
        {"expr-roundtrip", suites::expr_roundtrip_suite},
    };
    return reg;
}

inline SuiteResult run_suite(const std::string& name, const SuiteParams& prm) {
    for (const auto& [nm, fn] : suite_registry()) {
        if (nm != name) continue;
        auto start = std::chrono::steady_clock::now();
        SuiteResult r = fn(prm);
        r.name = nm;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    throw input_error("unknown suite '" + name + "'");
}

inline std::vector<SuiteResult> run_all_suites(const SuiteParams& prm) {
    std::vector<SuiteResult> out;
    for (const auto& [nm, fn] : suite_registry()) out.push_back(run_suite(nm, prm));
    return out;
}

}  // namespace qoc
