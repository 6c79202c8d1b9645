#pragma once

// The Chow rings of BSL_n^c and BGL_n: the c1 = 2*th normal form, degree-wise
// monomial bases, mod-2 reduction, the pullback from BGL_n, motivic bidegrees
// and the localization-cokernel oracle for the ring presentation.

#include "f2.hpp"
#include "intmat.hpp"
#include "poly.hpp"

#include <sstream>

namespace qoc {

// Z[c1..cn, th] -> Z[c2..cn, th], substituting c1 -> 2*th.
inline PolyZ chow_normal_form(const PolyZ& p) {
    if (p.space().kind != SpaceKind::Ambient)
        throw input_error("chow_normal_form expects a polynomial in c1..cn, th");
    Space target = Space::bslnc(p.space().n);
    return p.map_generators(target, [&](int idx) -> PolyZ {
        if (idx == p.space().theta_index()) return PolyZ::generator(target, target.theta_index());
        int i = idx;  // ambient index i corresponds to c_i
        if (i == 1) return PolyZ::generator(target, target.theta_index()).scaled(2);
        return PolyZ::generator(target, target.c_index(i));
    });
}

// Ch(BGL_n) -> Ch(BSL_n^c): c1 -> 0 (the image of 2*th), ci -> ci.
inline PolyF2 pullback_from_bgln(const PolyF2& p) {
    if (p.space().kind != SpaceKind::BGLn)
        throw input_error("pullback_from_bgln expects a polynomial on the BGL_n table");
    int n = p.space().n;
    Space target = Space::bslnc(n);
    return p.map_generators(target, [&](int idx) -> PolyF2 {
        int i = idx + 1;
        if (i == 1) return PolyF2::zero(target);
        return PolyF2::generator(target, target.c_index(i));
    });
}

// Ch(BSL_n^c) -> Ch(BSL_n): th -> 0.
inline PolyF2 restrict_theta_zero(const PolyF2& p) {
    if (p.space().kind != SpaceKind::BSLnc)
        throw input_error("restrict_theta_zero expects a polynomial on the BSL_n^c table");
    int n = p.space().n;
    if (n < 2) throw input_error("BSL_n restriction needs n >= 2");
    Space target = Space::bsln(n);
    return p.map_generators(target, [&](int idx) -> PolyF2 {
        if (idx == p.space().theta_index()) return PolyF2::zero(target);
        return PolyF2::generator(target, target.c_index(idx + 1));
    });
}

// Monomial basis of CH^j / Ch^j in the fixed order; shared by both rings.
inline std::vector<Monomial> chow_basis(const Space& s, int j) {
    return monomials_of_degree(s, j);
}

// Position of a monomial inside chow_basis(s, degree), or -1. Fixed-degree
// bases are sorted by descending lex, so this can binary-search.
inline int basis_index(const std::vector<Monomial>& basis, const Monomial& m) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m,
                               [](const Monomial& a, const Monomial& b) {
                                   return mono_lex_greater(a, b);
                               });
    if (it != basis.end() && *it == m) return static_cast<int>(it - basis.begin());
    return -1;
}

inline BitVec to_coords(const PolyF2& p, const std::vector<Monomial>& basis) {
    BitVec v(basis.size());
    for (const auto& [m, c] : p.terms()) {
        int i = basis_index(basis, m);
        if (i < 0) throw internal_error("monomial outside basis");
        v.set(static_cast<size_t>(i));
    }
    return v;
}

inline PolyF2 from_coords(const Space& s, const std::vector<Monomial>& basis, const BitVec& v) {
    PolyF2 p(s);
    for (size_t i = 0; i < basis.size(); ++i)
        if (v.get(i)) p.add_term(basis[i], 1);
    return p;
}

// All generators sit on the Tate diagonal: a monomial of cohomological
// degree d has motivic bidegree (2d, d).
inline std::pair<int, int> motivic_bidegree(const Space& s, const Monomial& m) {
    int d = m.degree(s);
    return {2 * d, d};
}

struct LocalizationReport {
    bool ok = false;
    int coker_rank = -1;
    std::string detail;
};

// Oracle for the presentation CH(BSL_n^c) = Z[c1..cn,th]/(c1 - 2*th):
// multiplication by c1 - 2*th from degree j-1 to degree j of Z[c1..cn,th]
// must be injective with free cokernel of rank |chow_basis(n, j)|.
inline LocalizationReport localization_cokernel_check(int n, int j) {
    if (j < 1) throw input_error("localization check needs degree >= 1");
    Space amb = Space::ambient(n);
    std::vector<Monomial> src = monomials_of_degree(amb, j - 1);
    std::vector<Monomial> dst = monomials_of_degree(amb, j);

    IMat m(dst.size(), src.size());
    int c1 = amb.c_index(1), th = amb.theta_index();
    for (size_t s = 0; s < src.size(); ++s) {
        int r1 = basis_index(dst, src[s].with(c1, 1));
        int r2 = basis_index(dst, src[s].with(th, 1));
        if (r1 < 0 || r2 < 0) throw internal_error("degree bookkeeping failure");
        m.at(static_cast<size_t>(r1), s) += 1;
        m.at(static_cast<size_t>(r2), s) -= 2;
    }

    std::vector<Int> inv = snf_invariants(std::move(m));
    size_t expected = chow_basis(Space::bslnc(n), j).size();

    LocalizationReport rep;
    rep.coker_rank = static_cast<int>(dst.size() - inv.size());
    std::ostringstream msg;
    if (inv.size() != src.size()) {
        msg << "multiplication by c1-2*th not injective at (n=" << n << ", j=" << j << ")";
    } else if (!std::all_of(inv.begin(), inv.end(), [](const Int& d) { return d == 1; })) {
        msg << "cokernel has torsion at (n=" << n << ", j=" << j << ")";
    } else if (dst.size() - src.size() != expected) {
        msg << "cokernel rank " << (dst.size() - src.size()) << " != |chow_basis| = " << expected;
    } else {
        rep.ok = true;
    }
    rep.detail = msg.str();
    return rep;
}

}  // namespace qoc
