#pragma once

// Chow-Witt classes as compatible pairs over the fiber product
//   CHW^j(L) = H^j(I^j(L)) x_{Ch^j} ker(del_{L,j}),
// the characteristic classes (Pontryagin, Euler, Bockstein, hyperbolic), and
// the degree-wise groups in both the symbolic GW^a + Z^b form and the
// instantiated form computed by Smith normal form over a concrete Witt model.

#include "icoh.hpp"

namespace qoc {

class ChowWittClass {
public:
    // Validates the compatibility rho(iPart) = chPart mod 2.
    static ChowWittClass make(ICohClass i, PolyZ ch) {
        if (ch.space().kind != SpaceKind::BSLnc || ch.space().n != i.n())
            throw input_error("Chow part must live on the BSL_n^c table of the same rank");
        auto d = ch.homogeneous_degree();
        if (!ch.is_zero() && (!d || *d != i.degree()))
            throw input_error("degree mismatch between the two parts");
        PolyF2 residual = rho(i) + mod2_reduce(ch);
        if (!residual.is_zero())
            throw input_error("incompatible pair; rho(iPart) - chPart mod 2 = " +
                              residual.str());
        return ChowWittClass(std::move(i), std::move(ch));
    }

    static ChowWittClass zero(WittModel model, int n, Twist tw, int degree) {
        return ChowWittClass(ICohClass::zero(model, n, tw, degree),
                             PolyZ::zero(Space::bslnc(n)));
    }

    static ChowWittClass one(WittModel model, int n) {
        return ChowWittClass(ICohClass::one(model, n), PolyZ::one(Space::bslnc(n)));
    }

    const ICohClass& i_part() const { return i_; }
    const PolyZ& ch_part() const { return ch_; }
    int n() const { return i_.n(); }
    Twist twist() const { return i_.twist(); }
    int degree() const { return i_.degree(); }
    const WittModel& model() const { return i_.model(); }

    bool is_zero() const { return i_.is_zero() && ch_.is_zero(); }
    bool operator==(const ChowWittClass&) const = default;

    ChowWittClass operator+(const ChowWittClass& o) const {
        return ChowWittClass(i_ + o.i_, ch_ + o.ch_);
    }

    std::string str() const { return "(" + i_.str() + ", " + ch_.str() + ")"; }

private:
    ChowWittClass(ICohClass i, PolyZ ch) : i_(std::move(i)), ch_(std::move(ch)) {}

    ICohClass i_;
    PolyZ ch_;
};

// Componentwise product; compatibility is preserved because both projections
// are ring homomorphisms (re-validated here).
inline ChowWittClass cw_mul(const ChowWittClass& x, const ChowWittClass& y) {
    if (!(x.model() == y.model()) || x.n() != y.n())
        throw input_error("mismatched models or ranks");
    return ChowWittClass::make(icoh_mul(x.i_part(), y.i_part()), x.ch_part() * y.ch_part());
}

// Even Pontryagin class p_{2i} = (p_{2i}, c_{2i}^2 + 2 sum_j (-1)^j c_j c_{4i-j}),
// with c_0 = 1, c_j = 0 for j > n, and c_1 -> 2*th.
inline ChowWittClass pontryagin_class(WittModel model, int n, int i) {
    Space ws = Space::witt_free(n);
    if (i < 1 || i > ws.pontryagin_count())
        throw input_error("pontryagin index out of range: need 1 <= i <= floor((n-1)/2)");
    Space amb = Space::ambient(n);
    auto amb_c = [&](int j) -> PolyZ {
        if (j == 0) return PolyZ::one(amb);
        if (j > n) return PolyZ::zero(amb);
        return PolyZ::generator(amb, amb.c_index(j));
    };
    PolyZ ch = amb_c(2 * i) * amb_c(2 * i);
    for (int j = std::max(0, 4 * i - n); j <= 2 * i - 1; ++j) {
        Int coeff = (j % 2 == 0) ? 2 : -2;
        ch += (amb_c(j) * amb_c(4 * i - j)).scaled(coeff);
    }
    ICohClass ic = ICohClass::from_free(WittPoly::generator(model, n, ws.p_index(i)));
    return ChowWittClass::make(std::move(ic), chow_normal_form(ch));
}

// Euler class e_n = (e_n, c_n) for n even; for odd n the Euler class is the
// Bockstein beta(c_{n-1}) by relation R2.
inline ChowWittClass euler_class(WittModel model, int n) {
    Space ws = Space::witt_free(n);
    if (!ws.has_euler())
        throw input_error("no free Euler class for odd n; e_" + std::to_string(n) +
                          " = b(c" + std::to_string(n - 1) + ")");
    Space s = Space::bslnc(n);
    ICohClass ic = ICohClass::from_free(WittPoly::generator(model, n, ws.e_index()));
    return ChowWittClass::make(std::move(ic), PolyZ::generator(s, s.c_index(n)));
}

// e(Theta) = (beta_T(1), th): the Euler class of the square-root bundle.
inline ChowWittClass theta_euler(WittModel model, int n) {
    Space s = Space::bslnc(n);
    ICohClass ic = ICohClass::from_torsion(model, bockstein(PolyF2::one(s), Twist::T));
    return ChowWittClass::make(std::move(ic), PolyZ::generator(s, s.theta_index()));
}

// General Bockstein class of a homogeneous mod-2 Chow class:
// (beta_L(x), 0/1-lift of Sq2_L(x)).
inline ChowWittClass bockstein_class(WittModel model, const PolyF2& x, Twist tw) {
    TorsionClass t = bockstein(x, tw);
    return ChowWittClass::make(ICohClass::from_torsion(model, t),
                               lift01(t.canonical_form()));
}

// beta~_L(c_J) for an admissible index set J (may be empty only for twist T;
// beta(1) = 0 gives the zero class).
inline ChowWittClass bockstein_class(WittModel model, int n, Twist tw,
                                     const std::vector<int>& J) {
    Space s = Space::bslnc(n);
    int top = (n - 1) / 2;
    for (int j : J)
        if (j < 1 || j > top) throw input_error("index set not admissible");
    return bockstein_class(model, detail::even_class_product(s, J), tw);
}

// Hyperbolic class H_L(x) = (0, 2x).
inline ChowWittClass hyperbolic(WittModel model, const PolyZ& x, Twist tw) {
    auto d = x.homogeneous_degree();
    if (!d) throw input_error("hyperbolic needs a homogeneous class");
    return ChowWittClass::make(ICohClass::zero(model, x.space().n, tw, *d), x.scaled(2));
}

// ---------------------------------------------------------------------------
// Groups.

enum class GroupMode { Symbolic, Instantiated };

namespace detail {

// Symbolic decomposition: a_j Witt monomials contribute GW summands (twist O);
// the rest of rank CH^j is Z summands.
struct SymbolicCW {
    int a = 0, b = 0, t = 0;  // GW rank, Z rank, torsion pairs among the Z part
};

inline SymbolicCW symbolic_cw(int n, int j, Twist tw) {
    SymbolicCW r;
    r.a = tw == Twist::O ? static_cast<int>(witt_monomials(n, j).size()) : 0;
    r.b = static_cast<int>(chow_basis(Space::bslnc(n), j).size()) - r.a;
    r.t = j >= 1 ? static_cast<int>(sq2_rank(Space::bslnc(n), j - 1, tw)) : 0;
    return r;
}

}  // namespace detail

// CHW^j(BSL_n^c, L) as a GroupReport.
//
// Symbolic mode reports GW^a + Z^b with a = rank of the degree-j Witt part
// and b = rank CH^j - a; this shape is a consequence of the fiber product and
// is gated by the instantiated oracle below. Instantiated mode presents
// H^j(I^j(L)) and ker(del) by generators and relations over the chosen Witt
// model, intersects them inside Ch^j, and reads off invariant factors via
// Smith normal form.
inline GroupReport cw_group(WittModel model, int n, int j, Twist tw, GroupMode mode) {
    GroupReport rep;
    rep.theory = "chw";
    rep.n = n;
    rep.degree = j;
    rep.twist = twist_name(tw);
    rep.field = model.name();
    Space s = Space::bslnc(n);
    Space ws = Space::witt_free(n);
    detail::SymbolicCW sym = detail::symbolic_cw(n, j, tw);

    if (mode == GroupMode::Symbolic) {
        rep.mode = "symbolic";
        rep.gw_rank = sym.a;
        rep.z_rank = sym.b;

        // Generator listing: GW summands from Witt monomials, Z summands from
        // torsion pairs and hyperbolic classes on a monomial complement.
        std::vector<Monomial> basis = chow_basis(s, j);
        std::vector<BitVec> echelon;
        auto reduce = [&](BitVec v) {
            std::sort(echelon.begin(), echelon.end(), [](const BitVec& a, const BitVec& b) {
                return a.first_set() < b.first_set();
            });
            for (const BitVec& row : echelon) {
                int lead = row.first_set();
                if (lead >= 0 && v.get(static_cast<size_t>(lead))) v ^= row;
            }
            return v;
        };
        auto add_span = [&](const PolyF2& p) {
            BitVec v = reduce(to_coords(p, basis));
            if (v.is_zero()) return false;
            echelon.push_back(v);
            return true;
        };

        for (const Monomial& m : witt_monomials(n, j)) {
            WittPoly w(model, PolyZ::from_monomial(ws, m));
            add_span(rho_free(w, s));
            rep.basis.push_back("GW(" + m.str(ws) + ")");
        }
        TorsionBasis tb = torsion_basis(n, j, tw);
        for (size_t i = 0; i < tb.vectors.size(); ++i) {
            add_span(tb.vectors[i]);
            rep.basis.push_back("(" + tb.labels[i] + ", " + lift01(tb.vectors[i]).str() + ")");
        }
        int hyper = 0;
        for (const Monomial& m : basis) {
            if (echelon.size() == basis.size()) break;
            if (add_span(PolyF2::from_monomial(s, m))) {
                rep.basis.push_back("H(" + m.str(s) + ")");
                ++hyper;
            }
        }
        if (sym.t + hyper != sym.b)
            rep.notes.push_back("free and torsion reductions are not independent in Ch^j");
        return rep;
    }

    // Instantiated mode.
    if (!model.has_elements())
        throw unsupported_error("unsupported on symbolic Witt model");
    rep.mode = "instantiated";

    std::vector<Monomial> basis = chow_basis(s, j);
    size_t r = basis.size();
    std::vector<Monomial> wmons = witt_monomials(n, j);
    size_t a = tw == Twist::O ? wmons.size() : 0;
    TorsionBasis tb = torsion_basis(n, j, tw);
    size_t t = tb.vectors.size();
    IMat kerlat = ker_partial_lattice(s, j, tw);
    if (kerlat.rows != r) throw internal_error("kernel lattice is not full rank");

    // Difference map D : Z^a + Z^t + Z^r -> Ch^j, generators to their images.
    size_t cols = a + t + r;
    BitMat D(r, cols);
    for (size_t c = 0; c < a; ++c) {
        WittPoly w(model, PolyZ::from_monomial(ws, wmons[c]));
        BitVec v = to_coords(rho_free(w, s), basis);
        for (size_t i = 0; i < r; ++i)
            if (v.get(i)) D.set(i, c);
    }
    for (size_t c = 0; c < t; ++c) {
        BitVec v = to_coords(tb.vectors[c], basis);
        for (size_t i = 0; i < r; ++i)
            if (v.get(i)) D.set(i, a + c);
    }
    for (size_t c = 0; c < r; ++c)
        for (size_t i = 0; i < r; ++i)
            if (kerlat.at(c, i) % 2 != 0) D.set(i, a + t + c);

    // L = preimage lattice {v : D v = 0 mod 2}, as a full-rank row lattice.
    std::vector<BitVec> null = kernel_basis(D);
    IMat L(null.size() + cols, cols);
    for (size_t i = 0; i < null.size(); ++i)
        for (size_t c = 0; c < cols; ++c)
            if (null[i].get(c)) L.at(i, c) = 1;
    for (size_t i = 0; i < cols; ++i) L.at(null.size() + i, i) = 2;
    IMat B = hnf_rows(std::move(L));
    if (B.rows != cols) throw internal_error("preimage lattice is not full rank");

    // Relations: 2 * torsion generators, plus 2 * free generators over the
    // quadratically closed model (where W(k) = F2).
    std::vector<size_t> rel_cols;
    if (model.field == Field::QuadClosed)
        for (size_t c = 0; c < a; ++c) rel_cols.push_back(c);
    for (size_t c = 0; c < t; ++c) rel_cols.push_back(a + c);

    IMat X(rel_cols.size(), cols);
    for (size_t i = 0; i < rel_cols.size(); ++i) {
        std::vector<Int> rel(cols, 0);
        rel[rel_cols[i]] = 2;
        auto x = solve_in_hnf_basis(B, std::move(rel));
        if (!x) throw internal_error("relation escapes the preimage lattice");
        for (size_t c = 0; c < cols; ++c) X.at(i, c) = (*x)[c];
    }
    std::vector<Int> inv = snf_invariants(std::move(X));
    int free_rank = static_cast<int>(cols - inv.size());
    for (const Int& d : inv)
        if (d != 1) rep.two_torsion.push_back(d.str());

    rep.free_rank = free_rank;
    rep.gw_rank = sym.a;
    rep.z_rank = sym.b;
    int expected = model.field == Field::RealClosed ? 2 * sym.a + sym.b : sym.a + sym.b;
    std::ostringstream note;
    note << "snf: Z^" << free_rank;
    if (!rep.two_torsion.empty()) note << " plus finite factors";
    note << "; symbolic claim GW^" << sym.a << " + Z^" << sym.b << " expects Z^" << expected
         << (model.field == Field::RealClosed ? " (GW(R) = Z^2)" : " (GW = Z)");
    rep.notes.push_back(note.str());
    if (free_rank != expected || !rep.two_torsion.empty())
        rep.notes.push_back("MISMATCH between instantiated and symbolic modes");
    return rep;
}

}  // namespace qoc
