#pragma once

// I-cohomology of BSL_n^c on the diagonal: H^q(I^q(L)) splits as a free
// W(k)-part on Pontryagin/Euler generators plus Bockstein torsion. The
// reduction rho is injective on torsion, so a torsion class is stored by its
// canonical form, an element of im(Sq^2) inside the mod-2 Chow ring. All
// multiplication of torsion goes through reduce-and-lift; the closed product
// formulas for named Bockstein monomials live in a separate presentation
// layer that is checked against the canonical one.

#include "report.hpp"
#include "steenrod.hpp"

#include <set>

namespace qoc {

// ---------------------------------------------------------------------------
// Free part: W(k)-polynomials in p2, p4, ..., (en).

class WittPoly {
public:
    WittPoly(WittModel model, int n) : model_(model), p_(Space::witt_free(n)) {}
    WittPoly(WittModel model, PolyZ p) : model_(model), p_(std::move(p)) {
        if (p_.space().kind != SpaceKind::WittFree)
            throw input_error("WittPoly needs the Pontryagin/Euler table");
        normalize();
    }

    static WittPoly zero(WittModel model, int n) { return WittPoly(model, n); }
    static WittPoly one(WittModel model, int n) {
        return WittPoly(model, PolyZ::one(Space::witt_free(n)));
    }
    static WittPoly generator(WittModel model, int n, int idx) {
        return WittPoly(model, PolyZ::generator(Space::witt_free(n), idx));
    }

    const WittModel& model() const { return model_; }
    const PolyZ& poly() const { return p_; }
    const Space& space() const { return p_.space(); }
    bool is_zero() const { return p_.is_zero(); }
    bool operator==(const WittPoly& o) const { return model_ == o.model_ && p_ == o.p_; }

    WittPoly operator+(const WittPoly& o) const {
        require_compatible(o);
        return WittPoly(model_, p_ + o.p_);
    }
    WittPoly operator*(const WittPoly& o) const {
        require_compatible(o);
        return WittPoly(model_, p_ * o.p_);
    }
    WittPoly scaled(const Int& c) const { return WittPoly(model_, p_.scaled(c)); }

    std::optional<int> homogeneous_degree() const { return p_.homogeneous_degree(); }
    std::string str() const { return p_.str(); }

private:
    void normalize() {
        PolyZ q(p_.space());
        for (const auto& [m, c] : p_.terms()) q.add_term(m, model_.normalize(c));
        p_ = std::move(q);
    }
    void require_compatible(const WittPoly& o) const {
        if (!(model_ == o.model_) || !(p_.space() == o.p_.space()))
            throw input_error("mismatched Witt models");
    }

    WittModel model_;
    PolyZ p_;
};

// Reduction of the free part: p_{2i} -> c_{2i}^2, e_n -> c_n, coefficients
// mod I(k). `target` is the BSL_n^c (or BSL_n) table.
inline PolyF2 rho_free(const WittPoly& w, const Space& target) {
    const Space& ws = w.space();
    PolyF2 out(target);
    for (const auto& [m, c] : w.poly().terms()) {
        if (w.model().reduce2_unit(c) == 0) continue;
        Monomial t = Monomial::one();
        for (const auto& [idx, k] : m.e) {
            if (idx < ws.pontryagin_count())
                t = t.with(target.c_index(2 * (idx + 1)), 2 * k);
            else
                t = t.with(target.c_index(ws.n), k);
        }
        out.add_term(t, 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Torsion classes.

class TorsionClass {
public:
    static TorsionClass zero(const Space& s, Twist tw, int degree) {
        return TorsionClass(s, tw, degree, PolyF2::zero(s));
    }

    // Validates membership in im(Sq^2_{tw, degree-1}); throws not_torsion_error.
    static TorsionClass from_canonical(PolyF2 canon, Twist tw, int degree) {
        TorsionClass t(canon.space(), tw, degree, std::move(canon));
        t.validate();
        return t;
    }

    // For images of the Bockstein itself, which lie in im(Sq^2) by construction.
    static TorsionClass from_sq2_image(PolyF2 canon, Twist tw, int degree) {
        return TorsionClass(canon.space(), tw, degree, std::move(canon));
    }

    const Space& space() const { return space_; }
    Twist twist() const { return twist_; }
    int degree() const { return degree_; }
    const PolyF2& canonical_form() const { return canon_; }
    bool is_zero() const { return canon_.is_zero(); }
    bool operator==(const TorsionClass&) const = default;

private:
    TorsionClass(Space s, Twist tw, int degree, PolyF2 canon)
        : space_(s), twist_(tw), degree_(degree), canon_(std::move(canon)) {
        if (degree_ < 0) throw input_error("torsion degree must be >= 0");
        auto d = canon_.homogeneous_degree();
        if (!canon_.is_zero() && (!d || *d != degree_))
            throw input_error("torsion canonical form not homogeneous of the right degree");
    }

    void validate() const {
        if (canon_.is_zero()) return;
        if (degree_ == 0)
            throw not_torsion_error("not a torsion class", canon_.str());
        Sq2Matrix m = sq2_matrix(space_, degree_ - 1, twist_);
        BitVec target = to_coords(canon_, m.cod);
        // Reduce against the canonical image basis; the remainder is the
        // residual outside im(Sq^2).
        for (const BitVec& row : image_basis(m.mat)) {
            int lead = row.first_set();
            if (lead >= 0 && target.get(static_cast<size_t>(lead))) target ^= row;
        }
        if (!target.is_zero())
            throw not_torsion_error("not a torsion class",
                                    from_coords(space_, m.cod, target).str());
    }

    Space space_;
    Twist twist_;
    int degree_;
    PolyF2 canon_;
};

// Bockstein of a homogeneous mod-2 class; beta_L kills ker(Sq^2_L) by design.
inline TorsionClass bockstein(const PolyF2& x, Twist tw) {
    auto d = x.homogeneous_degree();
    if (!d) throw input_error("bockstein needs a homogeneous class");
    return TorsionClass::from_sq2_image(sq2(x, tw), tw, *d + 1);
}

// The unique torsion class with the given rho-image, when one exists.
inline TorsionClass lift_torsion(const PolyF2& c, Twist tw, std::optional<int> degree = {}) {
    auto d = c.homogeneous_degree();
    if (!d) throw input_error("lift_torsion needs a homogeneous class");
    int q = degree.value_or(c.is_zero() ? 0 : *d);
    return TorsionClass::from_canonical(c, tw, q);
}

// ---------------------------------------------------------------------------
// I-cohomology classes: free part (twist O only) plus torsion part.

class ICohClass {
public:
    ICohClass(WittModel model, WittPoly free, TorsionClass torsion)
        : model_(model), free_(std::move(free)), torsion_(std::move(torsion)) {
        if (!(free_.model() == model_)) throw input_error("mismatched Witt models");
        if (free_.space().n != torsion_.space().n) throw input_error("mismatched ranks");
        if (torsion_.twist() == Twist::T && !free_.is_zero())
            throw input_error("twisted Witt-sheaf cohomology vanishes; free part must be zero");
        auto fd = free_.homogeneous_degree();
        if (!free_.is_zero() && (!fd || *fd != torsion_.degree()))
            throw input_error("free part degree does not match the class degree");
    }

    static ICohClass zero(WittModel model, int n, Twist tw, int degree,
                          SpaceKind chow_kind = SpaceKind::BSLnc) {
        Space cs{chow_kind, n};
        return ICohClass(model, WittPoly::zero(model, n), TorsionClass::zero(cs, tw, degree));
    }

    static ICohClass one(WittModel model, int n) {
        return from_free(WittPoly::one(model, n));
    }

    static ICohClass from_free(const WittPoly& w, SpaceKind chow_kind = SpaceKind::BSLnc) {
        auto d = w.homogeneous_degree();
        if (!d) throw input_error("free part must be homogeneous");
        Space cs{chow_kind, w.space().n};
        return ICohClass(w.model(), w, TorsionClass::zero(cs, Twist::O, *d));
    }

    static ICohClass from_torsion(WittModel model, const TorsionClass& t) {
        return ICohClass(model, WittPoly::zero(model, t.space().n), t);
    }

    const WittModel& model() const { return model_; }
    int n() const { return torsion_.space().n; }
    Twist twist() const { return torsion_.twist(); }
    int degree() const { return torsion_.degree(); }
    const WittPoly& free_part() const { return free_; }
    const TorsionClass& torsion_part() const { return torsion_; }
    const Space& chow_space() const { return torsion_.space(); }

    bool is_zero() const { return free_.is_zero() && torsion_.is_zero(); }
    bool operator==(const ICohClass&) const = default;

    ICohClass operator+(const ICohClass& o) const {
        require_compatible(o);
        if (twist() != o.twist() || degree() != o.degree())
            throw input_error("cannot add classes of different degree or twist");
        PolyF2 canon = torsion_.canonical_form() + o.torsion_.canonical_form();
        return ICohClass(model_, free_ + o.free_,
                         TorsionClass::from_sq2_image(std::move(canon), twist(), degree()));
    }

    ICohClass scaled(const Int& c) const {
        WittPoly f = free_.scaled(c);
        PolyF2 canon = model_.reduce2_unit(model_.normalize(c)) ? torsion_.canonical_form()
                                                                : PolyF2::zero(chow_space());
        return ICohClass(model_, std::move(f),
                         TorsionClass::from_sq2_image(std::move(canon), twist(), degree()));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (!free_.is_zero()) out += free_.str();
        if (!torsion_.is_zero()) {
            if (!out.empty()) out += " + ";
            out += "torsion[" + torsion_.canonical_form().str() + "]";
        }
        return out;
    }

private:
    void require_compatible(const ICohClass& o) const {
        if (!(model_ == o.model_) || !(chow_space() == o.chow_space()))
            throw input_error("mismatched models or spaces");
    }

    WittModel model_;
    WittPoly free_;
    TorsionClass torsion_;
};

// Reduction to the mod-2 Chow ring; a ring homomorphism.
inline PolyF2 rho(const ICohClass& x) {
    return rho_free(x.free_part(), x.chow_space()) + x.torsion_part().canonical_form();
}

// Product. Free times free is the W(k)-polynomial product; anything with a
// torsion factor reduces to Ch and lifts back, which is valid because rho is
// injective on torsion and torsion times anything stays torsion.
inline ICohClass icoh_mul(const ICohClass& x, const ICohClass& y) {
    if (!(x.model() == y.model()) || !(x.chow_space() == y.chow_space()))
        throw input_error("mismatched models or spaces");
    Twist tw = x.twist() + y.twist();
    int deg = x.degree() + y.degree();
    WittPoly free_prod = x.free_part() * y.free_part();
    PolyF2 canon = rho(x) * rho(y) + rho_free(free_prod, x.chow_space());
    try {
        return ICohClass(x.model(), std::move(free_prod),
                         TorsionClass::from_canonical(std::move(canon), tw, deg));
    } catch (const not_torsion_error& e) {
        throw internal_error(std::string("product of valid classes failed to lift: ") +
                             e.what());
    }
}

// The map to BSL_n: free part unchanged, torsion reduced mod the ideal
// generated by beta_T(1)^2, realized on canonical forms by th -> 0.
inline ICohClass restrict_to_bsln(const ICohClass& x) {
    if (x.twist() != Twist::O) throw input_error("restriction is defined for twist O");
    if (x.chow_space().kind != SpaceKind::BSLnc)
        throw input_error("class already restricted");
    PolyF2 canon = restrict_theta_zero(x.torsion_part().canonical_form());
    return ICohClass(x.model(), x.free_part(),
                     TorsionClass::from_canonical(std::move(canon), Twist::O, x.degree()));
}

// ---------------------------------------------------------------------------
// Named Bockstein monomials: the presentation layer.
//
// A name is beta_T(1)^a * prod p_{2i}^{m_i} * prod beta(c_{2i})^{k_i} * F,
// with at most one multi-index factor F (beta(c_J) with |J| >= 2, or
// beta_T(c_J) with |J| >= 1). Twist = (a + [F twisted]) mod 2.

struct TorsionName {
    enum class FKind : uint8_t { None, Plain, Theta };

    int a = 0;
    std::vector<std::pair<int, int>> m;  // (i, exponent of p_{2i}), i ascending
    std::vector<std::pair<int, int>> k;  // (i, exponent of beta(c_{2i}))
    FKind fkind = FKind::None;
    std::vector<int> fJ;                 // ascending

    auto operator<=>(const TorsionName&) const = default;

    bool has_torsion_factor() const { return a > 0 || !k.empty() || fkind != FKind::None; }

    int degree() const {
        int d = a;
        for (const auto& [i, e] : m) d += 4 * i * e;
        for (const auto& [i, e] : k) d += (2 * i + 1) * e;
        if (fkind != FKind::None) {
            d += 1;
            for (int j : fJ) d += 2 * j;
        }
        return d;
    }

    Twist twist() const {
        int t = a + (fkind == FKind::Theta ? 1 : 0);
        return static_cast<Twist>(t % 2);
    }

    bool valid(int n) const {
        int top = (n - 1) / 2;
        for (const auto& [i, e] : m)
            if (i < 1 || i > top || e <= 0) return false;
        for (const auto& [i, e] : k)
            if (i < 1 || i > top || e <= 0) return false;
        if (fkind == FKind::Plain && fJ.size() < 2) return false;
        if (fkind == FKind::Theta && fJ.empty()) return false;
        for (int j : fJ)
            if (j < 1 || j > top) return false;
        return true;
    }

    PolyF2 rho_image(const Space& s) const {
        Monomial mono = Monomial::one();
        if (a > 0) mono = mono.with(s.theta_index(), a);
        for (const auto& [i, e] : m) mono = mono.with(s.c_index(2 * i), 2 * e);
        for (const auto& [i, e] : k) mono = mono.with(s.c_index(2 * i + 1), e);
        PolyF2 out = PolyF2::from_monomial(s, mono);
        if (fkind != FKind::None) {
            PolyF2 cj = detail::even_class_product(s, fJ);
            out = out * sq2(cj, fkind == FKind::Theta ? Twist::T : Twist::O);
        }
        return out;
    }

    std::string str() const {
        std::string out;
        auto app = [&](const std::string& f, int e) {
            if (!out.empty()) out += "*";
            out += f;
            if (e > 1) out += "^" + std::to_string(e);
        };
        for (const auto& [i, e] : m) app("p" + std::to_string(2 * i), e);
        for (const auto& [i, e] : k) app("b(c" + std::to_string(2 * i) + ")", e);
        if (fkind != FKind::None) {
            std::string arg;
            for (int j : fJ) {
                if (!arg.empty()) arg += "*";
                arg += "c" + std::to_string(2 * j);
            }
            app((fkind == FKind::Theta ? "bT(" : "b(") + arg + ")", 1);
        }
        if (a > 0) app("bT(1)", a);
        if (out.empty()) out = "1";
        return out;
    }
};

// Formal F2 combination of names; XOR semantics.
using NameSum = std::set<TorsionName>;

inline void name_xor(NameSum& s, const TorsionName& t) {
    auto it = s.find(t);
    if (it == s.end())
        s.insert(t);
    else
        s.erase(it);
}

inline PolyF2 rho_image(const NameSum& s, const Space& space) {
    PolyF2 out(space);
    for (const TorsionName& t : s) out += t.rho_image(space);
    return out;
}

namespace detail {

inline void sparse_add(std::vector<std::pair<int, int>>& v, int i, int e) {
    if (e == 0) return;
    for (auto& [ii, ee] : v)
        if (ii == i) {
            ee += e;
            return;
        }
    v.emplace_back(i, e);
    std::sort(v.begin(), v.end());
}

struct WorkFactor {
    bool theta = false;
    std::vector<int> J;
    auto operator<=>(const WorkFactor&) const = default;
};

struct WorkTerm {
    int a = 0;
    std::vector<std::pair<int, int>> m, k;
    std::vector<WorkFactor> fs;
};

inline std::vector<int> set_minus(const std::vector<int>& A, int x) {
    std::vector<int> r;
    for (int v : A)
        if (v != x) r.push_back(v);
    return r;
}

inline std::vector<int> set_intersect(const std::vector<int>& A, const std::vector<int>& B) {
    std::vector<int> r;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(r));
    return r;
}

inline std::vector<int> sym_diff(const std::vector<int>& A, const std::vector<int>& B) {
    std::vector<int> r;
    std::set_symmetric_difference(A.begin(), A.end(), B.begin(), B.end(),
                                  std::back_inserter(r));
    return r;
}

// Folds non-multi factors into a / k; returns false when the term is zero
// (it contained beta(1) = 0).
inline bool normalize_factors(WorkTerm& t) {
    std::vector<WorkFactor> keep;
    for (const WorkFactor& f : t.fs) {
        if (f.theta && f.J.empty())
            t.a += 1;
        else if (!f.theta && f.J.empty())
            return false;
        else if (!f.theta && f.J.size() == 1)
            sparse_add(t.k, f.J[0], 1);
        else
            keep.push_back(f);
    }
    std::sort(keep.begin(), keep.end());
    t.fs = std::move(keep);
    return true;
}

// Applies the Bockstein product relations until at most one multi-index
// factor remains; XORs the resulting normal monomials into `out`. Each rule
// application strictly reduces (#theta factors, #plain factors) in
// lexicographic order, so this terminates.
inline void reduce_term(WorkTerm t, NameSum& out) {
    if (!normalize_factors(t)) return;
    if (t.fs.size() <= 1) {
        TorsionName r;
        r.a = t.a;
        r.m = t.m;
        r.k = t.k;
        if (!t.fs.empty()) {
            r.fkind = t.fs[0].theta ? TorsionName::FKind::Theta : TorsionName::FKind::Plain;
            r.fJ = t.fs[0].J;
        }
        name_xor(out, r);
        return;
    }

    // Pick a deterministic pair: prefer a plain factor as the left operand.
    size_t li = t.fs.size(), ri = t.fs.size();
    for (size_t i = 0; i < t.fs.size(); ++i)
        if (!t.fs[i].theta) {
            li = i;
            break;
        }
    if (li == t.fs.size()) li = 0;  // all theta
    for (size_t i = 0; i < t.fs.size(); ++i)
        if (i != li) {
            ri = i;
            break;
        }
    WorkFactor L = t.fs[li], R = t.fs[ri];
    WorkTerm base = t;
    base.fs.clear();
    for (size_t i = 0; i < t.fs.size(); ++i)
        if (i != li && i != ri) base.fs.push_back(t.fs[i]);

    if (!L.theta) {
        // beta(c_J) * beta_L(c_J') = sum_k beta(c_2k) P_{(J\k) cap J'} beta_L(c_{Delta(J\k, J')})
        for (int kk : L.J) {
            WorkTerm nt = base;
            sparse_add(nt.k, kk, 1);
            std::vector<int> rest = set_minus(L.J, kk);
            for (int pi : set_intersect(rest, R.J)) sparse_add(nt.m, pi, 1);
            nt.fs.push_back({R.theta, sym_diff(rest, R.J)});
            reduce_term(std::move(nt), out);
        }
    } else {
        // beta_T(c_J) * beta_T(c_J') = beta(c_J) beta(c_J') + beta_T(1) P_{J cap J'} beta_T(c_{Delta})
        WorkTerm t1 = base;
        t1.fs.push_back({false, L.J});
        t1.fs.push_back({false, R.J});
        reduce_term(std::move(t1), out);

        WorkTerm t2 = base;
        t2.a += 1;
        for (int pi : set_intersect(L.J, R.J)) sparse_add(t2.m, pi, 1);
        t2.fs.push_back({true, sym_diff(L.J, R.J)});
        reduce_term(std::move(t2), out);
    }
}

inline WorkTerm to_work(const TorsionName& x) {
    WorkTerm t;
    t.a = x.a;
    t.m = x.m;
    t.k = x.k;
    if (x.fkind != TorsionName::FKind::None)
        t.fs.push_back({x.fkind == TorsionName::FKind::Theta, x.fJ});
    return t;
}

}  // namespace detail

// Product of two named monomials via the closed rewriting rules (R1-R3 and
// the theta normalizations), independent of the reduce-and-lift path.
inline NameSum icoh_mul_formula(const TorsionName& x, const TorsionName& y, int n) {
    if (!x.valid(n) || !y.valid(n)) throw input_error("name invalid for this rank");
    detail::WorkTerm t = detail::to_work(x);
    detail::WorkTerm u = detail::to_work(y);
    t.a += u.a;
    for (const auto& [i, e] : u.m) detail::sparse_add(t.m, i, e);
    for (const auto& [i, e] : u.k) detail::sparse_add(t.k, i, e);
    for (const auto& f : u.fs) t.fs.push_back(f);
    NameSum out;
    detail::reduce_term(std::move(t), out);
    return out;
}

// Name of beta_L(th^t * c_J), normalized through beta(th c_J) = beta_T(c_J)
// beta_T(1) and beta_T(th c_J) = beta(c_J) beta_T(1); even powers of theta
// pull out as beta_T(1)^2. Returns nullopt when the class is zero.
inline std::optional<TorsionName> bockstein_name(int n, int theta_exp,
                                                 const std::vector<int>& J, Twist tw) {
    TorsionName r;
    r.a = 2 * (theta_exp / 2);
    bool odd_theta = theta_exp % 2 != 0;
    Twist inner = odd_theta ? (tw + Twist::T) : tw;  // twist of the residual Bockstein
    if (odd_theta) r.a += 1;
    if (J.empty()) {
        if (inner == Twist::O) return std::nullopt;  // beta(1) = 0
        r.a += 1;
    } else if (J.size() == 1 && inner == Twist::O) {
        r.k = {{J[0], 1}};
    } else {
        r.fkind = inner == Twist::T ? TorsionName::FKind::Theta : TorsionName::FKind::Plain;
        r.fJ = J;
    }
    if (!r.valid(n)) throw input_error("name invalid for this rank");
    return r;
}

// All torsion names of the given degree and twist.
inline std::vector<TorsionName> enumerate_names(int n, int q, Twist tw) {
    int top = (n - 1) / 2;
    std::vector<TorsionName> out;
    std::vector<std::pair<int, int>> m, k;

    auto emit_tail = [&](int a, int rem) {
        if (rem == 0) {
            TorsionName t{a, m, k, TorsionName::FKind::None, {}};
            if (t.twist() == tw && t.has_torsion_factor()) out.push_back(t);
            return;
        }
        if (rem < 1 || (rem - 1) % 2 != 0) return;
        int target = (rem - 1) / 2;
        std::vector<int> J;
        auto subsets = [&](auto&& self, int lo, int sum) -> void {
            if (sum == target) {
                for (auto fk : {TorsionName::FKind::Plain, TorsionName::FKind::Theta}) {
                    TorsionName t{a, m, k, fk, J};
                    if (t.valid(n) && t.twist() == tw) out.push_back(t);
                }
                return;
            }
            for (int j = lo; j <= top && sum + j <= target; ++j) {
                J.push_back(j);
                self(self, j + 1, sum + j);
                J.pop_back();
            }
        };
        subsets(subsets, 1, 0);
    };

    auto loop_k = [&](auto&& self, int i, int a, int rem) -> void {
        if (i > top) {
            emit_tail(a, rem);
            return;
        }
        self(self, i + 1, a, rem);
        int w = 2 * i + 1;
        for (int e = 1; e * w <= rem; ++e) {
            k.emplace_back(i, e);
            self(self, i + 1, a, rem - e * w);
            k.pop_back();
        }
    };

    auto loop_m = [&](auto&& self, int i, int a, int rem) -> void {
        if (i > top) {
            loop_k(loop_k, 1, a, rem);
            return;
        }
        self(self, i + 1, a, rem);
        int w = 4 * i;
        for (int e = 1; e * w <= rem; ++e) {
            m.emplace_back(i, e);
            self(self, i + 1, a, rem - e * w);
            m.pop_back();
        }
    };

    for (int a = 0; a <= q; ++a) loop_m(loop_m, 1, a, q - a);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Group-level answers.

struct TorsionBasis {
    Space space;
    Twist twist = Twist::O;
    int q = 0;
    std::vector<PolyF2> vectors;
    std::vector<std::string> labels;
    bool named_complete = true;
};

// Canonical basis of im(Sq^2_{tw, q-1}) in Ch^q, presented through named
// Bockstein monomials whenever the candidate names span it; any degree where
// they fail to is flagged, not patched (the labels fall back to canonical
// forms there).
inline TorsionBasis torsion_basis(int n, int q, Twist tw) {
    Space s = Space::bslnc(n);
    TorsionBasis out{s, tw, q, {}, {}, true};
    if (q == 0) return out;

    Sq2Matrix mat = sq2_matrix(s, q - 1, tw);
    std::vector<BitVec> img = image_basis(mat.mat);
    if (img.empty()) return out;
    size_t dim = img.size();

    struct Cand {
        TorsionName name;
        PolyF2 image;
        BitVec coords;
    };
    std::vector<Cand> cands;
    for (const TorsionName& t : enumerate_names(n, q, tw)) {
        PolyF2 im = t.rho_image(s);
        if (im.is_zero()) continue;
        cands.push_back({t, im, to_coords(im, mat.cod)});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        int fa = a.coords.first_set(), fb = b.coords.first_set();
        if (fa != fb) return fa < fb;  // larger leading monomial first
        return a.name.str() < b.name.str();
    });

    // Greedy independent selection against a growing echelon.
    std::vector<BitVec> echelon;
    std::vector<Cand> chosen;
    for (const Cand& c : cands) {
        if (chosen.size() == dim) break;
        BitVec v = c.coords;
        for (const BitVec& row : echelon) {
            int lead = row.first_set();
            if (lead >= 0 && v.get(static_cast<size_t>(lead))) v ^= row;
        }
        if (v.is_zero()) continue;
        // Torsion name images always lie in im(Sq^2); check anyway.
        BitVec chk = c.coords;
        for (const BitVec& row : img) {
            int lead = row.first_set();
            if (lead >= 0 && chk.get(static_cast<size_t>(lead))) chk ^= row;
        }
        if (!chk.is_zero())
            throw internal_error("named monomial image escapes im(Sq^2): " + c.name.str());
        echelon.push_back(v);
        std::sort(echelon.begin(), echelon.end(), [](const BitVec& a, const BitVec& b) {
            return a.first_set() < b.first_set();
        });
        chosen.push_back(c);
    }

    if (chosen.size() == dim) {
        for (const Cand& c : chosen) {
            out.vectors.push_back(c.image);
            out.labels.push_back(c.name.str());
        }
    } else {
        out.named_complete = false;
        for (const BitVec& v : img) {
            PolyF2 p = from_coords(s, mat.cod, v);
            out.vectors.push_back(p);
            std::string label = "lift[" + p.str() + "]";
            for (const Cand& c : cands)
                if (c.coords == v) {
                    label = c.name.str();
                    break;
                }
            out.labels.push_back(label);
        }
    }
    return out;
}

// Monomials in the free Witt-sheaf generators of a given degree.
inline std::vector<Monomial> witt_monomials(int n, int q) {
    return monomials_of_degree(Space::witt_free(n), q);
}

// H^q(BSL_n^c, W(L)): zero for the nontrivial twist, a free W(k)-module on
// Pontryagin/Euler monomials otherwise.
inline GroupReport witt_group(WittModel model, int n, int q, Twist tw) {
    GroupReport rep;
    rep.theory = "witt";
    rep.n = n;
    rep.degree = q;
    rep.twist = twist_name(tw);
    rep.field = model.name();
    rep.torsion_rank = 0;
    if (tw == Twist::T) {
        rep.w_rank = 0;
        return rep;
    }
    Space ws = Space::witt_free(n);
    std::vector<Monomial> mons = witt_monomials(n, q);
    rep.w_rank = static_cast<int>(mons.size());
    for (const Monomial& m : mons) rep.basis.push_back(m.str(ws));
    return rep;
}

// H^q(BSL_n^c, I^q(L)) = im(beta_{q-1}) + W-part.
inline GroupReport icoh_group(WittModel model, int n, int q, Twist tw) {
    GroupReport rep;
    rep.theory = "icoh";
    rep.n = n;
    rep.degree = q;
    rep.twist = twist_name(tw);
    rep.field = model.name();
    Space ws = Space::witt_free(n);
    rep.w_rank = 0;
    if (tw == Twist::O) {
        for (const Monomial& m : witt_monomials(n, q)) {
            rep.basis.push_back(m.str(ws));
            ++rep.w_rank;
        }
    }
    rep.torsion_rank = q >= 1 ? static_cast<int>(sq2_rank(Space::bslnc(n), q - 1, tw)) : 0;
    TorsionBasis tb = torsion_basis(n, q, tw);
    if (static_cast<int>(tb.vectors.size()) != rep.torsion_rank)
        throw internal_error("torsion basis size disagrees with matrix rank");
    for (const std::string& l : tb.labels) rep.basis.push_back(l);
    if (!tb.named_complete) rep.notes.push_back("named monomials do not span; canonical forms listed");
    return rep;
}

}  // namespace qoc
