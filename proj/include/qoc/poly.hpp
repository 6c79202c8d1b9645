#pragma once

// Graded polynomials: finitely supported coefficient maps over a generator
// table. Terms are kept sorted in display order (graded-lex, see table.hpp)
// with no zero coefficients, so iteration and printing are deterministic.

#include "table.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace qoc {

// Coefficient rings.
struct F2 {
    using Elem = uint8_t;
    static Elem zero() { return 0; }
    static Elem one() { return 1; }
    static Elem add(Elem a, Elem b) { return a ^ b; }
    static Elem mul(Elem a, Elem b) { return a & b; }
    static Elem neg(Elem a) { return a; }
    static bool is_zero(Elem a) { return a == 0; }
    static std::string str(Elem) { return "1"; }
};

struct ZZ {
    using Elem = Int;
    static Elem zero() { return 0; }
    static Elem one() { return 1; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static bool is_zero(const Elem& a) { return a == 0; }
    static std::string str(const Elem& a) { return a.str(); }
};

template <class R>
class Poly {
public:
    using Elem = typename R::Elem;
    using Term = std::pair<Monomial, Elem>;

    explicit Poly(Space s) : space_(s) {}

    static Poly zero(Space s) { return Poly(s); }

    static Poly constant(Space s, Elem c) {
        Poly p(s);
        p.add_term(Monomial::one(), c);
        return p;
    }

    static Poly one(Space s) { return constant(s, R::one()); }

    static Poly generator(Space s, int idx) {
        if (idx < 0 || idx >= s.gen_count()) throw input_error("unknown generator index");
        Poly p(s);
        p.add_term(Monomial::one().with(idx, 1), R::one());
        return p;
    }

    static Poly from_monomial(Space s, const Monomial& m, Elem c = R::one()) {
        Poly p(s);
        p.add_term(m, c);
        return p;
    }

    const Space& space() const { return space_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Elem coeff(const Monomial& m) const {
        for (const auto& [mm, c] : terms_)
            if (mm == m) return c;
        return R::zero();
    }

    void add_term(const Monomial& m, Elem c) {
        if (R::is_zero(c)) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [&](const Term& t, const Monomial& key) {
                                       return mono_before(t.first, key, space_);
                                   });
        if (it != terms_.end() && it->first == m) {
            it->second = R::add(it->second, c);
            if (R::is_zero(it->second)) terms_.erase(it);
        } else {
            terms_.insert(it, {m, c});
        }
    }

    Poly& operator+=(const Poly& o) {
        require_same_space(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }

    Poly operator-() const {
        Poly r(space_);
        r.terms_ = terms_;
        for (auto& [m, c] : r.terms_) c = R::neg(c);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same_space(b);
        Poly r(a.space_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), R::mul(ca, cb));
        return r;
    }

    Poly scaled(const Elem& c) const {
        Poly r(space_);
        for (const auto& [m, k] : terms_) r.add_term(m, R::mul(k, c));
        return r;
    }

    Poly pow(unsigned k) const {
        Poly r = one(space_);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    bool operator==(const Poly& o) const { return space_ == o.space_ && terms_ == o.terms_; }

    // Homogeneous degree, or nullopt for inhomogeneous values. Zero reports
    // degree 0.
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return 0;
        int d = terms_.front().first.degree(space_);
        for (const auto& [m, c] : terms_)
            if (m.degree(space_) != d) return std::nullopt;
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree(space_));
        return d;
    }

    // Ring homomorphism determined by generator images.
    Poly map_generators(Space target, const std::function<Poly(int)>& image) const {
        Poly r = zero(target);
        for (const auto& [m, c] : terms_) {
            Poly t = constant(target, c);
            for (const auto& [idx, k] : m.e) t = t * image(idx).pow(static_cast<unsigned>(k));
            r += t;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = R::str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) out << "-", cs = cs.substr(1);
            } else {
                out << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            if (m.is_one())
                out << cs;
            else if (cs == "1")
                out << m.str(space_);
            else
                out << cs << "*" << m.str(space_);
        }
        return out.str();
    }

private:
    void require_same_space(const Poly& o) const {
        if (!(space_ == o.space_))
            throw input_error("mismatched generator tables");
    }

    Space space_;
    std::vector<Term> terms_;
};

using PolyZ = Poly<ZZ>;
using PolyF2 = Poly<F2>;

// Coefficientwise reduction mod 2. Generators keep their (barred) names.
inline PolyF2 mod2_reduce(const PolyZ& p) {
    PolyF2 r(p.space());
    for (const auto& [m, c] : p.terms()) r.add_term(m, static_cast<uint8_t>(c % 2 != 0));
    return r;
}

// The 0/1 integral lift in the fixed monomial order.
inline PolyZ lift01(const PolyF2& p) {
    PolyZ r(p.space());
    for (const auto& [m, c] : p.terms()) r.add_term(m, 1);
    return r;
}

}  // namespace qoc
