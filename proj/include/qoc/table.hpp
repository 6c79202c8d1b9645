#pragma once

// Generator tables for the graded rings we compute in, and sparse exponent
// vectors over them.
//
// Spaces and their generators (with cohomological degrees):
//   BSLnc:    th (1), c2..cn (i)          -- CH(BSL_n^c) after c1 = 2*th
//   Ambient:  th (1), c1..cn (i)          -- Z[c1..cn, th] before the quotient
//   BGLn:     c1..cn (i)
//   BSLn:     c2..cn (i)                  -- the th = 0 quotient
//   WittFree: p2, p4, ..., p_{2*floor((n-1)/2)} (4i), plus en (n) for n even
//
// Monomials are compared graded-lex: total degree first, then exponents with
// generator index 0 most significant. For BSLnc this puts th first, so bases
// come out as e.g. {th^4, th^2*c2, th*c3, c2^2, c4} in degree 4.

#include "witt.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qoc {

enum class SpaceKind { BSLnc, Ambient, BGLn, BSLn, WittFree };

struct Space {
    SpaceKind kind = SpaceKind::BSLnc;
    int n = 1;

    bool operator==(const Space&) const = default;

    static Space bslnc(int n) { return check(Space{SpaceKind::BSLnc, n}); }
    static Space ambient(int n) { return check(Space{SpaceKind::Ambient, n}); }
    static Space bgln(int n) { return check(Space{SpaceKind::BGLn, n}); }
    static Space bsln(int n) { return check(Space{SpaceKind::BSLn, n}); }
    static Space witt_free(int n) { return check(Space{SpaceKind::WittFree, n}); }

    static Space check(Space s) {
        if (s.n < 1) throw input_error("rank n must be >= 1");
        return s;
    }

    // Number of Pontryagin generators p_{2i}, i = 1..floor((n-1)/2).
    int pontryagin_count() const { return (n - 1) / 2; }
    bool has_euler() const { return n % 2 == 0; }

    int gen_count() const {
        switch (kind) {
            case SpaceKind::BSLnc: return n;          // th, c2..cn
            case SpaceKind::Ambient: return n + 1;    // th, c1..cn
            case SpaceKind::BGLn: return n;           // c1..cn
            case SpaceKind::BSLn: return n - 1;       // c2..cn
            case SpaceKind::WittFree: return pontryagin_count() + (has_euler() ? 1 : 0);
        }
        return 0;
    }

    bool has_theta() const { return kind == SpaceKind::BSLnc || kind == SpaceKind::Ambient; }
    int theta_index() const { return 0; }

    // Index of c_i, or -1 when absent from this table.
    int c_index(int i) const {
        switch (kind) {
            case SpaceKind::BSLnc: return (i >= 2 && i <= n) ? i - 1 : -1;
            case SpaceKind::Ambient: return (i >= 1 && i <= n) ? i : -1;
            case SpaceKind::BGLn: return (i >= 1 && i <= n) ? i - 1 : -1;
            case SpaceKind::BSLn: return (i >= 2 && i <= n) ? i - 2 : -1;
            default: return -1;
        }
    }

    int p_index(int i) const {
        if (kind != SpaceKind::WittFree || i < 1 || i > pontryagin_count()) return -1;
        return i - 1;
    }

    int e_index() const {
        if (kind != SpaceKind::WittFree || !has_euler()) return -1;
        return pontryagin_count();
    }

    int weight(int idx) const {
        switch (kind) {
            case SpaceKind::BSLnc: return idx == 0 ? 1 : idx + 1;
            case SpaceKind::Ambient: return idx == 0 ? 1 : idx;
            case SpaceKind::BGLn: return idx + 1;
            case SpaceKind::BSLn: return idx + 2;
            case SpaceKind::WittFree: return idx < pontryagin_count() ? 4 * (idx + 1) : n;
        }
        return 0;
    }

    std::string gen_name(int idx) const {
        switch (kind) {
            case SpaceKind::BSLnc: return idx == 0 ? "th" : "c" + std::to_string(idx + 1);
            case SpaceKind::Ambient: return idx == 0 ? "th" : "c" + std::to_string(idx);
            case SpaceKind::BGLn: return "c" + std::to_string(idx + 1);
            case SpaceKind::BSLn: return "c" + std::to_string(idx + 2);
            case SpaceKind::WittFree:
                return idx < pontryagin_count() ? "p" + std::to_string(2 * (idx + 1))
                                                : "e" + std::to_string(n);
        }
        return "?";
    }

    // Index of a generator by its CLI name ("th", "c3", "p2", "e4"), or -1.
    int index_of(const std::string& name) const {
        for (int i = 0; i < gen_count(); ++i)
            if (gen_name(i) == name) return i;
        return -1;
    }
};

// Sparse exponent vector: (generator index, exponent) pairs, index ascending,
// exponents > 0.
struct Monomial {
    std::vector<std::pair<int, int>> e;

    static Monomial one() { return {}; }
    bool is_one() const { return e.empty(); }

    int exponent(int idx) const {
        for (const auto& [i, k] : e)
            if (i == idx) return k;
        return 0;
    }

    int degree(const Space& s) const {
        int d = 0;
        for (const auto& [i, k] : e) d += s.weight(i) * k;
        return d;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        size_t a = 0, b = 0;
        while (a < e.size() || b < o.e.size()) {
            if (b == o.e.size() || (a < e.size() && e[a].first < o.e[b].first))
                r.e.push_back(e[a++]);
            else if (a == e.size() || o.e[b].first < e[a].first)
                r.e.push_back(o.e[b++]);
            else {
                r.e.emplace_back(e[a].first, e[a].second + o.e[b].second);
                ++a, ++b;
            }
        }
        return r;
    }

    // Adds delta to the exponent of generator idx; erases zero entries.
    Monomial with(int idx, int delta) const {
        Monomial r;
        bool seen = false;
        for (const auto& [i, k] : e) {
            if (i == idx) {
                seen = true;
                int nk = k + delta;
                if (nk < 0) throw internal_error("negative exponent");
                if (nk > 0) r.e.emplace_back(i, nk);
            } else {
                if (!seen && idx < i && delta != 0) {
                    r.e.emplace_back(idx, delta);
                    seen = true;
                }
                r.e.emplace_back(i, k);
            }
        }
        if (!seen && delta != 0) {
            if (delta < 0) throw internal_error("negative exponent");
            r.e.emplace_back(idx, delta);
            std::sort(r.e.begin(), r.e.end());
        }
        return r;
    }

    bool operator==(const Monomial&) const = default;

    std::string str(const Space& s) const {
        if (is_one()) return "1";
        std::string out;
        for (const auto& [i, k] : e) {
            if (!out.empty()) out += "*";
            out += s.gen_name(i);
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }
};

// Lex comparison with index 0 most significant: returns true when a is
// strictly greater than b ("comes first") among monomials of equal degree.
inline bool mono_lex_greater(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first < b.e[j].first) return true;   // a nonzero earlier
        if (b.e[j].first < a.e[i].first) return false;
        if (a.e[i].second != b.e[j].second) return a.e[i].second > b.e[j].second;
        ++i, ++j;
    }
    return i < a.e.size();
}

// Graded-lex display order: higher degree first, then lex.
inline bool mono_before(const Monomial& a, const Monomial& b, const Space& s) {
    int da = a.degree(s), db = b.degree(s);
    if (da != db) return da > db;
    return mono_lex_greater(a, b);
}

// All monomials of the given total degree, in display order.
inline std::vector<Monomial> monomials_of_degree(const Space& s, int degree) {
    if (degree < 0) throw input_error("degree must be >= 0");
    std::vector<Monomial> out;
    Monomial cur;
    const int gens = s.gen_count();
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (idx == gens) return;
        int w = s.weight(idx);
        int maxk = remaining / w;
        for (int k = maxk; k >= 0; --k) {
            if (k > 0) cur.e.emplace_back(idx, k);
            self(self, idx + 1, remaining - k * w);
            if (k > 0) cur.e.pop_back();
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return mono_before(a, b, s); });
    return out;
}

}  // namespace qoc
