#pragma once

// Evaluation of class expressions in a chosen theory. Values are kept as
// sums of homogeneous components keyed by (degree, twist); products
// distribute across components, so inhomogeneous sums and twist-mixed sums
// are both well defined.

#include "chowwitt.hpp"
#include "expr.hpp"

namespace qoc {

enum class Theory { Chow, Ch, Witt, ICoh, CHW };

inline const char* theory_name(Theory t) {
    switch (t) {
        case Theory::Chow: return "chow";
        case Theory::Ch: return "ch";
        case Theory::Witt: return "witt";
        case Theory::ICoh: return "icoh";
        case Theory::CHW: return "chw";
    }
    return "?";
}

inline std::optional<Theory> theory_from_name(const std::string& s) {
    if (s == "chow") return Theory::Chow;
    if (s == "ch") return Theory::Ch;
    if (s == "witt") return Theory::Witt;
    if (s == "icoh") return Theory::ICoh;
    if (s == "chw") return Theory::CHW;
    return std::nullopt;
}

struct EvalConfig {
    Theory theory = Theory::Chow;
    int n = 4;
    WittModel model{Field::RealClosed};
};

struct Value {
    Theory theory = Theory::Chow;
    int n = 1;
    WittModel model;
    // exactly one representation active, per theory
    std::optional<PolyZ> chow;
    std::optional<PolyF2> ch;
    std::optional<WittPoly> witt;
    std::map<std::pair<int, int>, ICohClass> icoh;   // (degree, twist)
    std::map<std::pair<int, int>, ChowWittClass> chw;

    static Value zero(const EvalConfig& cfg) {
        Value v;
        v.theory = cfg.theory;
        v.n = cfg.n;
        v.model = cfg.model;
        switch (cfg.theory) {
            case Theory::Chow: v.chow = PolyZ::zero(Space::bslnc(cfg.n)); break;
            case Theory::Ch: v.ch = PolyF2::zero(Space::bslnc(cfg.n)); break;
            case Theory::Witt: v.witt = WittPoly::zero(cfg.model, cfg.n); break;
            default: break;
        }
        return v;
    }

    bool is_zero() const {
        switch (theory) {
            case Theory::Chow: return chow->is_zero();
            case Theory::Ch: return ch->is_zero();
            case Theory::Witt: return witt->is_zero();
            case Theory::ICoh: return icoh.empty();
            case Theory::CHW: return chw.empty();
        }
        return true;
    }

    void prune() {
        for (auto it = icoh.begin(); it != icoh.end();)
            it = it->second.is_zero() ? icoh.erase(it) : std::next(it);
        for (auto it = chw.begin(); it != chw.end();)
            it = it->second.is_zero() ? chw.erase(it) : std::next(it);
    }

    bool operator==(const Value& o) const {
        return theory == o.theory && n == o.n && chow == o.chow && ch == o.ch &&
               witt == o.witt && icoh == o.icoh && chw == o.chw;
    }

    std::string str() const {
        switch (theory) {
            case Theory::Chow: return chow->str();
            case Theory::Ch: return ch->str();
            case Theory::Witt: return witt->str();
            case Theory::ICoh: {
                if (icoh.empty()) return "0";
                std::string out;
                for (const auto& [key, cls] : icoh) {
                    if (!out.empty()) out += "\n";
                    out += "[q=" + std::to_string(key.first) + ", twist=" +
                           twist_name(static_cast<Twist>(key.second)) + "] " + cls.str();
                }
                return out;
            }
            case Theory::CHW: {
                if (chw.empty()) return "0";
                std::string out;
                for (const auto& [key, cls] : chw) {
                    if (!out.empty()) out += "\n";
                    out += "[q=" + std::to_string(key.first) + ", twist=" +
                           twist_name(static_cast<Twist>(key.second)) + "] " + cls.str();
                }
                return out;
            }
        }
        return "";
    }
};

namespace detail {

inline Value value_add(Value a, const Value& b) {
    switch (a.theory) {
        case Theory::Chow: *a.chow += *b.chow; break;
        case Theory::Ch: *a.ch += *b.ch; break;
        case Theory::Witt: a.witt = *a.witt + *b.witt; break;
        case Theory::ICoh:
            for (const auto& [k, cls] : b.icoh) {
                auto it = a.icoh.find(k);
                if (it == a.icoh.end())
                    a.icoh.emplace(k, cls);
                else
                    it->second = it->second + cls;
            }
            break;
        case Theory::CHW:
            for (const auto& [k, cls] : b.chw) {
                auto it = a.chw.find(k);
                if (it == a.chw.end())
                    a.chw.emplace(k, cls);
                else
                    it->second = it->second + cls;
            }
            break;
    }
    a.prune();
    return a;
}

inline Value value_mul(const Value& a, const Value& b) {
    Value r = a;
    switch (a.theory) {
        case Theory::Chow: r.chow = *a.chow * *b.chow; break;
        case Theory::Ch: r.ch = *a.ch * *b.ch; break;
        case Theory::Witt: r.witt = *a.witt * *b.witt; break;
        case Theory::ICoh: {
            r.icoh.clear();
            for (const auto& [ka, ca] : a.icoh)
                for (const auto& [kb, cb] : b.icoh) {
                    ICohClass prod = icoh_mul(ca, cb);
                    std::pair<int, int> key{prod.degree(), static_cast<int>(prod.twist())};
                    auto it = r.icoh.find(key);
                    if (it == r.icoh.end())
                        r.icoh.emplace(key, prod);
                    else
                        it->second = it->second + prod;
                }
            break;
        }
        case Theory::CHW: {
            r.chw.clear();
            for (const auto& [ka, ca] : a.chw)
                for (const auto& [kb, cb] : b.chw) {
                    ChowWittClass prod = cw_mul(ca, cb);
                    std::pair<int, int> key{prod.degree(), static_cast<int>(prod.twist())};
                    auto it = r.chw.find(key);
                    if (it == r.chw.end())
                        r.chw.emplace(key, prod);
                    else
                        it->second = it->second + prod;
                }
            break;
        }
    }
    r.prune();
    return r;
}

inline Value value_one(const EvalConfig& cfg) {
    Value v = Value::zero(cfg);
    switch (cfg.theory) {
        case Theory::Chow: v.chow = PolyZ::one(Space::bslnc(cfg.n)); break;
        case Theory::Ch: v.ch = PolyF2::one(Space::bslnc(cfg.n)); break;
        case Theory::Witt: v.witt = WittPoly::one(cfg.model, cfg.n); break;
        case Theory::ICoh:
            v.icoh.emplace(std::pair{0, 0}, ICohClass::one(cfg.model, cfg.n));
            break;
        case Theory::CHW:
            v.chw.emplace(std::pair{0, 0}, ChowWittClass::one(cfg.model, cfg.n));
            break;
    }
    return v;
}

}  // namespace detail

inline Value eval_expr(const ExprPtr& e, const EvalConfig& cfg);

namespace detail {

inline input_error bad_atom(const std::string& what, const EvalConfig& cfg) {
    return input_error(what + " is not a class in theory '" + theory_name(cfg.theory) +
                       "' (n=" + std::to_string(cfg.n) + ")");
}

inline Value eval_gen(const std::string& name, const EvalConfig& cfg) {
    Space s = Space::bslnc(cfg.n);
    Value v = Value::zero(cfg);
    char kind = name[0];
    int idx = name == "th" ? -1 : std::stoi(name.substr(1));

    if (cfg.theory == Theory::Chow || cfg.theory == Theory::Ch) {
        PolyZ p(s);
        if (name == "th")
            p = PolyZ::generator(s, s.theta_index());
        else if (kind == 'c' && idx == 1)
            p = PolyZ::generator(s, s.theta_index()).scaled(2);  // c1 = 2*th
        else if (kind == 'c' && idx >= 2 && idx <= cfg.n)
            p = PolyZ::generator(s, s.c_index(idx));
        else
            throw bad_atom("generator '" + name + "'", cfg);
        if (cfg.theory == Theory::Chow)
            v.chow = p;
        else
            v.ch = mod2_reduce(p);
        return v;
    }

    Space ws = Space::witt_free(cfg.n);
    if (kind == 'p') {
        if (idx % 2 != 0 || ws.p_index(idx / 2) < 0)
            throw bad_atom("generator '" + name + "'", cfg);
        int gi = ws.p_index(idx / 2);
        switch (cfg.theory) {
            case Theory::Witt: v.witt = WittPoly::generator(cfg.model, cfg.n, gi); return v;
            case Theory::ICoh: {
                ICohClass c = ICohClass::from_free(WittPoly::generator(cfg.model, cfg.n, gi));
                v.icoh.emplace(std::pair{c.degree(), 0}, c);
                return v;
            }
            case Theory::CHW: {
                ChowWittClass c = pontryagin_class(cfg.model, cfg.n, idx / 2);
                v.chw.emplace(std::pair{c.degree(), 0}, c);
                return v;
            }
            default: throw bad_atom("generator '" + name + "'", cfg);
        }
    }
    if (kind == 'e') {
        if (idx != cfg.n) throw bad_atom("generator '" + name + "'", cfg);
        switch (cfg.theory) {
            case Theory::Witt:
                if (!ws.has_euler())
                    throw input_error("e" + std::to_string(cfg.n) +
                                      " is torsion for odd n: use b(c" +
                                      std::to_string(cfg.n - 1) + ") in theory icoh");
                v.witt = WittPoly::generator(cfg.model, cfg.n, ws.e_index());
                return v;
            case Theory::ICoh: {
                ICohClass c = ws.has_euler()
                                  ? ICohClass::from_free(
                                        WittPoly::generator(cfg.model, cfg.n, ws.e_index()))
                                  : ICohClass::from_torsion(
                                        cfg.model,
                                        bockstein(PolyF2::generator(s, s.c_index(cfg.n - 1)),
                                                  Twist::O));
                v.icoh.emplace(std::pair{c.degree(), static_cast<int>(c.twist())}, c);
                return v;
            }
            case Theory::CHW: {
                ChowWittClass c = euler_class(cfg.model, cfg.n);  // throws for odd n
                v.chw.emplace(std::pair{c.degree(), 0}, c);
                return v;
            }
            default: throw bad_atom("generator '" + name + "'", cfg);
        }
    }
    throw bad_atom("generator '" + name + "'", cfg);
}

// Splits a polynomial into homogeneous pieces.
template <class R>
inline std::vector<Poly<R>> homogeneous_pieces(const Poly<R>& p) {
    std::map<int, Poly<R>> by_degree;
    for (const auto& [m, c] : p.terms()) {
        auto [it, fresh] = by_degree.try_emplace(m.degree(p.space()), Poly<R>::zero(p.space()));
        it->second.add_term(m, c);
    }
    std::vector<Poly<R>> out;
    for (auto& [d, q] : by_degree) out.push_back(std::move(q));
    return out;
}

inline Value eval_bockstein(const ExprPtr& arg, Twist tw, const EvalConfig& cfg) {
    if (cfg.theory != Theory::ICoh && cfg.theory != Theory::CHW)
        throw bad_atom(tw == Twist::T ? "bT(...)" : "b(...)", cfg);
    EvalConfig sub = cfg;
    sub.theory = Theory::Ch;
    PolyF2 x = *eval_expr(arg, sub).ch;
    Value v = Value::zero(cfg);
    for (const PolyF2& piece : homogeneous_pieces(x)) {
        if (cfg.theory == Theory::ICoh) {
            ICohClass c = ICohClass::from_torsion(cfg.model, bockstein(piece, tw));
            std::pair<int, int> key{c.degree(), static_cast<int>(c.twist())};
            auto it = v.icoh.find(key);
            if (it == v.icoh.end())
                v.icoh.emplace(key, c);
            else
                it->second = it->second + c;
        } else {
            ChowWittClass c = bockstein_class(cfg.model, piece, tw);
            std::pair<int, int> key{c.degree(), static_cast<int>(c.twist())};
            auto it = v.chw.find(key);
            if (it == v.chw.end())
                v.chw.emplace(key, c);
            else
                it->second = it->second + c;
        }
    }
    v.prune();
    return v;
}

inline Value eval_hyperbolic(const ExprPtr& arg, const EvalConfig& cfg) {
    if (cfg.theory != Theory::CHW) throw bad_atom("H(...)", cfg);
    EvalConfig sub = cfg;
    sub.theory = Theory::Chow;
    PolyZ x = *eval_expr(arg, sub).chow;
    Value v = Value::zero(cfg);
    for (const PolyZ& piece : homogeneous_pieces(x)) {
        ChowWittClass c = hyperbolic(cfg.model, piece, Twist::O);
        std::pair<int, int> key{c.degree(), 0};
        auto it = v.chw.find(key);
        if (it == v.chw.end())
            v.chw.emplace(key, c);
        else
            it->second = it->second + c;
    }
    v.prune();
    return v;
}

inline Value eval_lit(const Int& k, const EvalConfig& cfg) {
    Value v = Value::zero(cfg);
    switch (cfg.theory) {
        case Theory::Chow: v.chow = PolyZ::constant(Space::bslnc(cfg.n), k); break;
        case Theory::Ch:
            v.ch = PolyF2::constant(Space::bslnc(cfg.n), static_cast<uint8_t>(k % 2 != 0));
            break;
        case Theory::Witt:
            v.witt = WittPoly(cfg.model, PolyZ::constant(Space::witt_free(cfg.n), k));
            break;
        case Theory::ICoh: {
            ICohClass c = ICohClass::one(cfg.model, cfg.n).scaled(k);
            if (!c.is_zero()) v.icoh.emplace(std::pair{0, 0}, c);
            break;
        }
        case Theory::CHW: {
            ICohClass ic = ICohClass::one(cfg.model, cfg.n).scaled(k);
            PolyZ ch = PolyZ::constant(Space::bslnc(cfg.n), k);
            ChowWittClass c = ChowWittClass::make(std::move(ic), std::move(ch));
            if (!c.is_zero()) v.chw.emplace(std::pair{0, 0}, c);
            break;
        }
    }
    return v;
}

}  // namespace detail

inline Value eval_expr(const ExprPtr& e, const EvalConfig& cfg) {
    switch (e->k) {
        case Expr::K::Sum: {
            Value v = eval_expr(e->kids[0], cfg);
            for (size_t i = 1; i < e->kids.size(); ++i)
                v = detail::value_add(std::move(v), eval_expr(e->kids[i], cfg));
            return v;
        }
        case Expr::K::Prod: {
            Value v = eval_expr(e->kids[0], cfg);
            for (size_t i = 1; i < e->kids.size(); ++i)
                v = detail::value_mul(v, eval_expr(e->kids[i], cfg));
            return v;
        }
        case Expr::K::Pow: {
            Value v = detail::value_one(cfg);
            Value base = eval_expr(e->base, cfg);
            for (unsigned i = 0; i < e->exp; ++i) v = detail::value_mul(v, base);
            return v;
        }
        case Expr::K::Gen: return detail::eval_gen(e->name, cfg);
        case Expr::K::B: return detail::eval_bockstein(e->arg, Twist::O, cfg);
        case Expr::K::BT: return detail::eval_bockstein(e->arg, Twist::T, cfg);
        case Expr::K::H: return detail::eval_hyperbolic(e->arg, cfg);
        case Expr::K::Lit: return detail::eval_lit(e->lit, cfg);
    }
    throw internal_error("unhandled expression node");
}

inline Value eval_string(const std::string& s, const EvalConfig& cfg) {
    return eval_expr(parse_expr(s), cfg);
}

}  // namespace qoc
