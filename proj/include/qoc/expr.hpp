#pragma once

// The CLI expression language for characteristic-class arithmetic.
//
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := name | 'b(' expr ')' | 'bT(' expr ')' | 'H(' expr ')'
//           | '(' expr ')' | uint
//
// Names: th, c<i>, p<2i>, e<n>. Whitespace insensitive; ^ binds tighter
// than *, which binds tighter than +.

#include "witt.hpp"

#include <cctype>
#include <memory>
#include <vector>

namespace qoc {

struct parse_error : std::runtime_error {
    size_t offset;
    parse_error(const std::string& msg, size_t off)
        : std::runtime_error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class K { Sum, Prod, Pow, Gen, B, BT, H, Lit };
    K k;
    std::vector<ExprPtr> kids;  // Sum, Prod (>= 2 children)
    ExprPtr base;               // Pow
    unsigned exp = 0;           // Pow
    std::string name;           // Gen
    ExprPtr arg;                // B, BT, H
    Int lit;                    // Lit
};

inline ExprPtr mk_gen(std::string name) {
    auto e = std::make_shared<Expr>();
    e->k = Expr::K::Gen;
    e->name = std::move(name);
    return e;
}

inline ExprPtr mk_lit(Int v) {
    auto e = std::make_shared<Expr>();
    e->k = Expr::K::Lit;
    e->lit = std::move(v);
    return e;
}

inline ExprPtr mk_call(Expr::K k, ExprPtr arg) {
    auto e = std::make_shared<Expr>();
    e->k = k;
    e->arg = std::move(arg);
    return e;
}

inline ExprPtr mk_pow(ExprPtr base, unsigned exp) {
    auto e = std::make_shared<Expr>();
    e->k = Expr::K::Pow;
    e->base = std::move(base);
    e->exp = exp;
    return e;
}

// Canonical n-ary node: same-kind children are spliced, so sums of sums
// flatten and parse(print(e)) = e holds on everything this produces.
inline ExprPtr mk_nary(Expr::K k, std::vector<ExprPtr> kids) {
    std::vector<ExprPtr> flat;
    for (ExprPtr& c : kids) {
        if (c->k == k)
            flat.insert(flat.end(), c->kids.begin(), c->kids.end());
        else
            flat.push_back(std::move(c));
    }
    if (flat.size() == 1) return flat[0];
    auto e = std::make_shared<Expr>();
    e->k = k;
    e->kids = std::move(flat);
    return e;
}

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr expr() {
        std::vector<ExprPtr> terms{term()};
        while (eat('+')) terms.push_back(term());
        return mk_nary(Expr::K::Sum, std::move(terms));
    }

    ExprPtr term() {
        std::vector<ExprPtr> factors{factor()};
        while (eat('*')) factors.push_back(factor());
        return mk_nary(Expr::K::Prod, std::move(factors));
    }

    ExprPtr factor() {
        ExprPtr a = atom();
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            unsigned v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + static_cast<unsigned>(s_[pos_] - '0');
                if (v > 1000000) throw parse_error("exponent too large", start);
                ++pos_;
            }
            if (pos_ == start) throw parse_error("expected exponent", pos_);
            return mk_pow(std::move(a), v);
        }
        return a;
    }

    ExprPtr atom() {
        skip_ws();
        if (pos_ == s_.size()) throw parse_error("expected atom", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!eat(')')) throw parse_error("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            (void)start;
            return mk_lit(Int(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            std::string word;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_]))))
                word += s_[pos_++];
            if (word == "b" || word == "bT" || word == "H") {
                if (!eat('(')) throw parse_error("expected '(' after " + word, pos_);
                ExprPtr a = expr();
                if (!eat(')')) throw parse_error("expected ')'", pos_);
                Expr::K k = word == "b" ? Expr::K::B : word == "bT" ? Expr::K::BT : Expr::K::H;
                return mk_call(k, std::move(a));
            }
            if (valid_gen_shape(word)) return mk_gen(word);
            throw parse_error("unknown generator '" + word + "'", start);
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    static bool valid_gen_shape(const std::string& w) {
        if (w == "th") return true;
        if (w.size() < 2) return false;
        if (w[0] != 'c' && w[0] != 'p' && w[0] != 'e') return false;
        for (size_t i = 1; i < w.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(w[i]))) return false;
        return w[1] != '0';
    }

    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(std::string_view s) { return detail::Parser(s).parse(); }

inline std::string print_expr(const ExprPtr& e) {
    switch (e->k) {
        case Expr::K::Sum: {
            std::string out;
            for (const ExprPtr& t : e->kids) {
                if (!out.empty()) out += " + ";
                out += print_expr(t);
            }
            return out;
        }
        case Expr::K::Prod: {
            std::string out;
            for (const ExprPtr& f : e->kids) {
                if (!out.empty()) out += "*";
                bool paren = f->k == Expr::K::Sum;
                out += paren ? "(" + print_expr(f) + ")" : print_expr(f);
            }
            return out;
        }
        case Expr::K::Pow: {
            bool paren = e->base->k == Expr::K::Sum || e->base->k == Expr::K::Prod ||
                         e->base->k == Expr::K::Pow;
            std::string b = print_expr(e->base);
            return (paren ? "(" + b + ")" : b) + "^" + std::to_string(e->exp);
        }
        case Expr::K::Gen: return e->name;
        case Expr::K::B: return "b(" + print_expr(e->arg) + ")";
        case Expr::K::BT: return "bT(" + print_expr(e->arg) + ")";
        case Expr::K::H: return "H(" + print_expr(e->arg) + ")";
        case Expr::K::Lit: return e->lit.str();
    }
    return "";
}

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->k != b->k) return false;
    switch (a->k) {
        case Expr::K::Sum:
        case Expr::K::Prod: {
            if (a->kids.size() != b->kids.size()) return false;
            for (size_t i = 0; i < a->kids.size(); ++i)
                if (!expr_equal(a->kids[i], b->kids[i])) return false;
            return true;
        }
        case Expr::K::Pow: return a->exp == b->exp && expr_equal(a->base, b->base);
        case Expr::K::Gen: return a->name == b->name;
        case Expr::K::B:
        case Expr::K::BT:
        case Expr::K::H: return expr_equal(a->arg, b->arg);
        case Expr::K::Lit: return a->lit == b->lit;
    }
    return false;
}

}  // namespace qoc
