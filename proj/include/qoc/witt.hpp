#pragma once

// Witt ring models. The three instances we support are the ones that show up
// in the group computations: W = Z (real closed base field), W = F2
// (quadratically closed), and a formal model that only knows 0, 1 and ranks.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qoc {

using Int = boost::multiprecision::cpp_int;

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown by lift_torsion when the given class is not in im(Sq^2).
struct not_torsion_error : std::domain_error {
    std::string residual;
    not_torsion_error(const std::string& msg, std::string res)
        : std::domain_error(msg), residual(std::move(res)) {}
};

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Field { RealClosed, QuadClosed, Symbolic };

inline const char* field_name(Field f) {
    switch (f) {
        case Field::RealClosed: return "real";
        case Field::QuadClosed: return "quadclosed";
        default: return "symbolic";
    }
}

// A model of W(k). Elements are represented by integers: the full ring Z for
// a real closed field, {0,1} for a quadratically closed one. The symbolic
// model manipulates only 0 and 1 and refuses everything else.
struct WittModel {
    Field field = Field::RealClosed;

    bool operator==(const WittModel&) const = default;

    const char* name() const { return field_name(field); }

    bool has_elements() const { return field != Field::Symbolic; }

    // Canonical representative of an element.
    Int normalize(const Int& v) const {
        switch (field) {
            case Field::RealClosed: return v;
            case Field::QuadClosed: return ((v % 2) + 2) % 2;
            case Field::Symbolic:
                if (v == 0 || v == 1) return v;
                throw unsupported_error("unsupported on symbolic Witt model");
        }
        return v;
    }

    Int add(const Int& a, const Int& b) const { return normalize(normalize(a) + normalize(b)); }
    Int mul(const Int& a, const Int& b) const { return normalize(normalize(a) * normalize(b)); }

    Int neg(const Int& a) const {
        if (field == Field::Symbolic) {
            if (a == 0) return a;
            throw unsupported_error("unsupported on symbolic Witt model");
        }
        return normalize(-a);
    }

    // Reduction W(k) -> W(k)/I(k) = F2.
    uint8_t reduce2(const Int& v) const {
        if (field == Field::Symbolic)
            throw unsupported_error("unsupported on symbolic Witt model");
        return static_cast<uint8_t>(v % 2 != 0);
    }

    // Reduction for 0/1 scalars only; works on every model. Used by rho.
    uint8_t reduce2_unit(const Int& v) const {
        if (field == Field::Symbolic) {
            Int u = normalize(v);  // throws beyond 0/1
            return static_cast<uint8_t>(u == 1);
        }
        return reduce2(v);
    }

    bool in_fundamental_ideal(const Int& v) const { return reduce2(v) == 0; }
};

}  // namespace qoc
