#pragma once

// Additive invariants of one cohomology group in one degree and twist, plus
// a basis listing. One struct serves every theory; fields that do not apply
// stay at -1 and render as null/absent.

#include "witt.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace qoc {

struct GroupReport {
    std::string theory;  // "chow" | "ch" | "witt" | "icoh" | "chw"
    int n = 0;
    int degree = 0;
    std::string twist = "O";
    std::string field = "real";
    std::string mode = "symbolic";  // "symbolic" | "instantiated"

    int w_rank = -1;        // W(k)-free rank (witt, icoh)
    int torsion_rank = -1;  // F2-torsion rank (icoh)
    int gw_rank = -1;       // GW(k) summands (chw)
    int z_rank = -1;        // Z summands (chw)
    int free_rank = -1;     // Z-rank of chow groups / instantiated fiber products

    std::vector<std::string> two_torsion;  // nontrivial invariant factors, if any
    std::vector<std::string> basis;
    std::vector<std::string> notes;

    // Compact decomposition, e.g. "GW^1", "W(k)^2 + (Z/2)^2", "Z^2", "0".
    std::string group_str() const {
        std::ostringstream out;
        bool empty = true;
        auto piece = [&](const std::string& name, int r) {
            if (r <= 0) return;
            if (!empty) out << " + ";
            out << name << "^" << r;
            empty = false;
        };
        piece("GW", gw_rank);
        piece("W(k)", w_rank);
        piece("Z", std::max(z_rank, free_rank));
        piece("(Z/2)", torsion_rank);
        for (const std::string& d : two_torsion) {
            if (!empty) out << " + ";
            out << "Z/" << d;
            empty = false;
        }
        return empty ? "0" : out.str();
    }

    std::string text() const {
        std::ostringstream out;
        out << theory << " n=" << n << " q=" << degree << " twist=" << twist;
        if (theory == "chw" || theory == "icoh" || theory == "witt") out << " field=" << field;
        if (theory == "chw") out << " mode=" << mode;
        out << ": " << group_str();
        if (!basis.empty()) {
            out << "\n  basis:";
            for (const std::string& b : basis) out << " " << b;
        }
        for (const std::string& s : notes) out << "\n  note: " << s;
        return out.str();
    }
};

}  // namespace qoc
