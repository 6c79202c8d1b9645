#pragma once

// Umbrella header.

#include "checks.hpp"

namespace qoc {

// Convenience entry points mirroring the module operations.

inline uint8_t witt_reduce(const WittModel& model, const Int& w) { return model.reduce2(w); }

inline bool in_fundamental_ideal(const WittModel& model, const Int& w) {
    return model.in_fundamental_ideal(w);
}

}  // namespace qoc
