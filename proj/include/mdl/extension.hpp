#pragma once

#include <array>
#include <set>
#include <vector>

#include "mdl/core.hpp"

namespace mdl {

// Per-mode partition of the Herbrand literals into proved, refuted and
// undecided. Produced by both engines.
struct Extension {
    std::vector<Literal> herbrand;
    std::array<std::set<Literal>, kModeCount> plus;
    std::array<std::set<Literal>, kModeCount> minus;

    const std::set<Literal>& proved(Mode m) const { return plus[index(m)]; }
    const std::set<Literal>& refuted(Mode m) const { return minus[index(m)]; }
    bool is_proved(Mode m, Literal l) const { return plus[index(m)].count(l) > 0; }
    bool is_refuted(Mode m, Literal l) const { return minus[index(m)].count(l) > 0; }
    std::vector<Literal> undecided(Mode m) const;

    friend bool operator==(const Extension&, const Extension&) = default;
};

}  // namespace mdl
