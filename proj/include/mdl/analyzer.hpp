#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mdl/core.hpp"
#include "mdl/extension.hpp"

namespace mdl {

struct DiffEntry {
    Mode mode;
    bool plus;          // which tag: plus or minus
    Literal literal;
    bool only_in_first;
};

struct DiffReport {
    std::vector<DiffEntry> entries;
    bool equivalent() const { return entries.empty(); }
};

// Throws std::invalid_argument when the Herbrand bases differ.
DiffReport diff_extensions(const Extension& a, const Extension& b);
std::string render_diff(const DiffReport& d, std::string_view first = "linear",
                        std::string_view second = "reference");

struct PropositionCheck {
    std::string name;
    std::vector<std::string> violations;
};

struct PropositionReport {
    std::vector<PropositionCheck> checks;
    bool ok() const;
    std::size_t violation_count() const;
};

// Coherence, consistency and the five inclusions between modes.
PropositionReport verify_propositions(const Theory& t, const Extension& e);
std::string render_propositions(const PropositionReport& r);

struct GenConfig {
    std::uint64_t seed = 1;
    std::size_t atom_count = 8;
    std::size_t rule_count = 8;
    std::size_t max_body = 2;
    std::size_t max_chain = 3;
    std::array<double, 3> mode_weights{1.0, 1.0, 1.0};  // belief, obligation, outcome
    double superiority_density = 0.3;
    double fact_density = 0.4;
    double modal_body_ratio = 0.2;
    double modal_fact_ratio = 0.3;
};

// Deterministic per seed. Superiority only points from later to earlier rules
// with complementary heads, and facts avoid every inconsistent pair.
Theory generate_theory(const GenConfig& cfg);

// Varied configuration derived from a seed, for fuzzing.
GenConfig random_config(std::uint64_t seed, std::size_t max_atoms = 12, std::size_t max_rules = 20);

// Theory whose size is within 10% of `size` (exact for all but tiny targets).
Theory generate_sized(std::size_t size, std::uint64_t seed);

// Long outcome and obligation chains with interleaved violation facts; blocks
// are linked so that derivations propagate across the whole theory.
Theory chain_stress_theory(std::size_t size, std::uint64_t seed);

struct ScalingPoint {
    std::size_t size;
    double seconds;
};

struct ScalingReport {
    std::vector<ScalingPoint> points;
    double slope = 0.0;
    double threshold = 1.15;
    bool pass() const { return slope <= threshold; }
};

// Least-squares slope of log(seconds) against log(size). Needs at least two
// distinct sizes.
double fit_loglog(const std::vector<ScalingPoint>& points);

using EngineFn = std::function<Extension(const Theory&)>;

// Times `engine` (linear engine by default) on chain-stress theories. Sizes
// must be strictly increasing, at least three, and span a factor of ten.
ScalingReport scaling_benchmark(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                EngineFn engine = {}, std::size_t repeats = 5);
std::string render_scaling(const ScalingReport& r);

}  // namespace mdl
