#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "mdl/core.hpp"
#include "mdl/extension.hpp"

namespace mdl {

// Conclusions established so far by the reference fixpoint.
class DerivationState {
public:
    bool has_plus(Mode m, Literal l) const { return plus_.count(key(m, l)) > 0; }
    bool has_minus(Mode m, Literal l) const { return minus_.count(key(m, l)) > 0; }
    bool add_plus(Mode m, Literal l) { return plus_.insert(key(m, l)).second; }
    bool add_minus(Mode m, Literal l) { return minus_.insert(key(m, l)).second; }
    std::size_t size() const { return plus_.size() + minus_.size(); }

private:
    static std::size_t key(Mode m, Literal l) { return l.key() * kModeCount + index(m); }
    std::unordered_set<std::size_t> plus_, minus_;
};

// Rule-level queries. `i` is the 1-based chain index.
bool body_applicable(const Rule& r, const DerivationState& s);
bool body_discarded(const Rule& r, const DerivationState& s);
bool conv_applicable(const Rule& r, Mode x, const DerivationState& s);
bool conv_discarded(const Rule& r, Mode x, const DerivationState& s);
bool applicable(const Rule& r, Mode x, std::size_t i, const DerivationState& s);
bool discarded(const Rule& r, Mode x, std::size_t i, const DerivationState& s);

// Literal-level proof conditions over a whole theory. The theory is indexed
// on construction; the evaluator holds a reference to it.
class ProofConditions {
public:
    explicit ProofConditions(const Theory& t);

    bool holds_plus(Mode x, Literal q, const DerivationState& s) const;
    bool holds_minus(Mode x, Literal q, const DerivationState& s) const;

private:
    struct Occurrence {
        std::size_t rule;
        std::size_t index;  // 1-based
    };
    const std::vector<Occurrence>& heads(Literal q) const;
    bool superior(std::size_t a, std::size_t b) const;
    bool fact(Mode m, Literal q) const;
    bool negated_fact(Mode m, Literal q) const;
    bool fact_guard_fires(Mode x, Literal q) const;

    const Theory& theory_;
    std::unordered_map<Literal, std::vector<Occurrence>> heads_;
    std::unordered_set<std::uint64_t> sup_;
    std::unordered_set<std::size_t> facts_, negated_facts_;
};

inline bool holds_plus(Mode x, Literal q, const Theory& t, const DerivationState& s) {
    return ProofConditions(t).holds_plus(x, q, s);
}
inline bool holds_minus(Mode x, Literal q, const Theory& t, const DerivationState& s) {
    return ProofConditions(t).holds_minus(x, q, s);
}

struct ReferenceOptions {
    // Scan (mode, literal) pairs in a shuffled order seeded by this value.
    std::optional<std::uint64_t> shuffle_seed;
    // Invoked after every full scan with the number of conclusions added.
    std::function<void(std::size_t)> on_scan;
};

Extension compute_extension_reference(const Theory& t, const ReferenceOptions& opts = {});

}  // namespace mdl
