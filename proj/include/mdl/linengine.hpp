#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdl/core.hpp"
#include "mdl/extension.hpp"

namespace mdl {

// Snapshot of one rule of the transformed theory.
struct EngineRule {
    std::string label;  // label of the source rule
    Mode mode = Mode::B;
    bool is_conversion = false;
    std::vector<BodyElement> body;     // elements not yet satisfied
    std::optional<OutcomeChain> head;  // nullopt once the rule is gone
};

struct Event {
    bool proved = true;
    Mode mode = Mode::B;
    Literal literal;
    friend bool operator==(const Event&, const Event&) = default;
};

struct RunOptions {
    // Randomizes rule, fact and event processing order.
    std::optional<std::uint64_t> shuffle_seed;
    // Called after each recorded conclusion with the represented size
    // before and after the call.
    std::function<void(const Event&, std::size_t, std::size_t)> on_record;
};

class EngineState {
public:
    EngineState(EngineState&&) noexcept;
    EngineState& operator=(EngineState&&) noexcept;
    ~EngineState();

    std::size_t rule_count() const;
    EngineRule rule(std::size_t i) const;
    std::size_t outcome_clone_count() const;
    std::size_t conversion_clone_count() const;

    // Superiority between engine rules of one mode inherited from the source
    // pairs, rendered as "label@MODE".
    std::vector<std::pair<std::string, std::string>> superiority() const;
    // Pairs (r, s) where r's mode prevails over s's mode by Conflict and the
    // heads are complementary. Computed on demand; the engine itself only
    // keeps per-literal tallies of them.
    std::vector<std::pair<std::string, std::string>> conflict_pairs() const;

    bool recorded(bool positive, Mode m, Literal l) const;
    std::vector<TaggedConclusion> records(Literal l) const;
    std::size_t residual_size() const;
    std::size_t represented_size() const;
    std::size_t pending_events() const;
    Extension extension() const;

private:
    struct Impl;
    explicit EngineState(std::unique_ptr<Impl> impl);
    std::unique_ptr<Impl> impl_;

    friend EngineState initialize(const Theory& t, const RunOptions& opts);
    friend void assert_facts(EngineState& st);
    friend void proved(EngineState& st, Literal l, Mode x);
    friend void refuted(EngineState& st, Literal l, Mode x);
    friend bool step(EngineState& st);
};

EngineState initialize(const Theory& t, const RunOptions& opts = {});
void assert_facts(EngineState& st);
// Record a conclusion and transform the theory accordingly. Re-recording a
// known conclusion is a no-op. Follow-up conclusions are queued.
void proved(EngineState& st, Literal l, Mode x);
void refuted(EngineState& st, Literal l, Mode x);
// Process one queued conclusion; false when the queue is empty.
bool step(EngineState& st);
void drain(EngineState& st);

Extension run(const Theory& t, const RunOptions& opts = {});

}  // namespace mdl
