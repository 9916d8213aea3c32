#include "mdl/refengine.hpp"

#include <algorithm>
#include <random>

namespace mdl {

namespace {

bool element_holds(const BodyElement& e, const DerivationState& s) {
    return e.negated ? s.has_minus(e.mode, e.literal) : s.has_plus(e.mode, e.literal);
}

bool element_fails(const BodyElement& e, const DerivationState& s) {
    return e.negated ? s.has_plus(e.mode, e.literal) : s.has_minus(e.mode, e.literal);
}

void check_index(const Rule& r, std::size_t i) {
    if (i < 1 || i > r.head.size())
        throw std::out_of_range("chain index " + std::to_string(i) + " out of range for rule " + r.label);
}

// Every earlier chain element has been passed over for mode x.
bool prefix_passed(const Rule& r, Mode x, std::size_t i, const DerivationState& s) {
    for (std::size_t k = 0; k + 1 < i; ++k) {
        Literal c = r.head[k];
        if (x == Mode::O) {
            if (!(s.has_plus(Mode::O, c) && s.has_minus(Mode::B, c))) return false;
            continue;
        }
        if (!s.has_minus(x, c)) return false;
        auto conf = conflicting_modes(x);
        if (!conf.empty() &&
            std::none_of(conf.begin(), conf.end(), [&](Mode m) { return s.has_plus(m, complement(c)); }))
            return false;
    }
    return true;
}

// Some earlier chain element blocks mode x for good.
bool prefix_blocked(const Rule& r, Mode x, std::size_t i, const DerivationState& s) {
    for (std::size_t k = 0; k + 1 < i; ++k) {
        Literal c = r.head[k];
        if (x == Mode::O) {
            if (s.has_minus(Mode::O, c) || s.has_plus(Mode::B, c)) return true;
            continue;
        }
        if (s.has_plus(x, c)) return true;
        auto conf = conflicting_modes(x);
        if (!conf.empty() &&
            std::all_of(conf.begin(), conf.end(), [&](Mode m) { return s.has_minus(m, complement(c)); }))
            return true;
    }
    return false;
}

}  // namespace

bool body_applicable(const Rule& r, const DerivationState& s) {
    return std::all_of(r.body.begin(), r.body.end(), [&](const BodyElement& e) { return element_holds(e, s); });
}

bool body_discarded(const Rule& r, const DerivationState& s) {
    return std::any_of(r.body.begin(), r.body.end(), [&](const BodyElement& e) { return element_fails(e, s); });
}

bool conv_applicable(const Rule& r, Mode x, const DerivationState& s) {
    if (!r.convertible() || x == Mode::B) return false;
    return std::all_of(r.body.begin(), r.body.end(),
                       [&](const BodyElement& e) { return s.has_plus(x, e.literal); });
}

bool conv_discarded(const Rule& r, Mode x, const DerivationState& s) {
    if (!r.convertible() || x == Mode::B) return true;
    return std::any_of(r.body.begin(), r.body.end(),
                       [&](const BodyElement& e) { return s.has_minus(x, e.literal); });
}

bool applicable(const Rule& r, Mode x, std::size_t i, const DerivationState& s) {
    check_index(r, i);
    switch (x) {
        case Mode::B:
            return r.kind == RuleKind::B && body_applicable(r, s);
        case Mode::O:
            if (r.kind == RuleKind::O && body_applicable(r, s) && prefix_passed(r, x, i, s)) return true;
            return conv_applicable(r, x, s);
        case Mode::D:
            if (r.kind == RuleKind::U && body_applicable(r, s)) return true;
            return conv_applicable(r, x, s);
        default:
            if (r.kind == RuleKind::U && body_applicable(r, s) && prefix_passed(r, x, i, s)) return true;
            return conv_applicable(r, x, s);
    }
}

bool discarded(const Rule& r, Mode x, std::size_t i, const DerivationState& s) {
    check_index(r, i);
    switch (x) {
        case Mode::B:
            return r.kind != RuleKind::B || body_discarded(r, s);
        case Mode::O:
            return (r.kind != RuleKind::O || body_discarded(r, s) || prefix_blocked(r, x, i, s)) &&
                   conv_discarded(r, x, s);
        case Mode::D:
            return (r.kind != RuleKind::U || body_discarded(r, s)) && conv_discarded(r, x, s);
        default:
            return (r.kind != RuleKind::U || body_discarded(r, s) || prefix_blocked(r, x, i, s)) &&
                   conv_discarded(r, x, s);
    }
}

ProofConditions::ProofConditions(const Theory& t) : theory_(t) {
    for (std::size_t r = 0; r < t.rules().size(); ++r) {
        const OutcomeChain& c = t.rules()[r].head;
        for (std::size_t i = 0; i < c.size(); ++i) heads_[c[i]].push_back({r, i + 1});
    }
    for (auto [a, b] : t.superiority()) sup_.insert((std::uint64_t(a) << 32) | b);
    for (const BodyElement& f : t.facts()) {
        std::size_t k = f.literal.key() * kModeCount + index(f.mode);
        (f.negated ? negated_facts_ : facts_).insert(k);
    }
}

const std::vector<ProofConditions::Occurrence>& ProofConditions::heads(Literal q) const {
    static const std::vector<Occurrence> none;
    auto it = heads_.find(q);
    return it == heads_.end() ? none : it->second;
}

bool ProofConditions::superior(std::size_t a, std::size_t b) const {
    return sup_.count((std::uint64_t(a) << 32) | b) > 0;
}

bool ProofConditions::fact(Mode m, Literal q) const { return facts_.count(q.key() * kModeCount + index(m)) > 0; }

bool ProofConditions::negated_fact(Mode m, Literal q) const {
    return negated_facts_.count(q.key() * kModeCount + index(m)) > 0;
}

bool ProofConditions::fact_guard_fires(Mode x, Literal q) const {
    if (negated_fact(x, q)) return true;
    if (x == Mode::D) return false;
    for (Mode m : attacking_modes(x))
        if (fact(m, complement(q))) return true;
    return false;
}

bool ProofConditions::holds_plus(Mode x, Literal q, const DerivationState& s) const {
    const auto& rules = theory_.rules();
    if (fact(x, q)) return true;
    if (fact_guard_fires(x, q)) return false;
    const auto& support = heads(q);
    const auto& attack = heads(complement(q));

    if (x == Mode::D) {
        for (const Occurrence& r : support) {
            if (!applicable(rules[r.rule], Mode::D, r.index, s)) continue;
            bool beaten = std::any_of(attack.begin(), attack.end(), [&](const Occurrence& a) {
                return !discarded(rules[a.rule], Mode::D, a.index, s) && superior(a.rule, r.rule);
            });
            if (!beaten) return true;
        }
        return false;
    }

    if (std::none_of(support.begin(), support.end(),
                     [&](const Occurrence& r) { return applicable(rules[r.rule], x, r.index, s); }))
        return false;
    for (const Occurrence& a : attack) {
        for (Mode m : attacking_modes(x)) {
            if (discarded(rules[a.rule], m, a.index, s)) continue;
            bool countered = false;
            for (const Occurrence& t : support) {
                for (Mode d : kAllModes) {
                    bool relevant = (d == m && superior(t.rule, a.rule)) || conflicts(d, m);
                    if (relevant && applicable(rules[t.rule], d, t.index, s)) {
                        countered = true;
                        break;
                    }
                }
                if (countered) break;
            }
            if (!countered) return false;
        }
    }
    return true;
}

bool ProofConditions::holds_minus(Mode x, Literal q, const DerivationState& s) const {
    const auto& rules = theory_.rules();
    if (fact(x, q)) return false;
    if (fact_guard_fires(x, q)) return true;
    const auto& support = heads(q);
    const auto& attack = heads(complement(q));

    if (x == Mode::D) {
        return std::all_of(support.begin(), support.end(), [&](const Occurrence& r) {
            if (discarded(rules[r.rule], Mode::D, r.index, s)) return true;
            return std::any_of(attack.begin(), attack.end(), [&](const Occurrence& a) {
                return applicable(rules[a.rule], Mode::D, a.index, s) && superior(a.rule, r.rule);
            });
        });
    }

    if (std::all_of(support.begin(), support.end(),
                    [&](const Occurrence& r) { return discarded(rules[r.rule], x, r.index, s); }))
        return true;
    for (const Occurrence& a : attack) {
        for (Mode m : attacking_modes(x)) {
            if (!applicable(rules[a.rule], m, a.index, s)) continue;
            bool unanswered = std::all_of(support.begin(), support.end(), [&](const Occurrence& t) {
                for (Mode d : kAllModes) {
                    bool relevant = (d == m && superior(t.rule, a.rule)) || conflicts(d, m);
                    if (relevant && !discarded(rules[t.rule], d, t.index, s)) return false;
                }
                return true;
            });
            if (unanswered) return true;
        }
    }
    return false;
}

Extension compute_extension_reference(const Theory& t, const ReferenceOptions& opts) {
    HerbrandBase hb = herbrand_base(t);
    ProofConditions pc(t);
    DerivationState state;
    std::vector<std::pair<Mode, Literal>> order = hb.modal;
    if (opts.shuffle_seed) {
        std::mt19937_64 rng(*opts.shuffle_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }

    for (;;) {
        std::size_t added = 0;
        for (const auto& [m, l] : order) {
            if (!state.has_plus(m, l) && pc.holds_plus(m, l, state)) added += state.add_plus(m, l);
            if (!state.has_minus(m, l) && pc.holds_minus(m, l, state)) added += state.add_minus(m, l);
        }
        if (opts.on_scan) opts.on_scan(added);
        if (added == 0) break;
    }

    Extension e;
    e.herbrand = hb.literals;
    for (const auto& [m, l] : hb.modal) {
        if (state.has_plus(m, l)) e.plus[index(m)].insert(l);
        if (state.has_minus(m, l)) e.minus[index(m)].insert(l);
    }
    return e;
}

}  // namespace mdl
