#include "mdl/linengine.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <unordered_map>

namespace mdl {

namespace {

constexpr std::uint8_t kUndecided = 0;
constexpr std::uint8_t kApplicable = 1;
constexpr std::uint8_t kDiscarded = 2;
constexpr std::uint32_t kNone = 0xffffffffu;

// Compressed adjacency lists keyed by a dense integer.
struct Csr {
    std::vector<std::uint32_t> start{0};
    std::vector<std::uint32_t> items;

    std::span<const std::uint32_t> operator[](std::size_t k) const {
        return {items.data() + start[k], items.data() + start[k + 1]};
    }

    static Csr build(std::size_t keys, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
        Csr c;
        c.start.assign(keys + 1, 0);
        for (const auto& [k, v] : pairs) ++c.start[k + 1];
        for (std::size_t k = 0; k < keys; ++k) c.start[k + 1] += c.start[k];
        c.items.resize(pairs.size());
        std::vector<std::uint32_t> fill(c.start.begin(), c.start.end() - 1);
        for (const auto& [k, v] : pairs) c.items[fill[k]++] = v;
        return c;
    }
};

// Modes whose chains are subject to the passed-prefix condition.
bool has_prefix(Mode m, bool conversion) {
    return !conversion && (m == Mode::O || m == Mode::G || m == Mode::I || m == Mode::SI);
}

// Modes X (other than D) for which a rule of mode m attacks X-conclusions
// about the complementary literal.
std::span<const Mode> attacked_modes(Mode m) {
    static constexpr std::array<Mode, 3> b{Mode::B, Mode::I, Mode::SI};
    static constexpr std::array<Mode, 2> o{Mode::O, Mode::SI};
    static constexpr std::array<Mode, 1> g{Mode::G};
    static constexpr std::array<Mode, 1> i{Mode::I};
    static constexpr std::array<Mode, 1> si{Mode::SI};
    switch (m) {
        case Mode::B: return b;
        case Mode::O: return o;
        case Mode::G: return g;
        case Mode::I: return i;
        case Mode::SI: return si;
        default: return {};
    }
}

// Modes over which m prevails by Conflict.
std::span<const Mode> dominated_modes(Mode m) {
    static constexpr std::array<Mode, 2> b{Mode::I, Mode::SI};
    static constexpr std::array<Mode, 1> o{Mode::SI};
    switch (m) {
        case Mode::B: return b;
        case Mode::O: return o;
        default: return {};
    }
}

}  // namespace

struct EngineState::Impl {
    struct Occ {
        std::uint32_t rule;
        std::uint32_t pos;
        std::uint32_t lit;
        Mode mode;
        std::uint8_t status = kUndecided;
        bool passed = false;
        bool blocked = false;
        bool neutralized = false;
        bool threat = false;
        bool winning = false;
        bool beaten = false;
        std::uint32_t sup_app = 0;   // applicable superior occurrences
        std::uint32_t sup_live = 0;  // superior occurrences not yet discarded
    };

    struct ERule {
        std::uint32_t source;
        Mode mode;
        bool conversion;
        std::vector<BodyElement> body;
        std::vector<std::uint8_t> satisfied;
        std::uint32_t pending;
        bool deleted = false;
        std::uint32_t first;  // first occurrence id
        std::uint32_t len;
        std::uint32_t frontier;  // positions <= frontier meet the prefix condition
        std::uint32_t cut;       // positions > cut are truncated away
    };

    struct Slot {
        std::uint32_t rule;
        std::uint32_t element;
        bool negated;
    };

    struct Queued {
        bool positive;
        Mode mode;
        std::uint32_t lit;
    };

    std::vector<std::string> labels;
    std::vector<BodyElement> facts;
    std::vector<Literal> lits;
    std::unordered_map<Literal, std::uint32_t> lit_index;
    std::size_t L = 0;

    std::vector<ERule> rules;
    std::vector<Occ> occs;
    std::vector<Slot> slots;
    Csr inferiors;   // occurrence -> occurrences it is superior to
    Csr occ_at;      // mode*L + lit -> occurrences
    Csr body_index;  // mode*L + lit -> body slots
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rule_sup;

    std::vector<std::uint8_t> decided;  // 0 none, 1 plus, 2 minus
    std::vector<std::uint8_t> queued;
    std::vector<std::uint8_t> fact_plus;
    std::vector<std::uint8_t> guard_fail;
    std::vector<std::uint32_t> sup_app, sup_live, unneutral, threats;
    std::vector<std::uint32_t> conf_app, conf_live;
    std::vector<std::uint32_t> winners, unbeaten;

    std::deque<Queued> queue;
    std::optional<std::mt19937_64> rng;
    std::function<void(const Event&, std::size_t, std::size_t)> on_record;

    std::size_t residual = 0;
    std::size_t size = 0;
    std::size_t outcome_clones = 0;
    std::size_t conversion_clones = 0;

    std::size_t key(Mode m, std::uint32_t lit) const { return index(m) * L + lit; }
    bool plus(Mode m, std::uint32_t lit) const { return decided[key(m, lit)] == 1; }
    bool minus(Mode m, std::uint32_t lit) const { return decided[key(m, lit)] == 2; }

    std::uint32_t literal_id(Literal l) const {
        auto it = lit_index.find(l);
        if (it == lit_index.end()) throw std::invalid_argument("literal not in the theory: " + to_string(l));
        return it->second;
    }

    void build(const Theory& t);
    void push(bool positive, Mode m, std::uint32_t lit);
    void check(Mode m, std::uint32_t lit);
    bool record(bool positive, Mode m, std::uint32_t lit);
    void affect(Mode m, std::uint32_t lit);
    void eval_element(std::uint32_t o);
    void cut_at(std::uint32_t r, std::uint32_t pos);
    void advance(std::uint32_t r);
    void body_complete(std::uint32_t r);
    void delete_rule(std::uint32_t r);
    void set_applicable(std::uint32_t o);
    void set_discarded(std::uint32_t o);
    void refresh(std::uint32_t o);
    template <class T>
    void maybe_shuffle(std::vector<T>& v) {
        if (rng) std::shuffle(v.begin(), v.end(), *rng);
    }
};

void EngineState::Impl::build(const Theory& t) {
    HerbrandBase hb = herbrand_base(t);
    lits = hb.literals;
    L = lits.size();
    for (std::uint32_t i = 0; i < L; ++i) lit_index.emplace(lits[i], i);
    facts = t.facts();

    // Clone rules: one engine rule per (source rule, mode) pair.
    std::vector<std::array<std::uint32_t, kModeCount>> engine_of(t.rules().size());
    auto add_rule = [&](std::uint32_t src, Mode m, bool conversion, std::vector<BodyElement> body) {
        const Rule& r = t.rules()[src];
        ERule e{src, m, conversion, std::move(body), {}, 0, false, 0, 0, 0, 0};
        e.satisfied.assign(e.body.size(), 0);
        e.pending = static_cast<std::uint32_t>(e.body.size());
        e.first = static_cast<std::uint32_t>(occs.size());
        e.len = static_cast<std::uint32_t>(r.head.size());
        e.frontier = has_prefix(m, conversion) ? 0 : e.len - 1;
        e.cut = e.len - 1;
        engine_of[src][index(m)] = static_cast<std::uint32_t>(rules.size());
        for (std::uint32_t p = 0; p < e.len; ++p)
            occs.push_back(Occ{static_cast<std::uint32_t>(rules.size()), p, literal_id(r.head[p]), m});
        size += 1 + e.body.size() + e.len;
        rules.push_back(std::move(e));
    };
    for (std::uint32_t s = 0; s < t.rules().size(); ++s) {
        const Rule& r = t.rules()[s];
        labels.push_back(r.label);
        engine_of[s].fill(kNone);
        switch (r.kind) {
            case RuleKind::B:
                add_rule(s, Mode::B, false, r.body);
                if (r.convertible()) {
                    for (Mode m : {Mode::O, Mode::D, Mode::G, Mode::I, Mode::SI}) {
                        std::vector<BodyElement> body;
                        for (const BodyElement& e : r.body) body.emplace_back(m, e.literal);
                        add_rule(s, m, true, std::move(body));
                        ++conversion_clones;
                    }
                }
                break;
            case RuleKind::O:
                add_rule(s, Mode::O, false, r.body);
                break;
            case RuleKind::U:
                for (Mode m : {Mode::D, Mode::G, Mode::I, Mode::SI}) {
                    add_rule(s, m, false, r.body);
                    ++outcome_clones;
                }
                break;
        }
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t o = 0; o < occs.size(); ++o)
        pairs.emplace_back(static_cast<std::uint32_t>(key(occs[o].mode, occs[o].lit)), o);
    occ_at = Csr::build(kModeCount * L, pairs);

    pairs.clear();
    for (std::uint32_t r = 0; r < rules.size(); ++r) {
        for (std::uint32_t j = 0; j < rules[r].body.size(); ++j) {
            const BodyElement& e = rules[r].body[j];
            pairs.emplace_back(static_cast<std::uint32_t>(key(e.mode, literal_id(e.literal))),
                               static_cast<std::uint32_t>(slots.size()));
            slots.push_back({r, j, e.negated});
        }
    }
    body_index = Csr::build(kModeCount * L, pairs);

    // Superiority links between occurrences of complementary literals in
    // same-mode clones of related source rules.
    pairs.clear();
    std::unordered_map<std::uint32_t, std::uint32_t> where;
    for (auto [a, b] : t.superiority()) {
        for (Mode m : kAllModes) {
            std::uint32_t ea = engine_of[a][index(m)], eb = engine_of[b][index(m)];
            if (ea == kNone || eb == kNone) continue;
            rule_sup.emplace_back(ea, eb);
            where.clear();
            for (std::uint32_t p = 0; p < rules[ea].len; ++p) where.emplace(occs[rules[ea].first + p].lit, p);
            for (std::uint32_t p = 0; p < rules[eb].len; ++p) {
                std::uint32_t inferior = rules[eb].first + p;
                auto it = where.find(occs[inferior].lit ^ 1u);
                if (it == where.end()) continue;
                pairs.emplace_back(rules[ea].first + it->second, inferior);
                ++occs[inferior].sup_live;
            }
        }
    }
    inferiors = Csr::build(occs.size(), pairs);

    std::size_t keys = kModeCount * L;
    decided.assign(keys, 0);
    queued.assign(keys, 0);
    fact_plus.assign(keys, 0);
    guard_fail.assign(keys, 0);
    sup_app.assign(keys, 0);
    sup_live.assign(keys, 0);
    unneutral.assign(keys, 0);
    threats.assign(keys, 0);
    conf_app.assign(keys, 0);
    conf_live.assign(keys, 0);
    winners.assign(L, 0);
    unbeaten.assign(L, 0);

    for (const Occ& o : occs) {
        ++sup_live[key(o.mode, o.lit)];
        if (o.mode == Mode::D) ++unbeaten[o.lit];
        for (Mode x : attacked_modes(o.mode)) ++unneutral[key(x, o.lit ^ 1u)];
    }
    for (Mode m : {Mode::I, Mode::SI})
        for (std::uint32_t q = 0; q < L; ++q)
            for (Mode w : conflicting_modes(m)) conf_live[key(m, q)] += sup_live[key(w, q)] > 0 ? 1 : 0;

    for (const BodyElement& f : facts) {
        std::uint32_t q = literal_id(f.literal);
        if (f.negated) {
            guard_fail[key(f.mode, q)] = 1;
            continue;
        }
        fact_plus[key(f.mode, q)] = 1;
        // A fact M ~q blocks X q whenever M is X or prevails over X.
        for (Mode x : kAllModes) {
            if (x == Mode::D) continue;
            auto att = attacking_modes(x);
            if (std::find(att.begin(), att.end(), f.mode) != att.end()) guard_fail[key(x, q ^ 1u)] = 1;
        }
    }

    residual = keys;
    size += residual;
}

void EngineState::Impl::push(bool positive, Mode m, std::uint32_t lit) {
    std::size_t k = key(m, lit);
    if (decided[k] || queued[k]) return;
    queued[k] = 1;
    queue.push_back({positive, m, lit});
}

void EngineState::Impl::check(Mode m, std::uint32_t lit) {
    std::size_t k = key(m, lit);
    if (decided[k] || queued[k]) return;
    bool fact = fact_plus[k];
    bool guard = guard_fail[k];
    bool pos, neg;
    if (m == Mode::D) {
        pos = fact || (!guard && winners[lit] > 0);
        neg = !fact && (guard || unbeaten[lit] == 0);
    } else {
        pos = fact || (!guard && sup_app[k] > 0 && unneutral[k] == 0);
        neg = !fact && (guard || sup_live[k] == 0 || threats[k] > 0);
    }
    if (pos)
        push(true, m, lit);
    else if (neg)
        push(false, m, lit);
}

bool EngineState::Impl::record(bool positive, Mode m, std::uint32_t lit) {
    std::size_t k = key(m, lit);
    if (decided[k]) return false;
    // A fact X q cannot be refuted; cascades may still ask for it.
    if (!positive && fact_plus[k]) return false;
    std::size_t before = size;
    decided[k] = positive ? 1 : 2;
    --residual;
    --size;

    for (std::uint32_t s : body_index[k]) {
        const Slot& slot = slots[s];
        ERule& r = rules[slot.rule];
        if (r.deleted) continue;
        if (positive != slot.negated) {
            r.satisfied[slot.element] = 1;
            --size;
            if (--r.pending == 0) body_complete(slot.rule);
        } else {
            delete_rule(slot.rule);
        }
    }

    const std::uint32_t neg = lit ^ 1u;
    switch (m) {
        case Mode::B:
            affect(Mode::O, lit);
            affect(Mode::I, neg);
            affect(Mode::SI, neg);
            break;
        case Mode::O:
            affect(Mode::O, lit);
            affect(Mode::SI, neg);
            break;
        case Mode::G:
        case Mode::I:
        case Mode::SI:
            affect(m, lit);
            break;
        case Mode::D:
            break;
    }

    if (positive) {
        if (m != Mode::D) push(false, m, neg);
        if (m == Mode::B) push(false, Mode::I, neg);
        if (m == Mode::B || m == Mode::O) push(false, Mode::SI, neg);
    }
    if (on_record) on_record(Event{positive, m, lits[lit]}, before, size);
    return true;
}

void EngineState::Impl::affect(Mode m, std::uint32_t lit) {
    for (std::uint32_t o : occ_at[key(m, lit)]) {
        const ERule& r = rules[occs[o].rule];
        if (r.conversion || r.deleted) continue;
        eval_element(o);
    }
}

void EngineState::Impl::eval_element(std::uint32_t o) {
    Occ& e = occs[o];
    if (e.passed || e.blocked) return;
    const std::uint32_t c = e.lit, nc = e.lit ^ 1u;
    bool blocked = false, passed = false;
    switch (e.mode) {
        case Mode::O:
            blocked = minus(Mode::O, c) || plus(Mode::B, c);
            passed = plus(Mode::O, c) && minus(Mode::B, c);
            break;
        case Mode::G:
            blocked = plus(Mode::G, c);
            passed = minus(Mode::G, c);
            break;
        case Mode::I:
            blocked = plus(Mode::I, c) || minus(Mode::B, nc);
            passed = minus(Mode::I, c) && plus(Mode::B, nc);
            break;
        case Mode::SI:
            blocked = plus(Mode::SI, c) || (minus(Mode::B, nc) && minus(Mode::O, nc));
            passed = minus(Mode::SI, c) && (plus(Mode::B, nc) || plus(Mode::O, nc));
            break;
        default:
            return;
    }
    if (blocked) {
        e.blocked = true;
        cut_at(e.rule, e.pos);
    } else if (passed) {
        e.passed = true;
        advance(e.rule);
    }
}

void EngineState::Impl::cut_at(std::uint32_t r, std::uint32_t pos) {
    ERule& e = rules[r];
    if (pos >= e.cut) return;
    std::uint32_t old = e.cut;
    e.cut = pos;
    for (std::uint32_t p = pos + 1; p <= old; ++p)
        if (occs[e.first + p].status == kUndecided) set_discarded(e.first + p);
}

void EngineState::Impl::advance(std::uint32_t r) {
    ERule& e = rules[r];
    while (e.frontier < e.cut && occs[e.first + e.frontier].passed) {
        ++e.frontier;
        std::uint32_t o = e.first + e.frontier;
        if (!e.deleted && e.pending == 0 && occs[o].status == kUndecided) set_applicable(o);
    }
}

void EngineState::Impl::body_complete(std::uint32_t r) {
    const ERule& e = rules[r];
    std::uint32_t last = std::min(e.frontier, e.cut);
    for (std::uint32_t p = 0; p <= last; ++p)
        if (occs[e.first + p].status == kUndecided) set_applicable(e.first + p);
}

void EngineState::Impl::delete_rule(std::uint32_t r) {
    ERule& e = rules[r];
    e.deleted = true;
    size -= 1 + e.pending;
    e.pending = 0;
    for (std::uint32_t p = 0; p <= e.cut; ++p)
        if (occs[e.first + p].status == kUndecided) set_discarded(e.first + p);
}

void EngineState::Impl::set_applicable(std::uint32_t o) {
    Occ& e = occs[o];
    e.status = kApplicable;
    if (sup_app[key(e.mode, e.lit)]++ == 0) {
        for (Mode loser : dominated_modes(e.mode))
            if (conf_app[key(loser, e.lit)]++ == 0)
                for (std::uint32_t a : occ_at[key(loser, e.lit ^ 1u)]) refresh(a);
    }
    check(e.mode, e.lit);
    for (std::uint32_t i : inferiors[o]) {
        ++occs[i].sup_app;
        refresh(i);
    }
    refresh(o);
}

void EngineState::Impl::set_discarded(std::uint32_t o) {
    Occ& e = occs[o];
    e.status = kDiscarded;
    --size;
    if (--sup_live[key(e.mode, e.lit)] == 0) {
        check(e.mode, e.lit);
        for (Mode loser : dominated_modes(e.mode))
            if (--conf_live[key(loser, e.lit)] == 0)
                for (std::uint32_t a : occ_at[key(loser, e.lit ^ 1u)]) refresh(a);
    }
    for (std::uint32_t i : inferiors[o]) {
        --occs[i].sup_live;
        refresh(i);
    }
    refresh(o);
}

void EngineState::Impl::refresh(std::uint32_t o) {
    Occ& e = occs[o];
    if (e.mode == Mode::D) {
        if (!e.winning && e.status == kApplicable && e.sup_live == 0) {
            e.winning = true;
            ++winners[e.lit];
            check(Mode::D, e.lit);
        }
        if (!e.beaten && (e.status == kDiscarded || e.sup_app > 0)) {
            e.beaten = true;
            if (--unbeaten[e.lit] == 0) check(Mode::D, e.lit);
        }
        return;
    }
    const std::uint32_t q = e.lit ^ 1u;
    const std::size_t ck = key(e.mode, q);
    if (!e.neutralized && (e.status == kDiscarded || e.sup_app > 0 || conf_app[ck] > 0)) {
        e.neutralized = true;
        for (Mode x : attacked_modes(e.mode))
            if (--unneutral[key(x, q)] == 0) check(x, q);
    }
    if (!e.threat && e.status == kApplicable && e.sup_live == 0 && conf_live[ck] == 0) {
        e.threat = true;
        for (Mode x : attacked_modes(e.mode)) {
            ++threats[key(x, q)];
            check(x, q);
        }
    }
}

EngineState::EngineState(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
EngineState::EngineState(EngineState&&) noexcept = default;
EngineState& EngineState::operator=(EngineState&&) noexcept = default;
EngineState::~EngineState() = default;

std::size_t EngineState::rule_count() const { return impl_->rules.size(); }

EngineRule EngineState::rule(std::size_t i) const {
    const Impl::ERule& e = impl_->rules.at(i);
    EngineRule out;
    out.label = impl_->labels[e.source];
    out.mode = e.mode;
    out.is_conversion = e.conversion;
    for (std::size_t j = 0; j < e.body.size(); ++j)
        if (!e.satisfied[j]) out.body.push_back(e.body[j]);
    if (e.deleted) return out;
    std::vector<Literal> head;
    for (std::uint32_t p = 0; p <= e.cut; ++p) {
        const Impl::Occ& o = impl_->occs[e.first + p];
        if (!o.passed) head.push_back(impl_->lits[o.lit]);
    }
    if (!head.empty()) out.head = normalize_chain(head);
    return out;
}

std::size_t EngineState::outcome_clone_count() const { return impl_->outcome_clones; }
std::size_t EngineState::conversion_clone_count() const { return impl_->conversion_clones; }

namespace {
std::string engine_label(const std::string& label, Mode m) { return label + "@" + std::string(to_string(m)); }
}  // namespace

std::vector<std::pair<std::string, std::string>> EngineState::superiority() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [a, b] : impl_->rule_sup) {
        const auto& ra = impl_->rules[a];
        const auto& rb = impl_->rules[b];
        if (ra.deleted || rb.deleted) continue;
        out.emplace_back(engine_label(impl_->labels[ra.source], ra.mode),
                         engine_label(impl_->labels[rb.source], rb.mode));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> EngineState::conflict_pairs() const {
    std::set<std::pair<std::string, std::string>> out;
    const Impl& s = *impl_;
    for (Mode loser : {Mode::I, Mode::SI}) {
        for (Mode winner : conflicting_modes(loser)) {
            for (std::uint32_t q = 0; q < s.L; ++q) {
                for (std::uint32_t a : s.occ_at[s.key(winner, q)]) {
                    for (std::uint32_t b : s.occ_at[s.key(loser, q ^ 1u)]) {
                        const auto& ra = s.rules[s.occs[a].rule];
                        const auto& rb = s.rules[s.occs[b].rule];
                        if (ra.deleted || rb.deleted) continue;
                        out.emplace(engine_label(s.labels[ra.source], ra.mode),
                                    engine_label(s.labels[rb.source], rb.mode));
                    }
                }
            }
        }
    }
    return {out.begin(), out.end()};
}

bool EngineState::recorded(bool positive, Mode m, Literal l) const {
    auto it = impl_->lit_index.find(l);
    if (it == impl_->lit_index.end()) return false;
    return impl_->decided[impl_->key(m, it->second)] == (positive ? 1 : 2);
}

std::vector<TaggedConclusion> EngineState::records(Literal l) const {
    std::vector<TaggedConclusion> out;
    for (Mode m : kAllModes) {
        if (recorded(true, m, l)) out.push_back({true, m, l});
        if (recorded(false, m, l)) out.push_back({false, m, l});
    }
    return out;
}

std::size_t EngineState::residual_size() const { return impl_->residual; }
std::size_t EngineState::represented_size() const { return impl_->size; }
std::size_t EngineState::pending_events() const { return impl_->queue.size(); }

Extension EngineState::extension() const {
    Extension e;
    e.herbrand = impl_->lits;
    for (Mode m : kAllModes) {
        for (std::uint32_t q = 0; q < impl_->L; ++q) {
            std::uint8_t d = impl_->decided[impl_->key(m, q)];
            if (d == 1) e.plus[index(m)].insert(impl_->lits[q]);
            if (d == 2) e.minus[index(m)].insert(impl_->lits[q]);
        }
    }
    return e;
}

EngineState initialize(const Theory& t, const RunOptions& opts) {
    auto impl = std::make_unique<EngineState::Impl>();
    if (opts.shuffle_seed) impl->rng.emplace(*opts.shuffle_seed);
    impl->on_record = opts.on_record;
    impl->build(t);

    std::vector<std::uint32_t> order(impl->rules.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) order[r] = r;
    impl->maybe_shuffle(order);
    for (std::uint32_t r : order)
        if (impl->rules[r].pending == 0) impl->body_complete(r);

    // Literals nothing supports are refuted here; everything else waits for
    // counter changes.
    std::vector<std::uint32_t> keys(kModeCount * impl->L);
    for (std::uint32_t k = 0; k < keys.size(); ++k) keys[k] = k;
    impl->maybe_shuffle(keys);
    for (std::uint32_t k : keys)
        impl->check(static_cast<Mode>(k / impl->L), static_cast<std::uint32_t>(k % impl->L));
    return EngineState(std::move(impl));
}

void assert_facts(EngineState& st) {
    auto& s = *st.impl_;
    std::vector<BodyElement> facts = s.facts;
    s.maybe_shuffle(facts);
    for (const BodyElement& f : facts) {
        std::uint32_t q = s.literal_id(f.literal);
        s.record(!f.negated, f.mode, q);
    }
}

void proved(EngineState& st, Literal l, Mode x) { st.impl_->record(true, x, st.impl_->literal_id(l)); }

void refuted(EngineState& st, Literal l, Mode x) { st.impl_->record(false, x, st.impl_->literal_id(l)); }

bool step(EngineState& st) {
    auto& s = *st.impl_;
    if (s.queue.empty()) return false;
    if (s.rng && s.queue.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, s.queue.size() - 1);
        std::swap(s.queue.front(), s.queue[pick(*s.rng)]);
    }
    EngineState::Impl::Queued e = s.queue.front();
    s.queue.pop_front();
    s.queued[s.key(e.mode, e.lit)] = 0;
    s.record(e.positive, e.mode, e.lit);
    return true;
}

void drain(EngineState& st) {
    while (step(st)) {
    }
}

Extension run(const Theory& t, const RunOptions& opts) {
    EngineState st = initialize(t, opts);
    assert_facts(st);
    drain(st);
    return st.extension();
}

}  // namespace mdl
