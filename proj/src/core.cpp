#include "mdl/core.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

namespace mdl {

namespace {

class Interner {
public:
    std::uint32_t intern(std::string_view name) {
        {
            std::shared_lock lock(mu_);
            if (auto it = ids_.find(name); it != ids_.end()) return it->second;
        }
        std::unique_lock lock(mu_);
        if (auto it = ids_.find(name); it != ids_.end()) return it->second;
        names_.emplace_back(name);
        auto id = static_cast<std::uint32_t>(names_.size() - 1);
        ids_.emplace(names_.back(), id);
        return id;
    }

    const std::string& name(std::uint32_t id) {
        std::shared_lock lock(mu_);
        return names_[id];
    }

private:
    std::shared_mutex mu_;
    std::deque<std::string> names_;  // deque keeps references stable
    std::unordered_map<std::string_view, std::uint32_t> ids_;
};

Interner& interner() {
    static Interner instance;
    return instance;
}

}  // namespace

bool Atom::is_identifier(std::string_view name) {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

Atom::Atom(std::string_view name) {
    if (!is_identifier(name))
        throw std::invalid_argument("invalid atom name '" + std::string(name) + "'");
    id_ = interner().intern(name);
}

const std::string& Atom::name() const {
    static const std::string empty;
    return valid() ? interner().name(id_) : empty;
}

Literal complement(Literal l) { return Literal(l.atom, !l.positive); }

std::string to_string(Literal l) { return (l.positive ? "" : "~") + l.atom.name(); }

bool name_less(Literal a, Literal b) {
    if (a.atom != b.atom) return a.atom.name() < b.atom.name();
    return a.positive && !b.positive;
}

std::string_view to_string(Mode m) {
    static constexpr std::array<std::string_view, kModeCount> names{"B", "O", "D", "G", "I", "SI"};
    return names[index(m)];
}

std::optional<Mode> parse_mode(std::string_view s) {
    for (Mode m : kAllModes)
        if (to_string(m) == s) return m;
    return std::nullopt;
}

std::span<const Mode> conflicting_modes(Mode x) {
    static constexpr std::array<Mode, 1> for_i{Mode::B};
    static constexpr std::array<Mode, 2> for_si{Mode::B, Mode::O};
    switch (x) {
        case Mode::I: return for_i;
        case Mode::SI: return for_si;
        default: return {};
    }
}

std::span<const Mode> attacking_modes(Mode x) {
    static constexpr std::array<std::array<Mode, 3>, kModeCount> table{{
        {Mode::B, Mode::B, Mode::B},
        {Mode::O, Mode::O, Mode::O},
        {Mode::D, Mode::D, Mode::D},
        {Mode::G, Mode::G, Mode::G},
        {Mode::I, Mode::B, Mode::B},
        {Mode::SI, Mode::B, Mode::O},
    }};
    const auto& row = table[index(x)];
    return std::span<const Mode>(row.data(), 1 + conflicting_modes(x).size());
}

BodyElement::BodyElement(Mode m, Literal l, bool neg) : negated(neg), mode(m), literal(l) {
    if (m == Mode::B && neg)
        throw std::invalid_argument("belief mode cannot be negated: " + to_string(l));
}

std::string to_string(const BodyElement& e) {
    if (e.plain()) return to_string(e.literal);
    std::string out = e.negated ? "!" : "";
    out += to_string(e.mode);
    out += ' ';
    out += to_string(e.literal);
    return out;
}

std::vector<BodyElement> complement_set(const BodyElement& e) {
    if (e.plain()) return {BodyElement(complement(e.literal))};
    if (e.negated) return {BodyElement(e.mode, e.literal, false)};
    if (e.mode == Mode::D) return {BodyElement(Mode::D, e.literal, true)};
    return {BodyElement(e.mode, e.literal, true), BodyElement(e.mode, complement(e.literal))};
}

std::optional<std::size_t> OutcomeChain::position(Literal l) const {
    auto it = std::find(items_.begin(), items_.end(), l);
    if (it == items_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - items_.begin());
}

OutcomeChain normalize_chain(std::span<const Literal> items) {
    if (items.empty()) throw ChainError("outcome chain must not be empty");
    OutcomeChain c;
    std::unordered_set<Literal> seen;
    for (const Literal& l : items)
        if (seen.insert(l).second) c.items_.push_back(l);
    return c;
}

OutcomeChain truncate(const OutcomeChain& c, Literal l) {
    auto pos = c.position(l);
    if (!pos) return c;
    return normalize_chain(c.items().first(*pos + 1));
}

std::optional<OutcomeChain> remove(const OutcomeChain& c, Literal l) {
    if (!c.contains(l)) return c;
    std::vector<Literal> rest;
    for (const Literal& x : c.items())
        if (x != l) rest.push_back(x);
    if (rest.empty()) return std::nullopt;
    return normalize_chain(rest);
}

std::string to_string(const OutcomeChain& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += " (+) ";
        out += to_string(c[i]);
    }
    return out;
}

std::string_view to_string(RuleKind k) {
    switch (k) {
        case RuleKind::B: return "B";
        case RuleKind::O: return "O";
        case RuleKind::U: return "U";
    }
    return "?";
}

Rule::Rule(std::string label_, RuleKind kind_, std::vector<BodyElement> body_, OutcomeChain head_)
    : label(std::move(label_)), kind(kind_), body(std::move(body_)), head(std::move(head_)) {
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
}

bool Rule::convertible() const {
    return kind == RuleKind::B && !body.empty() &&
           std::all_of(body.begin(), body.end(), [](const BodyElement& e) { return e.plain(); });
}

void Theory::add_fact(const BodyElement& f) {
    if (fact_keys_.insert(fact_key(f)).second) facts_.push_back(f);
}

bool Theory::has_fact(const BodyElement& f) const { return fact_keys_.count(fact_key(f)) > 0; }

std::size_t Theory::add_rule(Rule r) {
    if (!Atom::is_identifier(r.label)) throw TheoryError("invalid rule label '" + r.label + "'");
    if (find_rule(r.label)) throw TheoryError("duplicate rule label '" + r.label + "'");
    if (r.kind == RuleKind::B && r.head.size() != 1)
        throw TheoryError("belief rule '" + r.label + "' must have a single-literal head");
    labels_.emplace(r.label, rules_.size());
    rules_.push_back(std::move(r));
    return rules_.size() - 1;
}

void Theory::add_superiority(std::string_view superior, std::string_view inferior) {
    auto a = find_rule(superior);
    if (!a) throw TheoryError("unknown rule label '" + std::string(superior) + "'");
    auto b = find_rule(inferior);
    if (!b) throw TheoryError("unknown rule label '" + std::string(inferior) + "'");
    if (sup_keys_.insert((std::uint64_t(*a) << 32) | *b).second) sup_.emplace_back(*a, *b);
}

std::optional<std::size_t> Theory::find_rule(std::string_view label) const {
    auto it = labels_.find(std::string(label));
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

bool equivalent(const Theory& a, const Theory& b) {
    auto facts = [](const Theory& t) {
        return std::set<BodyElement>(t.facts().begin(), t.facts().end());
    };
    if (facts(a) != facts(b)) return false;
    if (a.rules().size() != b.rules().size()) return false;
    for (const Rule& r : a.rules()) {
        auto j = b.find_rule(r.label);
        if (!j) return false;
        const Rule& s = b.rules()[*j];
        if (s.kind != r.kind || s.body != r.body || s.head != r.head) return false;
    }
    auto sup = [](const Theory& t) {
        std::set<std::pair<std::string, std::string>> out;
        for (auto [x, y] : t.superiority()) out.emplace(t.rules()[x].label, t.rules()[y].label);
        return out;
    };
    return sup(a) == sup(b);
}

std::string to_string(const TaggedConclusion& c) {
    std::string out = c.positive ? "+" : "-";
    out += to_string(c.mode);
    out += ' ';
    out += to_string(c.literal);
    return out;
}

std::size_t theory_size(const Theory& t) {
    std::size_t n = t.facts().size() + t.rules().size();
    for (const Rule& r : t.rules()) n += r.body.size() + r.head.size();
    return n;
}

HerbrandBase herbrand_base(const Theory& t) {
    std::unordered_set<Atom> atoms;
    for (const BodyElement& f : t.facts()) atoms.insert(f.literal.atom);
    for (const Rule& r : t.rules()) {
        for (const BodyElement& e : r.body) atoms.insert(e.literal.atom);
        for (const Literal& l : r.head.items()) atoms.insert(l.atom);
    }
    // Look names up once; comparing through Atom::name() locks the interner.
    std::vector<std::pair<const std::string*, Atom>> named;
    named.reserve(atoms.size());
    for (Atom a : atoms) named.emplace_back(&a.name(), a);
    std::sort(named.begin(), named.end(), [](const auto& x, const auto& y) { return *x.first < *y.first; });
    HerbrandBase hb;
    hb.literals.reserve(2 * named.size());
    for (const auto& [name, a] : named) {
        hb.literals.emplace_back(a, true);
        hb.literals.emplace_back(a, false);
    }
    for (Mode m : kAllModes)
        for (const Literal& l : hb.literals) hb.modal.emplace_back(m, l);
    return hb;
}

namespace {

std::string pair_detail(const BodyElement& a, const BodyElement& b) {
    return to_string(a) + " and " + to_string(b);
}

void find_cycles(const Theory& t, ConsistencyReport& report) {
    std::size_t n = t.rules().size();
    std::vector<std::vector<std::size_t>> succ(n);
    for (auto [a, b] : t.superiority()) succ[a].push_back(b);

    // Iterative DFS; colour 1 = on stack, 2 = done.
    std::vector<int> colour(n, 0);
    std::vector<std::size_t> parent(n, n);
    for (std::size_t root = 0; root < n; ++root) {
        if (colour[root]) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        colour[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < succ[v].size()) {
                std::size_t w = succ[v][next++];
                if (colour[w] == 0) {
                    colour[w] = 1;
                    parent[w] = v;
                    stack.emplace_back(w, 0);
                } else if (colour[w] == 1) {
                    std::vector<std::string> cycle{t.rules()[w].label};
                    for (std::size_t u = v; u != w; u = parent[u]) cycle.push_back(t.rules()[u].label);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    std::string detail;
                    for (const auto& l : cycle) detail += l + " > ";
                    detail += t.rules()[w].label;
                    report.violations.push_back({ViolationKind::SuperiorityCycle, detail});
                }
            } else {
                colour[v] = 2;
                stack.pop_back();
            }
        }
    }
}

}  // namespace

ConsistencyReport check_consistency(const Theory& t) {
    ConsistencyReport report;
    std::set<BodyElement> facts(t.facts().begin(), t.facts().end());
    auto has = [&](const BodyElement& e) { return facts.count(e) > 0; };

    for (const BodyElement& f : facts) {
        const Literal l = f.literal;
        const Literal nl = complement(l);
        if (f.plain()) {
            if (l.positive && has(BodyElement(nl)))
                report.violations.push_back({ViolationKind::ComplementaryFacts, pair_detail(f, nl)});
            for (Mode x : {Mode::I, Mode::SI})
                if (has(BodyElement(x, nl)))
                    report.violations.push_back(
                        {ViolationKind::ConflictingModes, pair_detail(f, BodyElement(x, nl))});
            continue;
        }
        if (f.negated) continue;
        if (has(BodyElement(f.mode, l, true)))
            report.violations.push_back(
                {ViolationKind::NegatedModalFacts, pair_detail(f, BodyElement(f.mode, l, true))});
        if (f.mode != Mode::D && l.positive && has(BodyElement(f.mode, nl)))
            report.violations.push_back(
                {ViolationKind::ComplementaryModal, pair_detail(f, BodyElement(f.mode, nl))});
        if (f.mode == Mode::O && has(BodyElement(Mode::SI, nl)))
            report.violations.push_back(
                {ViolationKind::ConflictingModes, pair_detail(f, BodyElement(Mode::SI, nl))});
    }
    find_cycles(t, report);
    return report;
}

}  // namespace mdl
