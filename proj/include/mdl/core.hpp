#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mdl {

// Interned propositional atom. Equal names share one id for the lifetime of
// the process, so comparison and hashing are integer operations.
class Atom {
public:
    Atom() = default;
    explicit Atom(std::string_view name);

    std::uint32_t id() const { return id_; }
    const std::string& name() const;
    bool valid() const { return id_ != kInvalid; }

    friend bool operator==(Atom a, Atom b) { return a.id_ == b.id_; }
    friend auto operator<=>(Atom a, Atom b) { return a.id_ <=> b.id_; }

    static bool is_identifier(std::string_view name);

private:
    static constexpr std::uint32_t kInvalid = 0xffffffffu;
    std::uint32_t id_ = kInvalid;
};

struct Literal {
    Atom atom;
    bool positive = true;

    Literal() = default;
    Literal(Atom a, bool pos = true) : atom(a), positive(pos) {}
    explicit Literal(std::string_view name, bool pos = true) : atom(name), positive(pos) {}

    // Dense index: 2*atom + polarity bit. Complements are neighbours.
    std::size_t key() const { return (std::size_t(atom.id()) << 1) | (positive ? 0u : 1u); }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal& a, const Literal& b) { return a.key() <=> b.key(); }
};

Literal complement(Literal l);
std::string to_string(Literal l);

enum class Mode : std::uint8_t { B = 0, O, D, G, I, SI };
inline constexpr std::size_t kModeCount = 6;
inline constexpr std::array<Mode, kModeCount> kAllModes{Mode::B, Mode::O, Mode::D,
                                                       Mode::G, Mode::I, Mode::SI};

inline constexpr std::size_t index(Mode m) { return static_cast<std::size_t>(m); }
std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view s);

// Convert(from, to): a belief rule may be used to derive `to` conclusions.
constexpr bool converts(Mode from, Mode to) { return from == Mode::B && to != Mode::B; }

// Conflict(winner, loser): winner-mode conclusions defeat loser-mode ones.
constexpr bool conflicts(Mode winner, Mode loser) {
    return (winner == Mode::B && (loser == Mode::I || loser == Mode::SI)) ||
           (winner == Mode::O && loser == Mode::SI);
}

// Modes that prevail over x via Conflict: G -> {}, I -> {B}, SI -> {B, O}.
std::span<const Mode> conflicting_modes(Mode x);

// x together with every mode that prevails over it.
std::span<const Mode> attacking_modes(Mode x);

// A body element or fact: plain literal (mode B), X l, or !X l.
struct BodyElement {
    bool negated = false;
    Mode mode = Mode::B;
    Literal literal;

    BodyElement() = default;
    BodyElement(Literal l) : literal(l) {}  // NOLINT: plain literals convert implicitly
    BodyElement(Mode m, Literal l, bool neg = false);

    bool plain() const { return mode == Mode::B; }

    friend bool operator==(const BodyElement&, const BodyElement&) = default;
    friend auto operator<=>(const BodyElement& a, const BodyElement& b) {
        if (auto c = a.literal <=> b.literal; c != 0) return c;
        if (auto c = a.mode <=> b.mode; c != 0) return c;
        return a.negated <=> b.negated;
    }
};

std::string to_string(const BodyElement& e);

std::vector<BodyElement> complement_set(const BodyElement& e);

class OutcomeChain {
public:
    std::span<const Literal> items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    const Literal& operator[](std::size_t i) const { return items_[i]; }
    const Literal& front() const { return items_.front(); }
    std::optional<std::size_t> position(Literal l) const;
    bool contains(Literal l) const { return position(l).has_value(); }

    friend bool operator==(const OutcomeChain&, const OutcomeChain&) = default;

private:
    friend OutcomeChain normalize_chain(std::span<const Literal> items);
    std::vector<Literal> items_;
};

struct ChainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Drops later duplicates; throws ChainError on empty input.
OutcomeChain normalize_chain(std::span<const Literal> items);
inline OutcomeChain normalize_chain(std::initializer_list<Literal> items) {
    return normalize_chain(std::span<const Literal>(items.begin(), items.size()));
}

OutcomeChain truncate(const OutcomeChain& c, Literal l);
std::optional<OutcomeChain> remove(const OutcomeChain& c, Literal l);
std::string to_string(const OutcomeChain& c);

enum class RuleKind : std::uint8_t { B, O, U };
std::string_view to_string(RuleKind k);

struct Rule {
    std::string label;
    RuleKind kind = RuleKind::B;
    std::vector<BodyElement> body;  // kept sorted and duplicate-free
    OutcomeChain head;

    Rule(std::string label, RuleKind kind, std::vector<BodyElement> body, OutcomeChain head);

    // Body is non-empty and all plain: usable through Convert(B, X).
    bool convertible() const;
};

struct TheoryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Theory {
public:
    const std::vector<BodyElement>& facts() const { return facts_; }
    const std::vector<Rule>& rules() const { return rules_; }
    // Pairs of rule indices (superior, inferior).
    const std::vector<std::pair<std::size_t, std::size_t>>& superiority() const { return sup_; }

    // Duplicate facts are ignored.
    void add_fact(const BodyElement& f);
    // Throws TheoryError on a duplicate label or a belief rule with a longer chain.
    std::size_t add_rule(Rule r);
    // Throws TheoryError when a label is unknown. Duplicate pairs are ignored.
    void add_superiority(std::string_view superior, std::string_view inferior);

    std::optional<std::size_t> find_rule(std::string_view label) const;
    bool has_fact(const BodyElement& f) const;
    bool empty() const { return facts_.empty() && rules_.empty(); }

private:
    static std::size_t fact_key(const BodyElement& f) {
        return (f.literal.key() * kModeCount + index(f.mode)) * 2 + (f.negated ? 1 : 0);
    }

    std::vector<BodyElement> facts_;
    std::vector<Rule> rules_;
    std::vector<std::pair<std::size_t, std::size_t>> sup_;
    std::unordered_set<std::size_t> fact_keys_;
    std::unordered_map<std::string, std::size_t> labels_;
    std::unordered_set<std::uint64_t> sup_keys_;
};

// Same facts, rules and superiority pairs regardless of statement order.
bool equivalent(const Theory& a, const Theory& b);

struct TaggedConclusion {
    bool positive = true;
    Mode mode = Mode::B;
    Literal literal;
    friend bool operator==(const TaggedConclusion&, const TaggedConclusion&) = default;
};

std::string to_string(const TaggedConclusion& c);

std::size_t theory_size(const Theory& t);

struct HerbrandBase {
    std::vector<Literal> literals;              // sorted by name, positive first
    std::vector<std::pair<Mode, Literal>> modal;
};

HerbrandBase herbrand_base(const Theory& t);

// Orders literals by name, then positive before negative.
bool name_less(Literal a, Literal b);

enum class ViolationKind : std::uint8_t {
    ComplementaryFacts,   // l and ~l
    NegatedModalFacts,    // X l and !X l
    ComplementaryModal,   // X l and X ~l, X in {O, G, I, SI}
    ConflictingModes,     // Conflict(M, X): M l and X ~l
    SuperiorityCycle,
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ConsistencyReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ConsistencyReport check_consistency(const Theory& t);

}  // namespace mdl

template <>
struct std::hash<mdl::Atom> {
    std::size_t operator()(mdl::Atom a) const noexcept { return a.id(); }
};

template <>
struct std::hash<mdl::Literal> {
    std::size_t operator()(const mdl::Literal& l) const noexcept { return l.key(); }
};
