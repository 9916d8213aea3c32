#include <algorithm>

#include "common.hpp"

using namespace mdl;
using mdl::testing::lit;
using mdl::testing::parse_ok;

TEST(Atom, InterningSharesIds) {
    Atom a("alpha"), b("alpha"), c("beta");
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    EXPECT_EQ(a.name(), "alpha");
    EXPECT_FALSE(Atom().valid());
}

TEST(Atom, IdentifierRules) {
    EXPECT_TRUE(Atom::is_identifier("visit_John"));
    EXPECT_TRUE(Atom::is_identifier("_x1"));
    EXPECT_TRUE(Atom::is_identifier("1x"));
    EXPECT_FALSE(Atom::is_identifier(""));
    EXPECT_FALSE(Atom::is_identifier("a-b"));
}

TEST(Literal, ComplementIsInvolution) {
    Literal p = lit("p");
    EXPECT_EQ(complement(p), lit("~p"));
    EXPECT_EQ(complement(complement(p)), p);
    EXPECT_EQ(to_string(complement(p)), "~p");
    EXPECT_EQ(p.key() ^ 1u, complement(p).key());
}

TEST(Literal, NameOrderPutsPositiveFirst) {
    EXPECT_TRUE(name_less(lit("a"), lit("~a")));
    EXPECT_FALSE(name_less(lit("~a"), lit("a")));
    EXPECT_TRUE(name_less(lit("~a"), lit("b")));
}

TEST(Mode, ParseAndPrint) {
    for (Mode m : kAllModes) EXPECT_EQ(parse_mode(to_string(m)), m);
    EXPECT_FALSE(parse_mode("U").has_value());
    EXPECT_FALSE(parse_mode("b").has_value());
}

TEST(Mode, ConvertOnlyFromBelief) {
    for (Mode to : kAllModes) EXPECT_EQ(converts(Mode::B, to), to != Mode::B);
    for (Mode from : kAllModes)
        if (from != Mode::B)
            for (Mode to : kAllModes) EXPECT_FALSE(converts(from, to));
}

TEST(Mode, ConflictPairs) {
    int count = 0;
    for (Mode w : kAllModes)
        for (Mode l : kAllModes) count += conflicts(w, l) ? 1 : 0;
    EXPECT_EQ(count, 3);
    EXPECT_TRUE(conflicts(Mode::B, Mode::I));
    EXPECT_TRUE(conflicts(Mode::B, Mode::SI));
    EXPECT_TRUE(conflicts(Mode::O, Mode::SI));
    EXPECT_FALSE(conflicts(Mode::O, Mode::I));
    EXPECT_FALSE(conflicts(Mode::SI, Mode::O));
}

TEST(Mode, AttackingModes) {
    auto v = [](std::span<const Mode> s) { return std::vector<Mode>(s.begin(), s.end()); };
    EXPECT_EQ(v(conflicting_modes(Mode::G)), std::vector<Mode>{});
    EXPECT_EQ(v(conflicting_modes(Mode::I)), std::vector<Mode>{Mode::B});
    EXPECT_EQ(v(conflicting_modes(Mode::SI)), (std::vector<Mode>{Mode::B, Mode::O}));
    EXPECT_EQ(v(attacking_modes(Mode::SI)), (std::vector<Mode>{Mode::SI, Mode::B, Mode::O}));
    EXPECT_EQ(v(attacking_modes(Mode::O)), std::vector<Mode>{Mode::O});
}

TEST(BodyElement, NegatedBeliefRejected) {
    EXPECT_THROW(BodyElement(Mode::B, lit("p"), true), std::invalid_argument);
    EXPECT_NO_THROW(BodyElement(Mode::O, lit("p"), true));
    EXPECT_EQ(to_string(BodyElement(Mode::O, lit("~p"), true)), "!O ~p");
    EXPECT_EQ(to_string(BodyElement(lit("p"))), "p");
}

TEST(ComplementSet, AllShapes) {
    using V = std::vector<BodyElement>;
    EXPECT_EQ(complement_set(lit("p")), V{lit("~p")});
    EXPECT_EQ(complement_set(BodyElement(Mode::O, lit("p"))),
              (V{BodyElement(Mode::O, lit("p"), true), BodyElement(Mode::O, lit("~p"))}));
    EXPECT_EQ(complement_set(BodyElement(Mode::O, lit("p"), true)), V{BodyElement(Mode::O, lit("p"))});
    EXPECT_EQ(complement_set(BodyElement(Mode::D, lit("p"))), V{BodyElement(Mode::D, lit("p"), true)});
}

TEST(Chain, NormalizeDropsLaterDuplicates) {
    OutcomeChain c = normalize_chain({lit("a"), lit("b"), lit("a"), lit("c")});
    EXPECT_EQ(to_string(c), "a (+) b (+) c");
    EXPECT_THROW(normalize_chain(std::span<const Literal>{}), ChainError);
}

TEST(Chain, TruncateKeepsPrefix) {
    OutcomeChain c = normalize_chain({lit("a"), lit("b"), lit("c")});
    EXPECT_EQ(to_string(truncate(c, lit("b"))), "a (+) b");
    EXPECT_EQ(to_string(truncate(c, lit("a"))), "a");
    EXPECT_EQ(truncate(c, lit("z")), c);
}

TEST(Chain, RemoveDropsElement) {
    OutcomeChain c = normalize_chain({lit("a"), lit("b"), lit("c")});
    EXPECT_EQ(to_string(*remove(c, lit("b"))), "a (+) c");
    EXPECT_EQ(*remove(c, lit("z")), c);
    EXPECT_FALSE(remove(normalize_chain({lit("a")}), lit("a")).has_value());
}

TEST(Chain, TruncateAndRemoveCommuteOnDistinctLiterals) {
    OutcomeChain c = normalize_chain({lit("a"), lit("b"), lit("c"), lit("d")});
    EXPECT_EQ(*remove(truncate(c, lit("c")), lit("a")), truncate(*remove(c, lit("a")), lit("c")));
}

TEST(Rule, BodySortedAndDeduplicated) {
    Rule r("r", RuleKind::B, {lit("b"), lit("a"), lit("b")}, normalize_chain({lit("c")}));
    ASSERT_EQ(r.body.size(), 2u);
    EXPECT_TRUE(std::is_sorted(r.body.begin(), r.body.end()));
    EXPECT_NE(r.body[0], r.body[1]);
    EXPECT_TRUE(r.convertible());
    Rule modal("m", RuleKind::B, {BodyElement(Mode::O, lit("a"))}, normalize_chain({lit("c")}));
    EXPECT_FALSE(modal.convertible());
    Rule empty("e", RuleKind::B, {}, normalize_chain({lit("c")}));
    EXPECT_FALSE(empty.convertible());
}

TEST(Theory, RejectsBadRules) {
    Theory t;
    t.add_rule(Rule("r", RuleKind::U, {}, normalize_chain({lit("a")})));
    EXPECT_THROW(t.add_rule(Rule("r", RuleKind::U, {}, normalize_chain({lit("b")}))), TheoryError);
    EXPECT_THROW(t.add_rule(Rule("s", RuleKind::B, {}, normalize_chain({lit("a"), lit("b")}))), TheoryError);
    EXPECT_THROW(t.add_rule(Rule("bad-label", RuleKind::U, {}, normalize_chain({lit("a")}))), TheoryError);
    EXPECT_THROW(t.add_superiority("r", "missing"), TheoryError);
}

TEST(Theory, DeduplicatesFactsAndSuperiority) {
    Theory t;
    t.add_fact(lit("a"));
    t.add_fact(lit("a"));
    t.add_rule(Rule("r", RuleKind::U, {}, normalize_chain({lit("a")})));
    t.add_rule(Rule("s", RuleKind::U, {}, normalize_chain({lit("~a")})));
    t.add_superiority("r", "s");
    t.add_superiority("r", "s");
    EXPECT_EQ(t.facts().size(), 1u);
    EXPECT_EQ(t.superiority().size(), 1u);
    EXPECT_EQ(t.find_rule("s"), 1u);
    EXPECT_FALSE(t.find_rule("x").has_value());
    EXPECT_TRUE(t.has_fact(lit("a")));
}

TEST(Theory, SizeCountsOccurrencesAndRules) {
    Theory t = parse_ok("fact a. fact O b. rule r1: a =O> c. rule r2: a, O b => d.");
    EXPECT_EQ(theory_size(t), 9u);
}

TEST(Theory, EquivalenceIgnoresOrder) {
    Theory a = parse_ok("fact x. rule r: x => y. rule s: => ~y. r > s.");
    Theory b = parse_ok("rule s: => ~y. r > s. rule r: x => y. fact x.");
    Theory c = parse_ok("fact x. rule r: x => y. rule s: => ~y.");
    EXPECT_TRUE(equivalent(a, b));
    EXPECT_FALSE(equivalent(a, c));
}

TEST(Herbrand, BothPolaritiesForEveryAtom) {
    Theory t = parse_ok("fact b. rule r: a => ~c.");
    HerbrandBase hb = herbrand_base(t);
    std::vector<std::string> names;
    for (Literal l : hb.literals) names.push_back(to_string(l));
    EXPECT_EQ(names, (std::vector<std::string>{"a", "~a", "b", "~b", "c", "~c"}));
    EXPECT_EQ(hb.modal.size(), 36u);
}

namespace {
std::vector<ViolationKind> kinds(std::string_view src) {
    std::vector<ViolationKind> out;
    for (const auto& v : check_consistency(parse_ok(src)).violations) out.push_back(v.kind);
    return out;
}
}  // namespace

TEST(Consistency, FixturesAccepted) {
    for (const auto& name : mdl::testing::fixture_names())
        EXPECT_TRUE(check_consistency(mdl::testing::fixture(name)).ok()) << name;
}

TEST(Consistency, ViolationKinds) {
    using K = ViolationKind;
    EXPECT_EQ(kinds("fact p. fact ~p."), std::vector<K>{K::ComplementaryFacts});
    EXPECT_EQ(kinds("fact O p. fact !O p."), std::vector<K>{K::NegatedModalFacts});
    EXPECT_EQ(kinds("fact G p. fact G ~p."), std::vector<K>{K::ComplementaryModal});
    EXPECT_EQ(kinds("fact O p. fact O ~p."), std::vector<K>{K::ComplementaryModal});
    EXPECT_EQ(kinds("fact p. fact I ~p."), std::vector<K>{K::ConflictingModes});
    EXPECT_EQ(kinds("fact O p. fact SI ~p."), std::vector<K>{K::ConflictingModes});
    EXPECT_TRUE(kinds("fact D p. fact D ~p.").empty());
    EXPECT_TRUE(kinds("fact p. fact O ~p.").empty());
}

TEST(Consistency, SuperiorityCycles) {
    auto r = check_consistency(parse_ok("rule a: => p. rule b: => ~p. rule c: => p. a > b. b > c. c > a."));
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].kind, ViolationKind::SuperiorityCycle);
    EXPECT_NE(r.violations[0].detail.find("a > b > c > a"), std::string::npos);
    EXPECT_FALSE(check_consistency(parse_ok("rule a: => p. a > a.")).ok());
    EXPECT_TRUE(check_consistency(parse_ok("rule a: => p. rule b: => ~p. rule c: => p. a > b. c > b.")).ok());
}
