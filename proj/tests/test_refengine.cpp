#include "common.hpp"
#include "mdl/refengine.hpp"
#include "table1.hpp"

using namespace mdl;
using mdl::testing::fixture;
using mdl::testing::lit;
using mdl::testing::lits;
using mdl::testing::parse_ok;

namespace {

Rule example3_r() { return fixture("example3").rules()[0]; }

}  // namespace

TEST(Applicability, TrivialBody) {
    Rule r("r", RuleKind::B, {lit("a1")}, normalize_chain({lit("b")}));
    DerivationState s;
    EXPECT_FALSE(body_applicable(r, s));
    EXPECT_FALSE(body_discarded(r, s));
    s.add_plus(Mode::B, lit("a1"));
    EXPECT_TRUE(body_applicable(r, s));
    EXPECT_TRUE(applicable(r, Mode::B, 1, s));
}

TEST(Applicability, ModalBodyElements) {
    Rule r("r", RuleKind::U, {BodyElement(Mode::O, lit("a")), BodyElement(Mode::D, lit("b"), true)},
           normalize_chain({lit("c")}));
    DerivationState s;
    s.add_plus(Mode::O, lit("a"));
    EXPECT_FALSE(body_applicable(r, s));
    s.add_minus(Mode::D, lit("b"));
    EXPECT_TRUE(body_applicable(r, s));
    DerivationState d;
    d.add_plus(Mode::D, lit("b"));
    EXPECT_TRUE(body_discarded(r, d));
}

TEST(Applicability, ConversionNeedsModalBody) {
    Rule r("r2", RuleKind::B, {lit("b"), lit("c")}, normalize_chain({lit("d")}));
    DerivationState s;
    s.add_plus(Mode::B, lit("b"));
    s.add_plus(Mode::O, lit("b"));
    s.add_plus(Mode::O, lit("c"));
    EXPECT_FALSE(body_applicable(r, s));
    EXPECT_TRUE(conv_applicable(r, Mode::O, s));
    EXPECT_FALSE(conv_applicable(r, Mode::B, s));
    s.add_minus(Mode::G, lit("c"));
    EXPECT_TRUE(conv_discarded(r, Mode::G, s));
    Rule modal("m", RuleKind::B, {BodyElement(Mode::O, lit("b"))}, normalize_chain({lit("d")}));
    EXPECT_TRUE(conv_discarded(modal, Mode::O, s));
}

TEST(Applicability, Example3IntentionAtSecondElement) {
    Rule r = example3_r();
    DerivationState s;
    s.add_plus(Mode::B, lit("a1"));
    s.add_plus(Mode::B, lit("~b1"));
    s.add_minus(Mode::I, lit("b1"));
    EXPECT_TRUE(applicable(r, Mode::I, 2, s));
    EXPECT_FALSE(applicable(r, Mode::I, 3, s));
}

TEST(Applicability, Example3SocialIntentionAtThirdElement) {
    Rule r = example3_r();
    DerivationState s;
    s.add_plus(Mode::B, lit("a1"));
    s.add_plus(Mode::B, lit("~b1"));
    s.add_plus(Mode::O, lit("~b2"));
    s.add_minus(Mode::SI, lit("b1"));
    s.add_minus(Mode::SI, lit("b2"));
    EXPECT_TRUE(applicable(r, Mode::SI, 3, s));
    s.add_plus(Mode::SI, lit("b3"));
    EXPECT_TRUE(discarded(r, Mode::SI, 4, s));
}

TEST(Applicability, Example3GoalDiscardedAfterFirst) {
    Rule r = example3_r();
    DerivationState s;
    s.add_plus(Mode::B, lit("a1"));
    s.add_plus(Mode::G, lit("b1"));
    EXPECT_TRUE(applicable(r, Mode::G, 1, s));
    EXPECT_FALSE(applicable(r, Mode::G, 2, s));
    EXPECT_TRUE(discarded(r, Mode::G, 2, s));
}

TEST(Applicability, DesireIgnoresPrefix) {
    Rule r = example3_r();
    DerivationState s;
    s.add_plus(Mode::B, lit("a1"));
    for (std::size_t i = 1; i <= 4; ++i) EXPECT_TRUE(applicable(r, Mode::D, i, s));
}

TEST(Applicability, ObligationReparation) {
    Rule r("n", RuleKind::O, {}, normalize_chain({lit("a"), lit("b")}));
    DerivationState s;
    EXPECT_TRUE(applicable(r, Mode::O, 1, s));
    EXPECT_FALSE(applicable(r, Mode::O, 2, s));
    s.add_plus(Mode::O, lit("a"));
    s.add_minus(Mode::B, lit("a"));
    EXPECT_TRUE(applicable(r, Mode::O, 2, s));
    DerivationState fulfilled;
    fulfilled.add_plus(Mode::B, lit("a"));
    EXPECT_TRUE(discarded(r, Mode::O, 2, fulfilled));
}

TEST(Applicability, IndexOutOfRangeThrows) {
    Rule r = example3_r();
    DerivationState s;
    EXPECT_THROW(applicable(r, Mode::D, 0, s), std::out_of_range);
    EXPECT_THROW(discarded(r, Mode::D, 5, s), std::out_of_range);
}

TEST(Applicability, NeverBothOnRandomStates) {
    Rule r = example3_r();
    std::vector<Literal> pool{lit("a1"), lit("b1"), lit("~b1"), lit("b2"), lit("~b2"), lit("b3"), lit("b4")};
    std::uint64_t x = 88172645463325252ull;
    for (int trial = 0; trial < 2000; ++trial) {
        DerivationState s;
        for (Mode m : kAllModes)
            for (Literal l : pool) {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                if (x % 4 == 0) s.add_plus(m, l);
                else if (x % 4 == 1) s.add_minus(m, l);
            }
        for (Mode m : kAllModes)
            for (std::size_t i = 1; i <= 4; ++i)
                ASSERT_FALSE(applicable(r, m, i, s) && discarded(r, m, i, s));
    }
}

TEST(ProofConditions, FactsDecideImmediately) {
    Theory t = fixture("example3");
    DerivationState s;
    EXPECT_TRUE(holds_plus(Mode::B, lit("~b1"), t, s));
    EXPECT_TRUE(holds_plus(Mode::O, lit("~b2"), t, s));
    EXPECT_TRUE(holds_minus(Mode::SI, lit("b2"), t, s));
    EXPECT_TRUE(holds_minus(Mode::B, lit("b1"), t, s));
}

TEST(ProofConditions, PlusAndMinusNeverTogether) {
    for (const auto& name : mdl::testing::fixture_names()) {
        Theory t = fixture(name);
        ProofConditions pc(t);
        DerivationState s;
        ReferenceOptions opts;
        Extension e = compute_extension_reference(t, opts);
        for (Mode m : kAllModes) {
            for (Literal l : e.proved(m)) s.add_plus(m, l);
            for (Literal l : e.refuted(m)) s.add_minus(m, l);
        }
        for (Mode m : kAllModes)
            for (Literal l : e.herbrand) EXPECT_FALSE(pc.holds_plus(m, l, s) && pc.holds_minus(m, l, s)) << name;
    }
}

TEST(Reference, Example3) {
    Extension e = compute_extension_reference(fixture("example3"));
    EXPECT_EQ(e.proved(Mode::D), lits({"b1", "b2", "b3", "b4"}));
    EXPECT_EQ(e.proved(Mode::G), lits({"b1", "b4"}));
    EXPECT_EQ(e.proved(Mode::I), lits({"b2", "b4"}));
    EXPECT_EQ(e.proved(Mode::SI), lits({"b3", "b4"}));
    EXPECT_TRUE(e.is_refuted(Mode::I, lit("b1")));
    EXPECT_TRUE(e.is_refuted(Mode::SI, lit("b1")));
    EXPECT_TRUE(e.is_refuted(Mode::SI, lit("b2")));
}

TEST(Reference, Alice) {
    Extension sick = compute_extension_reference(fixture("alice_jsick"));
    EXPECT_TRUE(sick.is_refuted(Mode::I, lit("visit_John")));
    EXPECT_TRUE(sick.is_proved(Mode::I, lit("visit_parents")));
    Extension confined = compute_extension_reference(fixture("alice_confined"));
    EXPECT_TRUE(confined.is_proved(Mode::I, lit("visit_John")));
    EXPECT_TRUE(confined.is_refuted(Mode::SI, lit("visit_John")));
}

TEST(Reference, Conversions) {
    EXPECT_TRUE(compute_extension_reference(fixture("chocolate")).is_proved(Mode::D, lit("chocolate_box")));
    EXPECT_TRUE(compute_extension_reference(fixture("rome")).is_proved(Mode::G, lit("go_to_Italy")));
    Extension o = compute_extension_reference(fixture("conv_obligation"));
    EXPECT_TRUE(o.is_proved(Mode::O, lit("d")));
    EXPECT_TRUE(o.is_refuted(Mode::B, lit("d")));
}

TEST(Reference, AppendixB) {
    Extension e = compute_extension_reference(fixture("appendixB"));
    Literal v = lit("visit_John");
    EXPECT_TRUE(e.is_proved(Mode::D, v));
    EXPECT_TRUE(e.is_proved(Mode::G, v));
    EXPECT_TRUE(e.is_refuted(Mode::I, v));
    EXPECT_TRUE(e.is_proved(Mode::I, lit("~visit_John")));
    EXPECT_TRUE(e.is_proved(Mode::I, lit("visit_parents")));
}

TEST(Reference, PeoplEyes) {
    Extension e = compute_extension_reference(fixture("peopleyes"));
    for (Literal l : lits({"laser", "glasses", "mounting_machine1", "eye_Glasses"}))
        EXPECT_TRUE(e.is_proved(Mode::B, l)) << to_string(l);
    EXPECT_TRUE(e.is_refuted(Mode::B, lit("mounting_machine2")));
    EXPECT_TRUE(e.is_proved(Mode::O, lit("~laser")));
    EXPECT_TRUE(e.is_proved(Mode::I, lit("eye_Glasses")));
    EXPECT_TRUE(e.is_proved(Mode::I, lit("mounting_machine1")));
    EXPECT_TRUE(e.is_refuted(Mode::I, lit("mounting_machine2")));
}

class TableRows : public ::testing::TestWithParam<std::size_t> {};

TEST_P(TableRows, SocialIntentionHolds) {
    const auto& row = mdl::testing::kTableRows[GetParam()];
    Theory t = parse_ok(mdl::testing::table_theory(row));
    ASSERT_TRUE(check_consistency(t).ok());
    EXPECT_TRUE(compute_extension_reference(t).is_proved(Mode::SI, lit("q"))) << table_row_name(row);
}

TEST_P(TableRows, AttackWinsWithoutCounter) {
    const auto& row = mdl::testing::kTableRows[GetParam()];
    Theory t = parse_ok(mdl::testing::table_rule("r", row.r, "a", "q") +
                        mdl::testing::table_rule("s", row.s, "b", "~q"));
    EXPECT_TRUE(compute_extension_reference(t).is_refuted(Mode::SI, lit("q"))) << table_row_name(row);
}

INSTANTIATE_TEST_SUITE_P(All, TableRows, ::testing::Range<std::size_t>(0, mdl::testing::kTableRows.size()));

TEST(Reference, CyclesStayUndecided) {
    Extension self = compute_extension_reference(fixture("cycle"));
    Extension mutual = compute_extension_reference(fixture("mutual_cycle"));
    for (Mode m : kAllModes) {
        EXPECT_FALSE(self.is_proved(m, lit("p")) || self.is_refuted(m, lit("p")));
        for (auto n : {"p", "q"}) EXPECT_FALSE(mutual.is_proved(m, lit(n)) || mutual.is_refuted(m, lit(n)));
    }
}

TEST(Reference, ScansGrowMonotonically) {
    std::vector<std::size_t> added;
    ReferenceOptions opts;
    opts.on_scan = [&](std::size_t n) { added.push_back(n); };
    compute_extension_reference(fixture("example3"), opts);
    ASSERT_FALSE(added.empty());
    EXPECT_EQ(added.back(), 0u);
    for (std::size_t i = 0; i + 1 < added.size(); ++i) EXPECT_GT(added[i], 0u);
}

TEST(Reference, ShuffleDoesNotChangeResult) {
    for (const auto& name : mdl::testing::fixture_names()) {
        Theory t = fixture(name);
        Extension base = compute_extension_reference(t);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            ReferenceOptions opts;
            opts.shuffle_seed = seed;
            EXPECT_EQ(compute_extension_reference(t, opts), base) << name;
        }
    }
}

TEST(Reference, EmptyTheory) {
    Extension e = compute_extension_reference(Theory{});
    EXPECT_TRUE(e.herbrand.empty());
}
