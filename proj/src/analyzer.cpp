#include "mdl/analyzer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mdl/linengine.hpp"

namespace mdl {

DiffReport diff_extensions(const Extension& a, const Extension& b) {
    if (std::set<Literal>(a.herbrand.begin(), a.herbrand.end()) !=
        std::set<Literal>(b.herbrand.begin(), b.herbrand.end()))
        throw std::invalid_argument("extensions are over different Herbrand bases");
    DiffReport report;
    for (Mode m : kAllModes) {
        for (bool plus : {true, false}) {
            const auto& x = plus ? a.proved(m) : a.refuted(m);
            const auto& y = plus ? b.proved(m) : b.refuted(m);
            for (const Literal& l : x)
                if (!y.count(l)) report.entries.push_back({m, plus, l, true});
            for (const Literal& l : y)
                if (!x.count(l)) report.entries.push_back({m, plus, l, false});
        }
    }
    return report;
}

std::string render_diff(const DiffReport& d, std::string_view first, std::string_view second) {
    std::ostringstream os;
    if (d.equivalent()) {
        os << "equivalent\n";
        return os.str();
    }
    os << "not equivalent: " << d.entries.size() << " difference(s)\n";
    for (const DiffEntry& e : d.entries) {
        os << "  " << (e.plus ? '+' : '-') << to_string(e.mode) << ' ' << to_string(e.literal) << " only in "
           << (e.only_in_first ? first : second) << '\n';
    }
    return os.str();
}

bool PropositionReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropositionCheck& c) { return c.violations.empty(); });
}

std::size_t PropositionReport::violation_count() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.violations.size();
    return n;
}

PropositionReport verify_propositions(const Theory&, const Extension& e) {
    PropositionReport r;
    auto tag = [](char sign, Mode m, Literal l) {
        return std::string(1, sign) + std::string(to_string(m)) + " " + to_string(l);
    };

    PropositionCheck coherence{"coherence", {}};
    for (Mode m : kAllModes)
        for (const Literal& l : e.proved(m))
            if (e.is_refuted(m, l)) coherence.violations.push_back(tag('+', m, l) + " and " + tag('-', m, l));

    PropositionCheck consistency{"consistency", {}};
    for (Mode m : kAllModes) {
        if (m == Mode::D) continue;
        for (const Literal& l : e.proved(m))
            if (l.positive && e.is_proved(m, complement(l)))
                consistency.violations.push_back(tag('+', m, l) + " and " + tag('+', m, complement(l)));
    }

    PropositionCheck refutes{"proved-refutes-complement", {}};
    for (Mode m : kAllModes) {
        if (m == Mode::D) continue;
        for (const Literal& l : e.proved(m))
            if (!e.is_refuted(m, complement(l)))
                refutes.violations.push_back(tag('+', m, l) + " without " + tag('-', m, complement(l)));
    }

    PropositionCheck belief_intention{"belief-refutes-opposite-intention", {}};
    for (const Literal& l : e.proved(Mode::B))
        if (!e.is_refuted(Mode::I, complement(l)))
            belief_intention.violations.push_back(tag('+', Mode::B, l) + " without " +
                                                  tag('-', Mode::I, complement(l)));

    PropositionCheck social{"belief-or-obligation-refutes-opposite-social-intention", {}};
    for (Mode m : {Mode::B, Mode::O})
        for (const Literal& l : e.proved(m))
            if (!e.is_refuted(Mode::SI, complement(l)))
                social.violations.push_back(tag('+', m, l) + " without " + tag('-', Mode::SI, complement(l)));

    PropositionCheck goal_desire{"goal-implies-desire", {}};
    for (const Literal& l : e.proved(Mode::G))
        if (!e.is_proved(Mode::D, l))
            goal_desire.violations.push_back(tag('+', Mode::G, l) + " without " + tag('+', Mode::D, l));

    PropositionCheck refuted_desire{"refuted-desire-refutes-goal", {}};
    for (const Literal& l : e.refuted(Mode::D))
        if (!e.is_refuted(Mode::G, l))
            refuted_desire.violations.push_back(tag('-', Mode::D, l) + " without " + tag('-', Mode::G, l));

    r.checks = {coherence, consistency, refutes, belief_intention, social, goal_desire, refuted_desire};
    return r;
}

std::string render_propositions(const PropositionReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << (c.violations.empty() ? "ok   " : "FAIL ") << c.name << '\n';
        for (const auto& v : c.violations) os << "       " << v << '\n';
    }
    return os.str();
}

namespace {

class Generator {
public:
    explicit Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
        std::size_t n = std::max<std::size_t>(1, cfg.atom_count);
        for (std::size_t i = 0; i < n; ++i) atoms_.emplace_back("p" + std::to_string(i));
    }

    Theory& theory() { return t_; }

    bool coin(double p) { return std::bernoulli_distribution(std::clamp(p, 0.0, 1.0))(rng_); }
    std::size_t uniform(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

    Literal literal() { return Literal(atoms_[uniform(0, atoms_.size() - 1)], coin(0.5)); }

    Mode modal_mode() {
        static constexpr std::array<Mode, 5> modes{Mode::O, Mode::D, Mode::G, Mode::I, Mode::SI};
        return modes[uniform(0, modes.size() - 1)];
    }

    BodyElement body_element() {
        Literal l = literal();
        if (!coin(cfg_.modal_body_ratio)) return BodyElement(l);
        return BodyElement(modal_mode(), l, coin(0.3));
    }

    // Fact candidates are closed so that goals come with desires and refuted
    // desires with refuted goals.
    void fact_for(Atom a) {
        Literal l(a, coin(0.5));
        std::vector<BodyElement> group;
        if (!coin(cfg_.modal_fact_ratio)) {
            group.emplace_back(l);
        } else {
            Mode m = modal_mode();
            bool neg = coin(0.3);
            group.emplace_back(m, l, neg);
            if (m == Mode::G && !neg) group.emplace_back(Mode::D, l);
            if (m == Mode::D && neg) group.emplace_back(Mode::G, l, true);
        }
        for (const auto& f : group)
            if (clashes(f)) return;
        for (const auto& f : group) t_.add_fact(f);
    }

    void facts() {
        for (Atom a : atoms_)
            if (coin(cfg_.fact_density)) fact_for(a);
    }

    RuleKind kind() {
        std::discrete_distribution<int> d(cfg_.mode_weights.begin(), cfg_.mode_weights.end());
        return static_cast<RuleKind>(d(rng_));
    }

    // Adds one rule whose size contribution is at most `budget` (>= 2).
    void rule(std::size_t budget) {
        RuleKind k = kind();
        std::size_t room = budget - 1;  // one for the rule itself
        std::size_t chain_max = k == RuleKind::B ? 1 : std::max<std::size_t>(1, cfg_.max_chain);
        std::size_t chain_len = std::min(uniform(1, chain_max), room);
        std::size_t body_len = std::min(uniform(0, cfg_.max_body), room - chain_len);
        std::vector<BodyElement> body;
        for (std::size_t i = 0; i < body_len; ++i) body.push_back(body_element());
        std::vector<Literal> head;
        for (std::size_t i = 0; i < chain_len; ++i) head.push_back(literal());
        std::string label = "r" + std::to_string(t_.rules().size());
        std::size_t idx = t_.add_rule(Rule(label, k, std::move(body), normalize_chain(head)));

        // Superiority towards earlier rules with a complementary head literal.
        std::set<std::size_t> chosen;
        for (const Literal& l : t_.rules()[idx].head.items()) {
            auto it = heads_.find(complement(l));
            if (it == heads_.end()) continue;
            const auto& candidates = it->second;
            std::size_t from = candidates.size() > 6 ? candidates.size() - 6 : 0;
            for (std::size_t j = from; j < candidates.size(); ++j)
                if (!chosen.count(candidates[j]) && coin(cfg_.superiority_density)) chosen.insert(candidates[j]);
        }
        for (std::size_t j : chosen) t_.add_superiority(label, t_.rules()[j].label);
        for (const Literal& l : t_.rules()[idx].head.items()) heads_[l].push_back(idx);
    }

    const std::vector<Atom>& atoms() const { return atoms_; }

private:
    bool clashes(const BodyElement& f) const {
        const Literal l = f.literal, nl = complement(f.literal);
        std::vector<BodyElement> bad;
        if (f.plain()) {
            bad = {BodyElement(nl), BodyElement(Mode::I, nl), BodyElement(Mode::SI, nl)};
        } else if (f.negated) {
            bad = {BodyElement(f.mode, l)};
        } else {
            bad = {BodyElement(f.mode, l, true)};
            if (f.mode != Mode::D) bad.emplace_back(f.mode, nl);
            if (f.mode == Mode::I || f.mode == Mode::SI) bad.emplace_back(nl);
            if (f.mode == Mode::SI) bad.emplace_back(Mode::O, nl);
            if (f.mode == Mode::O) bad.emplace_back(Mode::SI, nl);
        }
        return std::any_of(bad.begin(), bad.end(), [&](const BodyElement& b) { return t_.has_fact(b); });
    }

    GenConfig cfg_;
    std::mt19937_64 rng_;
    std::vector<Atom> atoms_;
    Theory t_;
    std::map<Literal, std::vector<std::size_t>> heads_;
};

}  // namespace

Theory generate_theory(const GenConfig& cfg) {
    Generator g(cfg);
    g.facts();
    std::size_t budget = 1 + cfg.max_body + std::max<std::size_t>(1, cfg.max_chain);
    for (std::size_t i = 0; i < cfg.rule_count; ++i) g.rule(budget);
    return std::move(g.theory());
}

GenConfig random_config(std::uint64_t seed, std::size_t max_atoms, std::size_t max_rules) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    auto real = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    GenConfig c;
    c.seed = seed;
    c.atom_count = pick(2, std::max<std::size_t>(2, max_atoms));
    c.rule_count = pick(1, std::max<std::size_t>(1, max_rules));
    c.max_body = pick(0, 3);
    c.max_chain = pick(1, 5);
    c.mode_weights = {real(0.2, 1.0), real(0.0, 1.0), real(0.2, 1.0)};
    c.superiority_density = real(0.0, 0.8);
    c.fact_density = real(0.1, 0.8);
    c.modal_body_ratio = real(0.0, 0.5);
    c.modal_fact_ratio = real(0.0, 0.6);
    return c;
}

Theory generate_sized(std::size_t size, std::uint64_t seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.atom_count = std::max<std::size_t>(2, size / 6);
    cfg.fact_density = 0.3;
    Generator g(cfg);
    g.facts();
    std::size_t full = 1 + cfg.max_body + cfg.max_chain;
    std::size_t attempts = 0;
    while (theory_size(g.theory()) + 1 < size && attempts++ < 4 * size) {
        std::size_t remaining = size - theory_size(g.theory());
        g.rule(std::min(full, remaining));
    }
    return std::move(g.theory());
}

Theory chain_stress_theory(std::size_t size, std::uint64_t seed) {
    // Each block contributes 25 to the theory size.
    std::size_t blocks = std::max<std::size_t>(1, size / 25);
    std::mt19937_64 rng(seed);
    Theory t;
    char buf[32];
    auto name = [&](std::size_t b, const char* base) {
        std::snprintf(buf, sizeof buf, "k%07zu_%s", b, base);
        return Literal(Atom(buf));
    };
    for (std::size_t b = 0; b < blocks; ++b) {
        Literal go = name(b, "go");
        std::vector<Literal> chain;
        for (const char* x : {"x1", "x2", "x3", "x4", "x5", "x6"}) chain.push_back(name(b, x));
        std::shuffle(chain.begin() + 3, chain.end(), rng);
        std::string u = "u" + std::to_string(b), w = "w" + std::to_string(b), o = "o" + std::to_string(b);
        t.add_rule(Rule(u, RuleKind::U, {go}, normalize_chain(chain)));
        t.add_rule(Rule(w, RuleKind::U, {go}, normalize_chain({complement(chain[2])})));
        t.add_superiority(u, w);
        t.add_rule(Rule(o, RuleKind::O, {go},
                        normalize_chain({name(b, "v1"), name(b, "v2"), name(b, "v3")})));
        t.add_rule(Rule("c" + std::to_string(b), RuleKind::B, {go}, normalize_chain({name(b, "y")})));
        t.add_fact(complement(chain[0]));
        t.add_fact(BodyElement(Mode::O, complement(chain[1])));
        t.add_fact(complement(name(b, "v1")));
        // Block b is triggered by block b+1, so derivations travel against
        // the name order of the atoms.
        if (b + 1 < blocks)
            t.add_rule(Rule("n" + std::to_string(b), RuleKind::B, {name(b + 1, "go")}, normalize_chain({go})));
        else
            t.add_fact(go);
    }
    return t;
}

double fit_loglog(const std::vector<ScalingPoint>& points) {
    std::set<std::size_t> distinct;
    for (const auto& p : points) distinct.insert(p.size);
    if (distinct.size() < 2) throw std::invalid_argument("slope needs at least two distinct sizes");
    double n = static_cast<double>(points.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : points) {
        double x = std::log(static_cast<double>(p.size));
        double y = std::log(std::max(p.seconds, 1e-9));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ScalingReport scaling_benchmark(const std::vector<std::size_t>& sizes, std::uint64_t seed, EngineFn engine,
                                std::size_t repeats) {
    if (sizes.size() < 3) throw std::invalid_argument("scaling benchmark needs at least three sizes");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1]) throw std::invalid_argument("sizes must be strictly increasing");
    if (sizes.back() < 10 * sizes.front()) throw std::invalid_argument("sizes must span at least a factor of ten");
    if (!engine) engine = [](const Theory& t) { return run(t); };
    repeats = std::max<std::size_t>(1, repeats);

    ScalingReport report;
    for (std::size_t size : sizes) {
        Theory t = chain_stress_theory(size, seed);
        engine(t);  // warm-up
        std::vector<double> times;
        for (std::size_t i = 0; i < repeats; ++i) {
            auto start = std::chrono::steady_clock::now();
            Extension e = engine(t);
            auto stop = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double>(stop - start).count());
        }
        std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
        report.points.push_back({theory_size(t), times[times.size() / 2]});
    }
    report.slope = fit_loglog(report.points);
    return report;
}

std::string render_scaling(const ScalingReport& r) {
    std::ostringstream os;
    os << std::setw(10) << "size" << std::setw(14) << "seconds" << '\n';
    for (const auto& p : r.points) os << std::setw(10) << p.size << std::setw(14) << std::setprecision(6) << p.seconds << '\n';
    os << "slope " << std::fixed << std::setprecision(3) << r.slope << " (threshold " << r.threshold << ") "
       << (r.pass() ? "pass" : "FAIL") << '\n';
    return os.str();
}

}  // namespace mdl
