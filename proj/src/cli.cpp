#include "mdl/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mdl/linengine.hpp"
#include "mdl/refengine.hpp"
#include "mdl/textio.hpp"

namespace mdl::cli {

namespace {

std::optional<Theory> load(const std::string& file, std::ostream& err) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        err << file << ": cannot open file\n";
        return std::nullopt;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    ParseResult r = parse_theory(buf.str());
    for (const auto& w : r.warnings) err << format_diagnostic(w, "warning", file);
    for (const auto& e : r.errors) err << format_diagnostic(e, "error", file);
    if (!r.ok()) return std::nullopt;
    return std::move(r.theory);
}

void print_violations(const ConsistencyReport& r, std::ostream& os) {
    for (const auto& v : r.violations) {
        std::string_view kind;
        switch (v.kind) {
            case ViolationKind::ComplementaryFacts: kind = "complementary facts"; break;
            case ViolationKind::NegatedModalFacts: kind = "modal fact and its negation"; break;
            case ViolationKind::ComplementaryModal: kind = "complementary modal facts"; break;
            case ViolationKind::ConflictingModes: kind = "facts in conflicting modes"; break;
            case ViolationKind::SuperiorityCycle: kind = "superiority cycle"; break;
        }
        os << kind << ": " << v.detail << '\n';
    }
}

std::optional<std::vector<Mode>> parse_modes(const std::string& list) {
    std::vector<Mode> out;
    if (list.empty()) return std::vector<Mode>(kAllModes.begin(), kAllModes.end());
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto m = parse_mode(item);
        if (!m) return std::nullopt;
        if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
    }
    return out;
}

Extension linear(const Theory& t) { return run(t); }
Extension reference(const Theory& t) { return compute_extension_reference(t); }

}  // namespace

int cmd_compute(const std::string& file, const std::string& engine, const std::string& format,
                const std::string& modes, std::ostream& out, std::ostream& err) {
    auto selected = parse_modes(modes);
    if (!selected) {
        err << "unknown mode in '" << modes << "' (expected B, O, D, G, I, SI)\n";
        return kUsage;
    }
    if (engine != "linear" && engine != "reference") {
        err << "unknown engine '" << engine << "'\n";
        return kUsage;
    }
    if (format != "json" && format != "text") {
        err << "unknown format '" << format << "'\n";
        return kUsage;
    }
    auto t = load(file, err);
    if (!t) return kUsage;
    ConsistencyReport consistency = check_consistency(*t);
    if (!consistency.ok()) {
        err << file << ": warning: theory is inconsistent; results are best effort\n";
        print_violations(consistency, err);
    }
    Extension e = engine == "linear" ? linear(*t) : reference(*t);
    out << serialize_extension(e, format == "json" ? ExtensionFormat::Json : ExtensionFormat::Text, *selected);
    return kOk;
}

int cmd_check(const std::string& file, std::ostream& out, std::ostream& err) {
    auto t = load(file, err);
    if (!t) return kUsage;
    ConsistencyReport r = check_consistency(*t);
    if (r.ok()) {
        out << "consistent\n";
        return kOk;
    }
    print_violations(r, out);
    return kFailure;
}

int cmd_diff(const std::string& file, std::ostream& out, std::ostream& err, EngineFn first, EngineFn second) {
    if (!first) first = linear;
    if (!second) second = reference;
    auto t = load(file, err);
    if (!t) return kUsage;
    DiffReport d = diff_extensions(first(*t), second(*t));
    out << render_diff(d);
    return d.equivalent() ? kOk : kFailure;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::ostream& out, std::ostream& err) {
    try {
        ScalingReport r = scaling_benchmark(sizes, seed);
        out << render_scaling(r);
        return r.pass() ? kOk : kFailure;
    } catch (const std::invalid_argument& e) {
        err << "bench: " << e.what() << '\n';
        return kUsage;
    }
}

int cmd_gen(std::size_t size, std::uint64_t seed, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
    std::string text = render_theory(generate_sized(size, seed));
    if (out_path.empty() || out_path == "-") {
        out << text;
        return kOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        err << out_path << ": cannot write file\n";
        return kFailure;
    }
    f << text;
    return kOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Modal defeasible logic reasoner"};
    app.require_subcommand(1);

    std::string file, engine = "linear", format = "text", modes, out_path;
    std::vector<std::size_t> sizes{1000, 10000, 100000};
    std::uint64_t seed = 1;
    std::size_t size = 500;

    auto* compute = app.add_subcommand("compute", "Compute the extension of a theory");
    compute->add_option("file", file, "Theory file (.dft)")->required();
    compute->add_option("--engine", engine, "linear or reference")->capture_default_str();
    compute->add_option("--format", format, "json or text")->capture_default_str();
    compute->add_option("--modes", modes, "Comma-separated modes to print (default: all)");

    auto* check = app.add_subcommand("check", "Check a theory for consistency");
    check->add_option("file", file, "Theory file (.dft)")->required();

    auto* diff = app.add_subcommand("diff", "Compare the linear engine against the reference engine");
    diff->add_option("file", file, "Theory file (.dft)")->required();

    auto* bench = app.add_subcommand("bench", "Measure how the linear engine scales");
    bench->add_option("--sizes", sizes, "Theory sizes")->delimiter(',')->capture_default_str();
    bench->add_option("--seed", seed, "Random seed")->capture_default_str();

    auto* gen = app.add_subcommand("gen", "Generate a random consistent theory");
    gen->add_option("--size", size, "Target theory size")->capture_default_str();
    gen->add_option("--seed", seed, "Random seed")->capture_default_str();
    gen->add_option("--out", out_path, "Output file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (*compute) return cmd_compute(file, engine, format, modes, out, err);
    if (*check) return cmd_check(file, out, err);
    if (*diff) return cmd_diff(file, out, err);
    if (*bench) return cmd_bench(sizes, seed, out, err);
    if (*gen) return cmd_gen(size, seed, out_path, out, err);
    return kUsage;
}

}  // namespace mdl::cli
