#include <algorithm>
#include <fstream>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mdl/analyzer.hpp"
#include "mdl/linengine.hpp"
#include "mdl/refengine.hpp"
#include "mdl/textio.hpp"

namespace py = pybind11;
using namespace mdl;

namespace {

Mode mode_arg(const std::string& s) {
    auto m = parse_mode(s);
    if (!m) throw py::value_error("unknown mode '" + s + "' (expected B, O, D, G, I, SI)");
    return *m;
}

std::vector<std::string> names(const std::set<Literal>& s) {
    std::vector<Literal> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(), name_less);
    std::vector<std::string> out;
    for (Literal l : v) out.push_back(to_string(l));
    return out;
}

Theory parse_or_raise(const std::string& source) {
    ParseResult r = parse_theory(source);
    if (!r.ok()) {
        std::string msg;
        for (const auto& e : r.errors) msg += format_diagnostic(e, "error");
        throw py::value_error(msg);
    }
    return *r.theory;
}

Extension compute(const Theory& t, const std::string& engine) {
    if (engine == "linear") return run(t);
    if (engine == "reference") return compute_extension_reference(t);
    throw py::value_error("unknown engine '" + engine + "'");
}

}  // namespace

PYBIND11_MODULE(pymdl, m) {
    m.doc() = "Modal defeasible logic reasoner";

    py::class_<Theory>(m, "Theory")
        .def_property_readonly("size", [](const Theory& t) { return theory_size(t); })
        .def_property_readonly("rule_labels",
                               [](const Theory& t) {
                                   std::vector<std::string> out;
                                   for (const Rule& r : t.rules()) out.push_back(r.label);
                                   return out;
                               })
        .def("render", [](const Theory& t) { return render_theory(t); })
        .def("check_consistency",
             [](const Theory& t) {
                 std::vector<std::string> out;
                 for (const auto& v : check_consistency(t).violations) out.push_back(v.detail);
                 return out;
             },
             "Violation descriptions; empty when the theory is consistent.")
        .def("__repr__", [](const Theory& t) {
            return "<Theory rules=" + std::to_string(t.rules().size()) + " size=" + std::to_string(theory_size(t)) +
                   ">";
        });

    py::class_<Extension>(m, "Extension")
        .def("proved", [](const Extension& e, const std::string& mode) { return names(e.proved(mode_arg(mode))); })
        .def("refuted", [](const Extension& e, const std::string& mode) { return names(e.refuted(mode_arg(mode))); })
        .def("undecided",
             [](const Extension& e, const std::string& mode) {
                 std::vector<std::string> out;
                 for (Literal l : e.undecided(mode_arg(mode))) out.push_back(to_string(l));
                 return out;
             })
        .def("to_json", [](const Extension& e) { return serialize_extension(e, ExtensionFormat::Json); })
        .def("__eq__", [](const Extension& a, const Extension& b) { return a == b; });

    m.def("parse", &parse_or_raise, py::arg("source"), "Parse theory text; raises ValueError with diagnostics.");
    m.def("load", [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw py::value_error(path + ": cannot open file");
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_or_raise(buf.str());
    }, py::arg("path"));
    m.def("compute", &compute, py::arg("theory"), py::arg("engine") = "linear");
    m.def("diff", [](const Theory& t) {
        DiffReport d = diff_extensions(run(t), compute_extension_reference(t));
        return render_diff(d);
    }, py::arg("theory"), "Linear versus reference engine, rendered.");
    m.def("verify_propositions", [](const Theory& t) {
        std::map<std::string, std::vector<std::string>> out;
        for (auto& c : verify_propositions(t, run(t)).checks) out[c.name] = c.violations;
        return out;
    }, py::arg("theory"));
    m.def("generate", &generate_sized, py::arg("size"), py::arg("seed") = 1);
    m.def("chain_stress", &chain_stress_theory, py::arg("size"), py::arg("seed") = 1);
    m.def("bench", [](const std::vector<std::size_t>& sizes, std::uint64_t seed, std::size_t repeats) {
        ScalingReport r;
        {
            py::gil_scoped_release release;
            r = scaling_benchmark(sizes, seed, {}, repeats);
        }
        std::vector<std::pair<std::size_t, double>> points;
        for (const auto& p : r.points) points.emplace_back(p.size, p.seconds);
        return py::make_tuple(points, r.slope);
    }, py::arg("sizes"), py::arg("seed") = 1, py::arg("repeats") = 5);
}
