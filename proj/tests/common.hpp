#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mdl/core.hpp"
#include "mdl/extension.hpp"
#include "mdl/textio.hpp"

namespace mdl::testing {

inline std::string fixture_path(const std::string& name) { return std::string(MDL_FIXTURE_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Theory parse_ok(std::string_view src) {
    ParseResult r = parse_theory(src);
    if (!r.ok()) {
        std::string msg;
        for (const auto& e : r.errors) msg += format_diagnostic(e, "error");
        ADD_FAILURE() << msg;
        return Theory{};
    }
    return *r.theory;
}

inline Theory fixture(const std::string& name) { return parse_ok(read_file(fixture_path(name + ".dft"))); }

inline Literal lit(std::string_view s) {
    if (!s.empty() && s[0] == '~') return Literal(s.substr(1), false);
    return Literal(s);
}

inline std::set<Literal> lits(std::initializer_list<std::string_view> names) {
    std::set<Literal> out;
    for (auto n : names) out.insert(lit(n));
    return out;
}

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{
        "example3",  "alice_jsick", "alice_confined", "chocolate", "rome",         "conv_obligation",
        "sixth_row", "appendixB",   "peopleyes",      "cycle",     "mutual_cycle", "empty"};
    return names;
}

}  // namespace mdl::testing
