#pragma once

#include <array>
#include <string>
#include <vector>

// Attack/counterattack scenarios for SI q. Rule r supports q, s attacks
// with ~q and t counters s with q. Each role is either an outcome rule (U),
// an obligation rule (O), or a belief rule made Conv-applicable for SI or O
// by a modal fact on its body (BSI, BO). Every row should derive +SI q.
namespace mdl::testing {

struct TableRow {
    const char* r;
    const char* s;
    const char* t;
    bool superiority;  // false: t wins through Conflict(O, SI)
};

inline constexpr std::array<TableRow, 22> kTableRows{{
    {"U", "U", "U", true},      {"U", "U", "O", false},     {"U", "U", "BSI", true},
    {"U", "U", "BO", false},    {"U", "O", "O", true},      {"U", "O", "BO", true},
    {"U", "BSI", "U", true},    {"U", "BSI", "O", false},   {"U", "BSI", "BSI", true},
    {"U", "BSI", "BO", false},  {"U", "BO", "BO", true},    {"BSI", "U", "U", true},
    {"BSI", "U", "O", false},   {"BSI", "U", "BSI", true},  {"BSI", "U", "BO", false},
    {"BSI", "O", "O", true},    {"BSI", "O", "BO", true},   {"BSI", "BSI", "U", true},
    {"BSI", "BSI", "O", false}, {"BSI", "BSI", "BSI", true}, {"BSI", "BSI", "BO", false},
    {"BSI", "BO", "BO", true},
}};

inline std::string table_rule(const std::string& label, const std::string& kind, const std::string& atom,
                              const std::string& head) {
    std::string out;
    if (kind == "U") {
        out += "fact " + atom + ".\n";
        out += "rule " + label + ": " + atom + " =U> " + head + ".\n";
    } else if (kind == "O") {
        out += "fact " + atom + ".\n";
        out += "rule " + label + ": " + atom + " =O> " + head + ".\n";
    } else {
        out += "fact " + kind.substr(1) + " " + atom + ".\n";
        out += "rule " + label + ": " + atom + " => " + head + ".\n";
    }
    return out;
}

inline std::string table_theory(const TableRow& row) {
    std::string src = table_rule("r", row.r, "a", "q") + table_rule("s", row.s, "b", "~q") +
                      table_rule("t", row.t, "c", "q");
    if (row.superiority) src += "t > s.\n";
    return src;
}

inline std::string table_row_name(const TableRow& row) {
    return std::string(row.r) + "/" + row.s + "/" + row.t + (row.superiority ? " (t > s)" : " (Conflict)");
}

}  // namespace mdl::testing
