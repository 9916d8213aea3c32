#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdl/core.hpp"
#include "mdl/extension.hpp"

namespace mdl {

struct ParseError {
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based
    std::string message;
    std::string snippet;  // the offending source line
};

struct ParseResult {
    std::optional<Theory> theory;  // set only when errors is empty
    std::vector<ParseError> errors;
    std::vector<ParseError> warnings;

    bool ok() const { return errors.empty(); }
};

ParseResult parse_theory(std::string_view source);

// "name:line:col: error: message" followed by the snippet and a caret.
std::string format_diagnostic(const ParseError& e, std::string_view kind, std::string_view file = "");

std::string render_theory(const Theory& t);

enum class ExtensionFormat { Json, Text };

std::string serialize_extension(const Extension& e, ExtensionFormat format,
                                std::span<const Mode> modes = kAllModes);

}  // namespace mdl
