#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mdl/analyzer.hpp"

namespace mdl::cli {

enum ExitStatus : int { kOk = 0, kFailure = 1, kUsage = 2 };

int cmd_compute(const std::string& file, const std::string& engine, const std::string& format,
                const std::string& modes, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& file, std::ostream& out, std::ostream& err);
// Engines default to the linear and the reference engine.
int cmd_diff(const std::string& file, std::ostream& out, std::ostream& err, EngineFn first = {},
             EngineFn second = {});
int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::ostream& out, std::ostream& err);
int cmd_gen(std::size_t size, std::uint64_t seed, const std::string& out_path, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mdl::cli
