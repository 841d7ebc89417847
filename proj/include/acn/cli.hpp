#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "acn/growth.hpp"
#include "acn/percolation.hpp"

namespace acn::cli {

enum class Format { Text, Csv, Structured };

// Exit codes: 0 success, 1 input error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUsage = 2;

// Runs one `acn` subcommand. `args` excludes the program name. Reports go to
// `out`; diagnostics are single lines prefixed "error:" on `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Helpers exposed for tests.
TransitionCriterion parse_criterion(std::string_view text);
std::vector<double> parse_p_list(std::string_view text);
std::pair<ElementId, TickInterval> parse_stimulus_flag(std::string_view text);
std::string input_digest(std::string_view bytes);
std::string csv_field(std::string_view field);

}  // namespace acn::cli
