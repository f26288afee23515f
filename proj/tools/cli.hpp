#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "perronkit/solver.hpp"

namespace perronkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitStagnated = 2;
inline constexpr int kExitMaxIterations = 3;

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int exit_code(Status status) noexcept;

/// Default iteration cap, honouring PERRONKIT_MAX_ITER.
std::size_t default_max_iterations();

/// {command, input, config, result, timing_ms, version}.
nlohmann::json run_record(const std::string& command, const std::string& input,
                          nlohmann::json config, nlohmann::json result, double timing_ms);

nlohmann::json to_json(const PerronResult& r, bool full);

}  // namespace perronkit::cli
