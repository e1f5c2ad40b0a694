#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "versorlab/multivector.hpp"

namespace versorlab::cli {

enum class Format { kJson, kCsv, kMarkdown };

struct Settings {
  Format format = Format::kJson;
  Precision precision{};
  std::size_t max_closure = 0;  // 0 keeps the library defaults
  std::uint64_t seed = 42;
};

// Runs one invocation (args excludes the program name). Reports go to out;
// failures print {"error": <code>, "message": ...} to err. Returns the exit
// status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// VERSORLAB_SEED, or 42 when unset or malformed.
std::uint64_t seed_from_environment();

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The invariant suite behind `versorlab verify`.
std::vector<CheckResult> run_invariant_suite(const Settings& settings);

}  // namespace versorlab::cli
