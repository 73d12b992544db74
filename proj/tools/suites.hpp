#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fanolie/scalars.hpp"

namespace fanolie::cli {

struct Check {
  std::string id;
  std::string criterion;  // "AC1".."AC14"
  std::string anchor;     // the claim being certified
  std::string observed;
  std::string expected;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  double seconds = 0;
  std::string error;  // set when the suite threw
  bool pass() const;
};

struct VerifyOptions {
  FieldDescriptor field;
  std::optional<std::filesystem::path> cache_dir;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);
// Runs suites concurrently; results come back in the order given.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const VerifyOptions& opts);

}  // namespace fanolie::cli
