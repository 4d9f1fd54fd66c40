#pragma once

#include <string>

#include "mbspec/integrate.hpp"

namespace mbspec {

/// Resolved contents of a `key = value` config file (grammar: one pair per
/// line, `#` starts a comment, unknown keys are rejected).
struct FileConfig {
  SimConfig sim;
  InitialSpec init;
  RunOptions opts;
  std::string out_dir = "out";
};

FileConfig parse_config_text(const std::string& text);
FileConfig load_config_file(const std::string& path);

/// Documented key list for --help and the README.
std::string config_file_grammar();

}  // namespace mbspec
