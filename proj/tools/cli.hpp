#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coxlab::cli {

enum ExitCode : int { kOk = 0, kDisagreement = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  std::string family;
  int n = 0;
  std::optional<int> max_length;
  int max_height = 8;
  std::string format = "text";
  std::size_t budget = 0;
  std::string variant = "standard";
  std::string out;
  std::string window;
  std::vector<std::string> word;
  bool check_dis = false;
  bool check_prop43 = false;
  std::size_t word_cap = 10;
};

// Runs one invocation; text goes to `out`, diagnostics to `err`. JSON and
// CSV go to the --out file when given, otherwise to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxlab::cli
