#pragma once

#include "output.hpp"

#include "flagcoh/workspace.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace flagcoh::cli {

enum ExitCode { kOk = 0, kInternal = 1, kInvalidSpec = 2, kBudget = 3, kMismatch = 4 };

/// Everything a run depends on; echoed into every output header.
struct JobSpec {
  std::string command;
  std::string type;  // family letter or full label
  int rank = 0;
  std::string parabolic;  // maximal index, "borel", "whole"
  std::string levi;       // comma-separated Levi simple roots
  int s = 3;
  std::string mode = "classical";
  std::string format = "markdown";
  std::optional<std::string> cache_dir;
  int threads = 1;
  std::size_t weyl_cap = 0;

  // Command-specific arguments.
  std::vector<std::string> tuple;
  std::vector<std::string> utuple;
  std::string q, qhat;
  std::string u, v;
  std::string check = "t2";
  std::string input, output;
  std::string table;
  bool prune = false;
  bool relaxed = false;
  int max_examples = 10;

  std::vector<std::pair<std::string, std::string>> echo() const;
};

struct Result {
  int code = kOk;
  std::string text;
};

Result run(const JobSpec& spec);

}  // namespace flagcoh::cli
