#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rstsum/tiebreak.hpp"

namespace rstsum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitConfigError = 2,
  kExitInteractionFailure = 3,
};

struct RunOptions {
  std::filesystem::path doc_path;
  std::optional<std::filesystem::path> profile_path;
  long long time_s = 0;
  std::optional<std::filesystem::path> out_path;
  std::optional<std::filesystem::path> markdown_path;
  std::optional<std::filesystem::path> dot_path;
  std::optional<std::filesystem::path> config_path;
  bool pre_weighted = false;
  bool interactive = false;
  bool strict_interactive = false;
};

/// `<doc stem>.summary.json` in the working directory.
std::filesystem::path default_out_path(const std::filesystem::path& doc_path);

/// parse -> validate -> graph -> levels -> weights -> rank -> tie-break ->
/// trim -> manifest -> renders. Prompts go to `out`, diagnostics to `err`.
/// Either every requested file is written or none is.
int run_summarize(const RunOptions& options, std::istream& in, std::ostream& out, std::ostream& err);

/// Shows the tied units and reads a 1-based ordering such as "2 1". Asks at
/// most three times; throws InteractionError after the third bad answer or
/// at end of input.
std::vector<std::string> prompt_tie(std::span<const UnitSummary> units, std::istream& in, std::ostream& out);

/// Writes each file to a temporary sibling, then renames them all into place.
/// On failure no temporary is left behind and no target is touched.
void write_files_atomically(std::span<const std::pair<std::filesystem::path, std::string>> files);

}  // namespace rstsum::cli
