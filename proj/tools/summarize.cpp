#include "summarize.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <unistd.h>

#include "rstsum/document.hpp"
#include "rstsum/graph.hpp"
#include "rstsum/presentation.hpp"
#include "rstsum/selection.hpp"
#include "rstsum/version.hpp"
#include "rstsum/weighting.hpp"

namespace rstsum::cli {

namespace fs = std::filesystem;

namespace {

class ReadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReadError("cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw ReadError("read failed");
  return buffer.str();
}

void report(std::ostream& err, const fs::path& file, const InputError& e) {
  for (const auto& d : e.diagnostics()) {
    fmt::print(err, "{}: {} error: {}: {}\n", file.string(), to_string(d.kind), d.subject, d.reason);
  }
}

}  // namespace

fs::path default_out_path(const fs::path& doc_path) {
  return fs::path(doc_path.stem().string() + ".summary.json");
}

std::vector<std::string> prompt_tie(std::span<const UnitSummary> units, std::istream& in, std::ostream& out) {
  constexpr int kAttempts = 3;
  for (int attempt = 1; attempt <= kAttempts; ++attempt) {
    fmt::print(out, "Units tied at equal weight:\n");
    for (std::size_t i = 0; i < units.size(); ++i) {
      const UnitSummary& u = units[i];
      fmt::print(out, "  {}) {} [{}, {} s, w={:.3f}]\n", i + 1, u.id,
                 u.media ? to_string(*u.media) : std::string_view("composite"), u.duration_s.value_or(0.0),
                 u.raw_weight);
    }
    fmt::print(out, "Order them, most preferred first (e.g. \"2 1\"): ");
    out.flush();

    std::string line;
    if (!std::getline(in, line)) throw InteractionError("no response (end of input)");

    std::istringstream tokens(line);
    std::vector<std::size_t> picks;
    std::string token;
    bool valid = true;
    while (tokens >> token) {
      std::size_t pos = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(token, &pos);
      } catch (const std::exception&) {
        valid = false;
        break;
      }
      if (pos != token.size() || value < 1 || value > units.size()) {
        valid = false;
        break;
      }
      picks.push_back(value - 1);
    }
    std::vector<std::size_t> sorted = picks;
    std::sort(sorted.begin(), sorted.end());
    valid = valid && picks.size() == units.size() &&
            std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (valid) {
      std::vector<std::string> order;
      for (std::size_t p : picks) order.push_back(units[p].id);
      return order;
    }
    fmt::print(out, "\nExpected each number from 1 to {} exactly once ({} of {} attempts used).\n", units.size(),
               attempt, kAttempts);
  }
  throw InteractionError("no valid ordering after three attempts");
}

void write_files_atomically(std::span<const std::pair<fs::path, std::string>> files) {
  std::vector<fs::path> temps;
  auto cleanup = [&] {
    std::error_code ignored;
    for (const auto& t : temps) fs::remove(t, ignored);
  };
  try {
    for (const auto& [target, contents] : files) {
      fs::path temp = target;
      temp += fmt::format(".tmp.{}", static_cast<long>(::getpid()));
      temps.push_back(temp);
      std::ofstream out(temp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot create " + temp.string());
      out << contents;
      out.flush();
      if (!out) throw std::runtime_error("cannot write " + temp.string());
    }
    for (std::size_t i = 0; i < files.size(); ++i) fs::rename(temps[i], files[i].first);
  } catch (...) {
    cleanup();
    throw;
  }
}

int run_summarize(const RunOptions& options, std::istream& in, std::ostream& out, std::ostream& err) {
  if (options.time_s <= 0) {
    fmt::print(err, "{}: input error: --time: summary budget must be a positive number of seconds\n",
               options.doc_path.string());
    return kExitInputError;
  }

  // Input files.
  DocumentSpec doc;
  UserProfile profile = default_profile();
  fs::path current = options.doc_path;
  try {
    doc = parse_document_spec(read_file(options.doc_path));
    if (options.profile_path) {
      current = *options.profile_path;
      profile = parse_user_profile(read_file(current));
    }
  } catch (const ReadError& e) {
    fmt::print(err, "{}: input error: {}: {}\n", current.string(), current.filename().string(), e.what());
    return kExitInputError;
  } catch (const InputError& e) {
    report(err, current, e);
    return kExitInputError;
  }
  if (options.interactive || options.strict_interactive) profile.interactive = true;

  WeightConfig config;
  if (options.config_path) {
    try {
      config = parse_weight_config(read_file(*options.config_path));
    } catch (const ReadError& e) {
      fmt::print(err, "{}: config error: {}: {}\n", options.config_path->string(),
                 options.config_path->filename().string(), e.what());
      return kExitConfigError;
    } catch (const ConfigError& e) {
      fmt::print(err, "{}: config error: {}\n", options.config_path->string(), e.what());
      return kExitConfigError;
    }
  }

  std::vector<std::pair<fs::path, std::string>> outputs;
  try {
    const SummaryBudget budget(static_cast<double>(options.time_s));
    const RhetGraph graph = build_graph(doc, config);
    const LevelMap levels = compute_levels(graph);
    WeightTable weights = options.pre_weighted ? apply_preset_weights(doc, levels)
                                               : compute_weights(graph, levels, config);
    Ranking ranking = rank_entities(weights);

    TieBreakOptions tie_options;
    tie_options.strict = options.strict_interactive;
    if (options.interactive || options.strict_interactive) {
      tie_options.prompt = [&](std::span<const UnitSummary> units) { return prompt_tie(units, in, out); };
    }
    const auto ties = resolve_equal_weights(ranking.tie_groups, graph, profile, tie_options);
    apply_tie_decisions(ranking, ties);
    weights.assign_ranks(ranking.order);

    const SelectionResult selection = trim_to_budget(ranking.order, graph, budget);
    const SummaryManifest manifest =
        emit_manifest(selection, weights, ties, doc, budget, Toolchain{std::string(version()), config, options.pre_weighted});

    outputs.emplace_back(options.out_path.value_or(default_out_path(options.doc_path)), serialize_manifest(manifest));
    if (options.markdown_path) outputs.emplace_back(*options.markdown_path, render_markdown(manifest, doc));
    if (options.dot_path) outputs.emplace_back(*options.dot_path, export_dot(graph, weights, levels));

    write_files_atomically(outputs);
    fmt::print(out, "{}: selected {} of {} units, {} s of {} s -> {}\n", options.doc_path.string(),
               manifest.entries.size(), doc.units.size(), manifest.total_duration_s, manifest.budget_s,
               outputs.front().first.string());
    return kExitOk;
  } catch (const InputError& e) {
    report(err, options.doc_path, e);
    return kExitInputError;
  } catch (const ConfigError& e) {
    fmt::print(err, "{}: config error: {}\n",
               options.config_path ? options.config_path->string() : options.doc_path.string(), e.what());
    return kExitConfigError;
  } catch (const InteractionError& e) {
    fmt::print(err, "{}: interaction error: tie-break: {}\n", options.doc_path.string(), e.what());
    return kExitInteractionFailure;
  } catch (const std::exception& e) {
    const fs::path target = outputs.empty() ? options.doc_path : outputs.front().first;
    fmt::print(err, "{}: error: {}\n", target.string(), e.what());
    return kExitInputError;
  }
}

}  // namespace rstsum::cli
