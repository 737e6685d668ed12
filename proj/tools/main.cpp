#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rstsum/version.hpp"
#include "summarize.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Summarize a multimedia document under a time budget using its rhetorical structure."};
  app.set_version_flag("--version", std::string(rstsum::version()));

  rstsum::cli::RunOptions options;
  std::string doc, profile, out, markdown, dot, config;
  app.add_option("--doc", doc, "Document specification (JSON)")->required();
  app.add_option("--time", options.time_s, "Summary budget in seconds")->required();
  app.add_option("--profile", profile, "User profile (JSON)");
  app.add_option("--out", out, "Manifest path (default: <doc stem>.summary.json)");
  app.add_option("--markdown", markdown, "Also write a Markdown rendering");
  app.add_option("--dot", dot, "Also write the relations graph as DOT");
  app.add_option("--config", config, "Weight configuration (JSON)");
  app.add_flag("--pre-weighted", options.pre_weighted, "Use preset_weight from the document");
  app.add_flag("--interactive", options.interactive, "Ask on ties no preference can break");
  app.add_flag("--strict-interactive", options.strict_interactive,
               "Like --interactive, but fail (exit 3) when the answer cannot be obtained");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rstsum::cli::kExitInputError;
  }

  options.doc_path = doc;
  if (!profile.empty()) options.profile_path = profile;
  if (!out.empty()) options.out_path = out;
  if (!markdown.empty()) options.markdown_path = markdown;
  if (!dot.empty()) options.dot_path = dot;
  if (!config.empty()) options.config_path = config;

  return rstsum::cli::run_summarize(options, std::cin, std::cout, std::cerr);
}
