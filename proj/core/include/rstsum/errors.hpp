#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rstsum {

enum class DiagnosticKind {
  syntax,
  schema,
  reference,
  model,
  cycle,
  reachability,
};

std::string_view to_string(DiagnosticKind kind);

/// A single problem found in an input document. `subject` is the unit id,
/// relation id (`relation#<index>`) or JSON path the problem refers to.
struct Diagnostic {
  DiagnosticKind kind;
  std::string subject;
  std::string reason;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Thrown when a document, profile, or budget is malformed or fails its
/// structural invariants. Carries every diagnostic found, never fewer than one.
class InputError : public std::runtime_error {
 public:
  explicit InputError(std::vector<Diagnostic> diagnostics);
  InputError(DiagnosticKind kind, std::string subject, std::string reason);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Weight configuration is invalid or cannot resolve a relation type.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string subject, const std::string& reason);

  const std::string& subject() const noexcept { return subject_; }

 private:
  std::string subject_;
};

/// The interactive tie-break callback failed or returned an invalid order.
class InteractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pipeline stages were handed inputs that do not belong together.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rstsum
