#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slt {

/// 1-based position in a source file. line == 0 means "unknown".
struct SourceLoc {
  int line = 0;
  int column = 0;

  bool known() const { return line > 0; }
  bool operator==(const SourceLoc&) const = default;
};

enum class Severity { Error, Warning };

/// Fixed diagnostic vocabulary. PARSE covers lexical and syntactic faults;
/// the remaining codes are semantic.
enum class DiagCode {
  Parse,
  DupDecl,
  SelfMsg,
  DupLabel,
  UnguardedRec,
  FreeVar,
  UnboundCall,
  CyclicCalls,
  SiteStale,
  Io,
};

std::string_view code_name(DiagCode code);
std::string_view severity_name(Severity severity);

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCode code = DiagCode::Parse;
  std::string message;
  std::optional<SourceLoc> loc;
  std::string path;  // branch-label path from the root, "" when not applicable

  bool operator==(const Diagnostic&) const = default;
};

Diagnostic error_at(DiagCode code, std::string message,
                    std::optional<SourceLoc> loc = std::nullopt,
                    std::string path = "");

/// Renders "<line>:<col>: <severity> <CODE>: <message>"; location and path
/// segments are dropped when absent.
std::string format_diagnostic(const Diagnostic& d);

/// Thrown by operations whose contract names an error condition that cannot
/// be reported as a return value (e.g. an unbound call during trace
/// enumeration, or a stale elimination site).
class Error : public std::runtime_error {
 public:
  explicit Error(Diagnostic d);

  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

}  // namespace slt
