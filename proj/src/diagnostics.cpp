#include "slt/diagnostics.hpp"

namespace slt {

std::string_view code_name(DiagCode code) {
  switch (code) {
    case DiagCode::Parse: return "PARSE";
    case DiagCode::DupDecl: return "DUP_DECL";
    case DiagCode::SelfMsg: return "SELF_MSG";
    case DiagCode::DupLabel: return "DUP_LABEL";
    case DiagCode::UnguardedRec: return "UNGUARDED_REC";
    case DiagCode::FreeVar: return "FREE_VAR";
    case DiagCode::UnboundCall: return "UNBOUND_CALL";
    case DiagCode::CyclicCalls: return "CYCLIC_CALLS";
    case DiagCode::SiteStale: return "SITE_STALE";
    case DiagCode::Io: return "IO";
  }
  return "UNKNOWN";
}

std::string_view severity_name(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

Diagnostic error_at(DiagCode code, std::string message, std::optional<SourceLoc> loc,
                    std::string path) {
  return Diagnostic{Severity::Error, code, std::move(message), loc, std::move(path)};
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out;
  if (d.loc && d.loc->known()) {
    out += std::to_string(d.loc->line);
    out += ':';
    out += std::to_string(d.loc->column);
    out += ": ";
  }
  out += severity_name(d.severity);
  out += ' ';
  out += code_name(d.code);
  out += ": ";
  out += d.message;
  if (!d.path.empty()) {
    out += " (at ";
    out += d.path;
    out += ')';
  }
  return out;
}

Error::Error(Diagnostic d) : std::runtime_error(format_diagnostic(d)), diag_(std::move(d)) {}

}  // namespace slt
