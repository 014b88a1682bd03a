#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace slt {

// Exit codes: 0 success, 1 diagnostics reported (or a failed equality /
// soundness gate), 2 usage error or unreadable/unwritable file.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitUsage = 2;

struct CliStreams {
  std::ostream& out;  // results
  std::ostream& err;  // diagnostics, one per line
  bool color = false;
};

// SLT_COLOR policy: "never" disables, "auto" (or unset, or anything else)
// follows whether the diagnostic stream is a terminal.
bool resolve_color(const char* env_value, bool stream_is_tty);

// Parses and validates; prints diagnostics as
// "<file>:<line>:<col>: <severity> <CODE>: <message>".
int cmd_check(const std::string& file, CliStreams io);

struct LightenOptions {
  std::string prefix = "L";
  bool dedup = false;
  std::optional<std::string> at;  // path of one site on the main type
};

// Without `at`, removes every redundant interaction; with `at`, removes just
// the addressed one. Always re-checks that the traces of the result equal the
// traces of the input before printing, and fails with exit 1 otherwise.
int cmd_lighten(const std::string& file, const LightenOptions& opts, CliStreams io);

// Prints the trace listing, one rendered trace per line, sorted.
int cmd_traces(const std::string& file, CliStreams io);

// Exit 0 iff both files have the same trace language; otherwise prints one
// separating trace as "only-in: <file>: <trace>" and exits 1.
int cmd_verify(const std::string& file1, const std::string& file2, CliStreams io);

// Renders protocol blocks; concatenated to stdout, or one "<name>.scr" per
// block under out_dir when given.
int cmd_emit_scribble(const std::string& file, const std::optional<std::string>& out_dir,
                      CliStreams io);

}  // namespace slt
