#include "slt/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "slt/ast.hpp"
#include "slt/diagnostics.hpp"
#include "slt/lightener.hpp"
#include "slt/redundancy.hpp"
#include "slt/scribble.hpp"
#include "slt/semantics.hpp"
#include "slt/syntax.hpp"

namespace slt {

namespace {

void print_diagnostic(CliStreams& io, const std::string& file, const Diagnostic& d) {
  io.err << file << ':';
  if (d.loc && d.loc->known()) {
    io.err << d.loc->line << ':' << d.loc->column << ':';
  }
  io.err << ' ';
  if (io.color) {
    io.err << (d.severity == Severity::Error ? "\x1b[31m" : "\x1b[33m") << severity_name(d.severity)
           << "\x1b[0m";
  } else {
    io.err << severity_name(d.severity);
  }
  io.err << ' ' << code_name(d.code) << ": " << d.message;
  if (!d.path.empty()) io.err << " (at " << d.path << ')';
  io.err << '\n';
}

void print_diagnostics(CliStreams& io, const std::string& file,
                       const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds) print_diagnostic(io, file, d);
}

struct Loaded {
  int status = kExitOk;
  TypePtr main;
  Declarations decls;
};

Loaded load(const std::string& file, CliStreams& io) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    print_diagnostic(io, file, error_at(DiagCode::Io, "cannot read file"));
    return {kExitUsage, nullptr, {}};
  }
  std::ostringstream text;
  text << in.rdbuf();
  ParseResult parsed = parse(text.str());
  if (!parsed.ok()) {
    print_diagnostics(io, file, parsed.diagnostics);
    return {kExitDiagnostics, nullptr, {}};
  }
  std::vector<Diagnostic> semantic = well_formed(parsed.file->main, parsed.file->decls);
  if (!semantic.empty()) {
    print_diagnostics(io, file, semantic);
    return {kExitDiagnostics, nullptr, {}};
  }
  return {kExitOk, parsed.file->main, std::move(parsed.file->decls)};
}

std::string protocol_name_for(const std::string& file) {
  std::string stem = std::filesystem::path(file).stem().string();
  std::string name;
  for (char c : stem) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
              c == '_';
    name += ok ? c : '_';
  }
  if (name.empty()) name = "protocol";
  if (name[0] >= '0' && name[0] <= '9') name.insert(name.begin(), '_');
  return name;
}

}  // namespace

bool resolve_color(const char* env_value, bool stream_is_tty) {
  if (env_value != nullptr && std::string_view(env_value) == "never") return false;
  return stream_is_tty;
}

int cmd_check(const std::string& file, CliStreams io) {
  return load(file, io).status;
}

int cmd_lighten(const std::string& file, const LightenOptions& opts, CliStreams io) {
  Loaded in = load(file, io);
  if (in.status != kExitOk) return in.status;

  LightenResult result;
  if (opts.at) {
    std::optional<ContextPath> path = ContextPath::parse(*opts.at);
    if (!path) {
      io.err << file << ": malformed site path '" << *opts.at << "'\n";
      return kExitUsage;
    }
    const RedundantSite* site = nullptr;
    std::vector<RedundantSite> sites = find_redundant(in.main);
    for (const auto& s : sites) {
      if (s.path == *path) {
        site = &s;
        break;
      }
    }
    if (site == nullptr) {
      print_diagnostic(io, file,
                       error_at(DiagCode::SiteStale,
                                "no redundant interaction at this path", std::nullopt,
                                path->render()));
      return kExitDiagnostics;
    }
    FreshNamer namer(opts.prefix, in.decls);
    LighteningResult step = eliminate(in.main, *site, namer);
    result.main = std::move(step.result);
    result.decls = in.decls;
    for (const auto& [name, body] : step.new_decls) result.fresh_names.push_back(name);
    result.decls.merge(step.new_decls);
  } else {
    result = lighten_fully(in.main, in.decls, opts.prefix);
  }
  if (opts.dedup) result = dedup_declarations(result);

  LangEqResult gate = lang_eq(in.main, in.decls, result.main, result.decls);
  if (!gate.equal) {
    io.err << file << ": soundness gate failed: trace mismatch, only-in "
           << (gate.witness_side == 1 ? "input" : "output") << ": " << render(*gate.witness)
           << '\n';
    return kExitDiagnostics;
  }
  io.out << print_source(result.main, result.decls);
  return kExitOk;
}

int cmd_traces(const std::string& file, CliStreams io) {
  Loaded in = load(file, io);
  if (in.status != kExitOk) return in.status;
  for (const auto& line : render_lines(traces(in.main, in.decls))) io.out << line << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& file1, const std::string& file2, CliStreams io) {
  Loaded a = load(file1, io);
  if (a.status != kExitOk) return a.status;
  Loaded b = load(file2, io);
  if (b.status != kExitOk) return b.status;
  LangEqResult eq = lang_eq(a.main, a.decls, b.main, b.decls);
  if (eq.equal) return kExitOk;
  io.out << "only-in: " << (eq.witness_side == 1 ? file1 : file2) << ": " << render(*eq.witness)
         << '\n';
  return kExitDiagnostics;
}

int cmd_emit_scribble(const std::string& file, const std::optional<std::string>& out_dir,
                      CliStreams io) {
  Loaded in = load(file, io);
  if (in.status != kExitOk) return in.status;
  std::vector<ProtocolDoc> docs = emit_scribble(protocol_name_for(file), in.main, in.decls);
  if (!out_dir) {
    io.out << render_concatenated(docs);
    return kExitOk;
  }
  std::error_code ec;
  std::filesystem::create_directories(*out_dir, ec);
  if (ec) {
    print_diagnostic(io, *out_dir, error_at(DiagCode::Io, "cannot create directory"));
    return kExitUsage;
  }
  for (const auto& doc : docs) {
    std::filesystem::path target = std::filesystem::path(*out_dir) / (doc.name + ".scr");
    std::ofstream out(target, std::ios::binary);
    out << doc.render();
    if (!out) {
      print_diagnostic(io, target.string(), error_at(DiagCode::Io, "cannot write file"));
      return kExitUsage;
    }
  }
  return kExitOk;
}

}  // namespace slt
