#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slt/ast.hpp"
#include "slt/lightener.hpp"
#include "slt/redundancy.hpp"
#include "slt/scribble.hpp"
#include "slt/semantics.hpp"
#include "slt/syntax.hpp"

namespace py = pybind11;

namespace {

struct Program {
  slt::TypePtr main;
  slt::Declarations decls;
};

std::vector<std::string> diagnostics_of(const std::string& text) {
  slt::ParseResult parsed = slt::parse(text);
  std::vector<std::string> out;
  for (const auto& d : parsed.diagnostics) out.push_back(slt::format_diagnostic(d));
  if (!parsed.ok()) return out;
  for (const auto& d : slt::well_formed(parsed.file->main, parsed.file->decls)) {
    out.push_back(slt::format_diagnostic(d));
  }
  return out;
}

// Parses and validates; raises ValueError listing every fault otherwise.
Program load(const std::string& text) {
  slt::ParseResult parsed = slt::parse(text);
  if (parsed.ok()) {
    std::vector<slt::Diagnostic> semantic =
        slt::well_formed(parsed.file->main, parsed.file->decls);
    if (semantic.empty()) return {parsed.file->main, std::move(parsed.file->decls)};
    parsed.diagnostics = std::move(semantic);
  }
  std::string message;
  for (const auto& d : parsed.diagnostics) {
    if (!message.empty()) message += '\n';
    message += slt::format_diagnostic(d);
  }
  throw py::value_error(message);
}

std::string canonical(const std::string& text) {
  Program p = load(text);
  return slt::print_source(p.main, p.decls);
}

std::string lighten(const std::string& text, const std::string& prefix, bool dedup) {
  Program p = load(text);
  slt::LightenResult result = slt::lighten_fully(p.main, p.decls, prefix);
  if (dedup) result = slt::dedup_declarations(result);
  return slt::print_source(result.main, result.decls);
}

std::string eliminate_at(const std::string& text, const std::string& path,
                         const std::string& prefix) {
  Program p = load(text);
  std::optional<slt::ContextPath> parsed_path = slt::ContextPath::parse(path);
  if (!parsed_path) throw py::value_error("malformed site path '" + path + "'");
  for (const slt::RedundantSite& site : slt::find_redundant(p.main)) {
    if (site.path == *parsed_path) {
      slt::FreshNamer namer(prefix, p.decls);
      slt::LighteningResult step = slt::eliminate(p.main, site, namer);
      slt::Declarations decls = p.decls;
      decls.merge(step.new_decls);
      return slt::print_source(step.result, decls);
    }
  }
  throw py::value_error("no redundant interaction at path '" + parsed_path->render() + "'");
}

std::vector<std::string> redundant_paths(const std::string& text) {
  Program p = load(text);
  std::vector<std::string> out;
  for (const slt::RedundantSite& site : slt::find_redundant(p.main)) {
    out.push_back(site.path.render());
  }
  return out;
}

std::vector<std::string> traces(const std::string& text) {
  Program p = load(text);
  return slt::render_lines(slt::traces(p.main, p.decls));
}

py::tuple lang_eq(const std::string& text1, const std::string& text2) {
  Program a = load(text1);
  Program b = load(text2);
  slt::LangEqResult r = slt::lang_eq(a.main, a.decls, b.main, b.decls);
  if (r.equal) return py::make_tuple(true, py::none(), 0);
  return py::make_tuple(false, slt::render(*r.witness), r.witness_side);
}

std::string emit_scribble(const std::string& text, const std::string& name) {
  Program p = load(text);
  return slt::render_concatenated(slt::emit_scribble(name, p.main, p.decls));
}

}  // namespace

PYBIND11_MODULE(_slt, m) {
  m.doc() = "Session-type lightening: parse protocols, remove redundant "
            "interactions, enumerate traces, render Scribble blocks.";
  m.attr("__version__") = SLT_VERSION;

  m.def("check", &diagnostics_of, py::arg("text"),
        "Parse and validate; returns formatted diagnostics, empty when well-formed.");
  m.def("canonical", &canonical, py::arg("text"),
        "Canonically printed form of a well-formed source text.");
  m.def("lighten", &lighten, py::arg("text"), py::arg("prefix") = "L",
        py::arg("dedup") = false,
        "Remove every redundant interaction, splitting the protocol into "
        "call-linked declarations; returns the rewritten source.");
  m.def("eliminate_at", &eliminate_at, py::arg("text"), py::arg("path"),
        py::arg("prefix") = "L",
        "Remove the one redundant interaction at the given branch-label path.");
  m.def("redundant_paths", &redundant_paths, py::arg("text"),
        "Branch-label paths of the main type's redundant interactions, in preorder.");
  m.def("traces", &traces, py::arg("text"),
        "The finite trace language, one rendered trace per line, sorted.");
  m.def("lang_eq", &lang_eq, py::arg("text1"), py::arg("text2"),
        "(equal, witness, side): trace-language equality with the smallest "
        "separating trace and which input (1 or 2) contains it.");
  m.def("emit_scribble", &emit_scribble, py::arg("text"), py::arg("name") = "protocol",
        "Scribble protocol blocks for the main type and every declaration.");
}
