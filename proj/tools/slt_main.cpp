#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "slt/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"toolkit for light global session types"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  slt::LightenOptions lighten_opts;
  std::string at_path;
  std::string out_dir;

  CLI::App* check = app.add_subcommand("check", "parse and validate a file");
  check->add_option("file", file, "input file")->required();

  CLI::App* lighten = app.add_subcommand("lighten", "remove redundant interactions");
  lighten->add_option("file", file, "input file")->required();
  lighten->add_option("--prefix", lighten_opts.prefix, "prefix for fresh declaration names")
      ->capture_default_str();
  lighten->add_flag("--dedup", lighten_opts.dedup,
                    "merge fresh declarations that duplicate an earlier one");
  CLI::Option* at_opt =
      lighten->add_option("--at", at_path, "remove only the site at this branch-label path");

  CLI::App* traces_cmd = app.add_subcommand("traces", "print the trace language");
  traces_cmd->add_option("file", file, "input file")->required();

  CLI::App* verify = app.add_subcommand("verify", "compare the trace languages of two files");
  verify->add_option("file1", file, "first input")->required();
  verify->add_option("file2", file2, "second input")->required();

  CLI::App* emit = app.add_subcommand("emit-scribble", "render linked protocol blocks");
  emit->add_option("file", file, "input file")->required();
  CLI::Option* dir_opt =
      emit->add_option("--out-dir", out_dir, "write one .scr file per protocol here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return slt::kExitUsage;
  }

  slt::CliStreams io{std::cout, std::cerr,
                     slt::resolve_color(std::getenv("SLT_COLOR"), isatty(fileno(stderr)) != 0)};
  if (*check) return slt::cmd_check(file, io);
  if (*lighten) {
    if (*at_opt) lighten_opts.at = at_path;
    return slt::cmd_lighten(file, lighten_opts, io);
  }
  if (*traces_cmd) return slt::cmd_traces(file, io);
  if (*verify) return slt::cmd_verify(file, file2, io);
  if (*emit) {
    std::optional<std::string> dir;
    if (*dir_opt) dir = out_dir;
    return slt::cmd_emit_scribble(file, dir, io);
  }
  return slt::kExitUsage;
}
