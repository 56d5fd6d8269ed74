// Command-line front end. Talks to the engine only through the C API.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "towers/towers.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kIo = 3 };

int exit_for(tw_status s) {
  switch (s) {
    case TW_OK: return kPass;
    case TW_ERR_ARGUMENT:
    case TW_ERR_DEGREE_CAP: return kUsage;
    case TW_ERR_IO: return kIo;
    default: return kFail;
  }
}

int emit(tw_report* rep, const std::string& format, const std::string& output) {
  int code = tw_report_passed(rep) ? kPass : kFail;
  if (output.empty()) {
    std::fputs(format == "csv" ? tw_report_csv(rep) : tw_report_json(rep), stdout);
    if (std::fflush(stdout) != 0) code = kIo;
  } else if (tw_status s = tw_report_write(rep, format.c_str(), output.c_str()); s != TW_OK) {
    std::cerr << "towers: " << tw_last_error() << "\n";
    code = exit_for(s);
  }
  tw_report_free(rep);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Towers of algebras: axiom checks and Grothendieck tables"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tw_version()));

  std::string tower, check, group = "g0", route = "auto", output, format = "json", op, composition;
  int max_degree = 0;
  bool negative = false, timing = false;
  std::vector<int> degrees;

  const std::vector<std::string> towers{"sym", "hecke0", "z2"};
  const std::vector<std::string> routes{"auto", "character", "module", "combinatorial"};

  auto* cmd_check = app.add_subcommand("check", "Run an axiom or identity suite");
  cmd_check->add_option("--tower", tower, "sym, hecke0 or z2")->required()->check(CLI::IsMember(towers));
  cmd_check->add_option("--check", check, "Suite name")
      ->required()
      ->check(CLI::IsMember({"cond12", "cond3", "cond5", "cond5prime", "bialgebra", "duality", "antipode", "pairing"}));
  cmd_check->add_option("--group", group, "g0 or k0")->check(CLI::IsMember({"g0", "k0"}));
  cmd_check->add_option("--max-degree", max_degree, "Largest total degree")->required()->check(CLI::NonNegativeNumber);
  cmd_check->add_option("--route", route, "How Grothendieck data is computed")->check(CLI::IsMember(routes));
  cmd_check->add_option("--output", output, "Report path (default stdout)");
  cmd_check->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd_check->add_flag("--negative-control", negative, "Corrupt the input on purpose (cond12, duality)");
  cmd_check->add_flag("--timing", timing, "Record elapsed_ms (makes output run-dependent)");

  auto* cmd_table = app.add_subcommand("table", "Dump structure constants and module data");
  cmd_table->add_option("--tower", tower, "sym, hecke0 or z2")->required()->check(CLI::IsMember(towers));
  cmd_table->add_option("--op", op, "Table name")
      ->required()
      ->check(CLI::IsMember({"product", "coproduct", "antipode", "pairing", "characters", "module-bases"}));
  cmd_table->add_option("--degree", degrees, "Degree list, e.g. 1,1")->delimiter(',');
  cmd_table->add_option("--composition", composition, "Composition for module-bases, e.g. 2,1");
  cmd_table->add_option("--group", group, "g0 or k0")->check(CLI::IsMember({"g0", "k0"}));
  cmd_table->add_option("--route", route, "How Grothendieck data is computed")->check(CLI::IsMember(routes));
  cmd_table->add_option("--output", output, "Output path (default stdout)");
  cmd_table->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  tw_report* rep = nullptr;
  tw_status s;
  if (cmd_check->parsed()) {
    tw_check_request req{tower.c_str(), check.c_str(), group.c_str(), route.c_str(), max_degree, negative, timing};
    s = tw_check(&req, &rep);
  } else {
    tw_table_request req{tower.c_str(), op.c_str(), group.c_str(), route.c_str(), degrees.data(), degrees.size(),
                         composition.empty() ? nullptr : composition.c_str()};
    s = tw_table(&req, &rep);
  }
  if (s != TW_OK) {
    std::cerr << "towers: " << tw_last_error() << "\n";
    return exit_for(s);
  }
  return emit(rep, format, output);
}
