#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

int run_report(const std::function<eqos::Report()>& make) {
  auto start = std::chrono::steady_clock::now();
  eqos::Report report = make();
  auto stop = std::chrono::steady_clock::now();
  report.set_timing_ms(
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
  std::cout << report.full_text();
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for arrangement cohomology rings and their conjugation action"};
  app.require_subcommand(1);

  std::string file, file_b, ring = "eq", example;
  std::string topes_file, covectors_file;
  std::vector<std::string> ideal_files;
  int degree = -1;
  bool equivariant = false;

  CLI::App* pres = app.add_subcommand("presentation", "ring presentation, basis, Hilbert data");
  pres->add_option("file", file, "arrangement file")->required();
  pres->add_option("--ring", ring, "os | eq | vg")->check(CLI::IsMember({"os", "eq", "vg"}));
  pres->add_option("--degree", degree, "degree horizon (default: rank+2)");

  CLI::App* cmp = app.add_subcommand("compare", "distinguish two rings by their invariants");
  cmp->add_option("fileA", file, "first arrangement file");
  cmp->add_option("fileB", file_b, "second arrangement file");
  cmp->add_option("--ideals", ideal_files, "two ideal files instead of arrangements")
      ->expected(2);
  cmp->add_option("--degree", degree, "degree horizon (default: 4 for n=5,6; rank+2 otherwise)");

  CLI::App* sal = app.add_subcommand("salvetti", "combinatorial model of the complement");
  sal->add_option("file", file, "arrangement file (affine inputs are coned)");
  sal->add_option("--topes", topes_file, "tope file for abstract input");
  sal->add_option("--covectors", covectors_file, "covector file for abstract input");
  sal->add_option("--degree", degree, "Borel twist bound (default: rank+2)");
  sal->add_flag("--equivariant", equivariant, "also compute truncated Borel dims");

  CLI::App* rep = app.add_subcommand("reproduce", "scripted runs of the published examples");
  rep->add_option("--example", example, "falk | vertical | cone")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (pres->parsed())
      return run_report([&] { return eqos::cli::cmd_presentation(file, ring, degree); });

    if (cmp->parsed()) {
      if (!ideal_files.empty()) {
        if (!file.empty() || !file_b.empty())
          throw std::invalid_argument("give either two arrangement files or --ideals, not both");
        return run_report(
            [&] { return eqos::cli::cmd_compare_ideals(ideal_files[0], ideal_files[1], degree); });
      }
      if (file.empty() || file_b.empty())
        throw std::invalid_argument("compare needs two arrangement files or --ideals");
      return run_report([&] { return eqos::cli::cmd_compare_files(file, file_b, degree); });
    }

    if (sal->parsed()) {
      bool has_abstract = !topes_file.empty() || !covectors_file.empty();
      if (has_abstract) {
        if (topes_file.empty() || covectors_file.empty())
          throw std::invalid_argument("abstract input needs both --topes and --covectors");
        if (!file.empty())
          throw std::invalid_argument("give either an arrangement file or tope/covector files");
        return run_report([&] {
          return eqos::cli::cmd_salvetti_abstract(topes_file, covectors_file, degree, equivariant);
        });
      }
      if (file.empty()) throw std::invalid_argument("salvetti needs an input");
      return run_report([&] { return eqos::cli::cmd_salvetti(file, degree, equivariant); });
    }

    if (rep->parsed())
      return run_report([&] { return eqos::cli::cmd_reproduce(example); });
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
