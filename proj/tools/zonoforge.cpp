#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zonoforge/cli.hpp"

namespace zc = zonoforge::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact hierarchical zonotopal spaces"};
  app.require_subcommand(1);
  std::string input;
  std::string output;
  zc::CommandOptions opt;
  std::uint64_t seed = 0;
  unsigned dmax = 0;

  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("--input", input, "configuration document (JSON)");
    if (input_required) in->required();
    sub->add_option("--output", output, "write the report here instead of stdout");
    sub->add_option("--seed", seed, "seed for sampled arrangement offsets");
    sub->add_option("--dmax", dmax, "last degree checked by direct-sum certificates");
  };
  auto* matroid = app.add_subcommand("matroid", "bases, independents, facets and valuations");
  add_common(matroid, true);
  auto* space = app.add_subcommand("space", "construct a zonotopal space bundle");
  add_common(space, true);
  std::string kind;
  space->add_option("--kind", kind, "central, external, semi_external or semi_internal")->required();
  auto* verify = app.add_subcommand("verify", "run the certificates of one theorem");
  add_common(verify, true);
  std::string theorem;
  verify->add_option("--theorem", theorem, "th1, exzono, pi, plus, basis, explus, t26, t28, t33, t34 or r37")
      ->required();
  auto* search = app.add_subcommand("search-r37", "search small configurations for a counterexample");
  add_common(search, false);
  search->add_option("--max-n", opt.max_n, "largest dimension searched");
  search->add_option("--max-N", opt.max_N, "largest number of columns searched");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? zc::kExitPass : zc::kExitInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  opt.command = sub->get_name();
  if (sub->count("--seed")) opt.seed = seed;
  if (sub->count("--dmax")) opt.dmax = dmax;
  if (!kind.empty()) opt.kind = kind;
  if (!theorem.empty()) opt.theorem = theorem;

  zc::CommandResult result;
  std::optional<zc::ConfigDocument> doc;
  try {
    if (!input.empty()) doc = zc::load_document(input);
    result = zc::run(opt, doc);
  } catch (const zonoforge::Error& e) {
    result = zc::error_result(opt.command, e.code(), e.detail());
  }
  if (result.report.contains("error")) {
    const auto& err = result.report["error"];
    std::cerr << "zonoforge: " << err["code"].get<std::string>() << ": " << err["message"].get<std::string>() << '\n';
    if (err.contains("hint")) std::cerr << "hint: " << err["hint"].get<std::string>() << '\n';
  }

  const std::string text = zc::render(result.report);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "zonoforge: cannot write '" << output << "'\n";
      return zc::kExitInputError;
    }
    out << text;
  }
  return result.exit_code;
}
