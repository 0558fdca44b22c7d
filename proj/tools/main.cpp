#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lstar/corpus.hpp"
#include "lstar/generate.hpp"
#include "lstar/print.hpp"

namespace {

using namespace lstar;

long long default_fuel() {
  const char* env = std::getenv("EXT_FUEL");
  if (!env) return kDefaultFuel;
  try {
    long long v = std::stoll(env);
    if (v > 0) return v;
  } catch (...) {
  }
  return kDefaultFuel;
}

struct CommonFlags {
  std::string mode;
  long long fuel = default_fuel();
  bool json = false;
};

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--mode", flags.mode, "force a mode instead of inferring one")
      ->check(CLI::IsMember({"lstar", "lstarU", "lstarUeq", "internal"}));
  sub->add_option("--fuel", flags.fuel, "reduction step budget (EXT_FUEL overrides the default)");
  sub->add_flag("--json", flags.json, "machine-readable output");
}

RunOptions options_of(const CommonFlags& flags) {
  RunOptions opts;
  opts.fuel = flags.fuel;
  if (!flags.mode.empty()) {
    Mode m;
    mode_from_string(flags.mode, m);
    opts.mode = m;
  }
  return opts;
}

int run_pipeline(Pipeline pipeline, const std::string& file, const CommonFlags& flags) {
  FileResult res = run_file(pipeline, file, options_of(flags));
  if (flags.json) {
    std::cout << file_json(res).dump(2) << "\n";
  } else {
    for (const WitnessReport& rep : res.reports) std::cout << render_report(rep);
    for (const std::string& e : res.file_errors) std::cout << "error: " << e << "\n";
    if (pipeline == Pipeline::Reflect && !res.emitted.empty())
      std::cout << "-- translated source --\n" << res.emitted;
  }
  return res.exit_class;
}

int run_corpus_dir(const std::string& dir, const CommonFlags& flags) {
  std::vector<FileResult> results = run_corpus(dir, options_of(flags));
  int worst = 0;
  if (flags.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const FileResult& r : results) j.push_back(file_json(r));
    std::cout << j.dump(2) << "\n";
  }
  for (const FileResult& r : results) {
    if (!flags.json) {
      const char* status = r.exit_class == 0   ? "ok"
                           : r.exit_class == 1 ? "failed"
                           : r.exit_class == 2 ? "fuel-exhausted"
                                               : "parse-error";
      std::cout << r.path << ": " << status << "\n";
      for (const WitnessReport& rep : r.reports)
        if (rep.status != Status::Proved) std::cout << render_report(rep);
      for (const std::string& e : r.file_errors) std::cout << "  error: " << e << "\n";
    }
    worst = std::max(worst, r.exit_class);
  }
  if (!flags.json)
    std::cout << results.size() << " file(s), worst exit " << worst << "\n";
  return worst;
}

int run_gen(std::uint64_t seed, int size, int count, bool json) {
  std::vector<GenJudgment> items = generate(seed, size, count);
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const GenJudgment& g : items) {
      nlohmann::json item;
      item["context"] = print_context(g.ctx);
      std::vector<Name> scope = context_scope(g.ctx);
      item["term"] = print(g.term, scope);
      item["type"] = print(g.type, scope);
      item["cases"] = nlohmann::json::array();
      for (RuleCase c : g.cases) item["cases"].push_back(to_string(c));
      j.push_back(item);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const GenJudgment& g : items) {
      std::vector<Name> scope = context_scope(g.ctx);
      std::cout << print_context(g.ctx) << " |- " << print(g.term, scope) << " : "
                << print(g.type, scope) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda-star kernel: type checking, universe reflection, and "
               "extensionality witnesses"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string file;

  CLI::App* cmd_check = app.add_subcommand("check", "typecheck every goal of a file");
  cmd_check->add_option("file", file, "a .lst source file")->required();
  add_common(cmd_check, flags);

  CLI::App* cmd_reflect = app.add_subcommand(
      "reflect", "translate a plain file into the universe and re-check it");
  cmd_reflect->add_option("file", file, "a .lst source file")->required();
  add_common(cmd_reflect, flags);

  CLI::App* cmd_star = app.add_subcommand(
      "star", "build and check the relational witness for each goal `m : T a`");
  cmd_star->add_option("file", file, "a .lst source file")->required();
  add_common(cmd_star, flags);

  CLI::App* cmd_witness = app.add_subcommand(
      "witness", "reflect a closed plain judgment and prove its self-relatedness");
  cmd_witness->add_option("file", file, "a .lst source file")->required();
  add_common(cmd_witness, flags);

  CLI::App* cmd_gen =
      app.add_subcommand("gen", "generate random well-typed judgments");
  int count = 10, size = 4;
  std::uint64_t seed = 1;
  cmd_gen->add_option("--count", count, "number of judgments");
  cmd_gen->add_option("--size", size, "recursion depth budget");
  cmd_gen->add_option("--seed", seed, "random seed");
  bool gen_json = false;
  cmd_gen->add_flag("--json", gen_json, "machine-readable output");

  CLI::App* cmd_corpus = app.add_subcommand("corpus", "batch operations");
  CLI::App* cmd_corpus_run =
      cmd_corpus->add_subcommand("run", "typecheck every .lst file of a directory");
  std::string dir;
  cmd_corpus_run->add_option("dir", dir, "corpus directory")->required();
  add_common(cmd_corpus_run, flags);
  cmd_corpus->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_check->parsed()) return run_pipeline(Pipeline::Check, file, flags);
    if (cmd_reflect->parsed()) return run_pipeline(Pipeline::Reflect, file, flags);
    if (cmd_star->parsed()) return run_pipeline(Pipeline::Star, file, flags);
    if (cmd_witness->parsed()) return run_pipeline(Pipeline::Witness, file, flags);
    if (cmd_gen->parsed()) return run_gen(seed, size, count, gen_json);
    if (cmd_corpus->parsed()) return run_corpus_dir(dir, flags);
  } catch (const ParseError& e) {
    std::cerr << e.rendered << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
