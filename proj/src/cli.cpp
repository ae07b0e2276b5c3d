#include "gridrig/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "gridrig/errors.hpp"
#include "gridrig/generators.hpp"
#include "gridrig/io.hpp"
#include "gridrig/service.hpp"

namespace gridrig::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  std::string output;
  bool flexes = false;
  std::string variant = "221";
  bool loopless = false;
  std::string mode = "sym";
  std::string norm = "linf";
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  std::size_t max_orbits = 5;
  std::string artifacts;
};

void emit(const Json& j, const Options& opt, std::ostream& out) {
  const std::string text = io::dump(j);
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw InvalidInput("cannot write '" + opt.output + "'");
  file << text;
}

QuadNorm load_norm(const std::string& spec) { return service::norm_from_spec(spec); }

int cmd_analyze(const Options& opt, std::ostream& out) {
  emit(service::analyze(io::read_file(opt.input), opt.flexes), opt, out);
  return kExitOk;
}

int cmd_sparsity(const Options& opt, std::ostream& out) {
  emit(service::sparsity(io::read_file(opt.input), io::variant_from_string(opt.variant), opt.loopless), opt, out);
  return kExitOk;
}

int cmd_construct(const Options& opt, std::ostream& out) {
  emit(service::construct(io::read_file(opt.input), io::mode_from_string(opt.mode)), opt, out);
  return kExitOk;
}

int cmd_realize(const Options& opt, std::ostream& out) {
  emit(service::realize(io::read_file(opt.input), io::mode_from_string(opt.mode), load_norm(opt.norm), opt.seed), opt,
       out);
  return kExitOk;
}

int cmd_crosscheck(const Options& opt, std::ostream& out) {
  const auto [summary, failures] = service::crosscheck(opt.cases, opt.max_orbits, opt.seed, load_norm(opt.norm));
  emit(summary, opt, out);
  return failures == 0 ? kExitOk : kExitDomain;
}

void write_artifact(const Options& opt, const std::string& name, const Json& j, Json& listing) {
  if (opt.artifacts.empty()) return;
  std::filesystem::create_directories(opt.artifacts);
  const auto path = std::filesystem::path(opt.artifacts) / (name + ".json");
  std::ofstream(path, std::ios::binary) << io::dump(j);
  listing.push_back(path.string());
}

int cmd_fuzz(const Options& opt, std::ostream& out) {
  Rng rng(opt.seed);
  const QuadNorm norm = load_norm(opt.norm);
  std::size_t crosscheck_failures = 0;
  std::size_t sparsity_failures = 0;
  Json listing = Json::array();
  for (std::size_t i = 0; i < opt.cases; ++i) {
    const auto q = random_quotient(rng, opt.max_orbits, 12);
    for (auto variant : {SparsityVariant::k221, SparsityVariant::k220}) {
      const auto fast = check_gain_sparse(q, variant);
      const auto slow = oracle_gain_sparse_edge_subsets(q, variant);
      if (fast.sparse != slow.sparse || fast.tight != slow.tight) {
        ++sparsity_failures;
        write_artifact(opt, "sparsity-" + std::to_string(i) + "-" + to_string(variant),
                       Json{{"quotient", io::to_json(q)},
                            {"variant", to_string(variant)},
                            {"scan", io::to_json(fast, q)},
                            {"oracle", io::to_json(slow, q)}},
                       listing);
      }
    }
    const SymmetricFramework f = random_corpus_framework(rng, opt.max_orbits, norm);
    const auto rec = crosscheck(f);
    if (!rec.agree()) {
      ++crosscheck_failures;
      write_artifact(opt, "crosscheck-" + std::to_string(i),
                     Json{{"framework", io::to_json(f)}, {"disagreements", service::disagreements_json(rec.disagreements)}},
                     listing);
    }
  }
  Json j{{"cases", opt.cases},
         {"seed", opt.seed},
         {"crosscheck_failures", crosscheck_failures},
         {"sparsity_failures", sparsity_failures},
         {"artifacts", listing}};
  emit(j, opt, out);
  return crosscheck_failures + sparsity_failures == 0 ? kExitOk : kExitDomain;
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigidity of reflection-symmetric frameworks in quadrilateral norms", "gridrig"};
  app.require_subcommand(1);
  Options opt;

  auto* analyze = app.add_subcommand("analyze", "Rank and combinatorial rigidity report of a framework");
  analyze->add_option("-i,--input", opt.input, "framework JSON")->required();
  analyze->add_option("-o,--output", opt.output, "write the report here instead of stdout");
  analyze->add_flag("--flexes", opt.flexes, "include flexes lifted to the covering framework");

  auto* sparsity = app.add_subcommand("sparsity", "Gain-sparsity verdict of a signed quotient graph");
  sparsity->add_option("-i,--input", opt.input, "quotient JSON")->required();
  sparsity->add_option("--variant", opt.variant, "221 or 220")->check(CLI::IsMember({"221", "220"}));
  sparsity->add_flag("--loopless", opt.loopless, "also require the graph to have no loops");
  sparsity->add_option("-o,--output", opt.output, "output file");

  auto* construct = app.add_subcommand("construct", "Construction sequence of a tight graph");
  construct->add_option("-i,--input", opt.input, "quotient JSON")->required();
  construct->add_option("--mode", opt.mode, "sym or anti")->check(CLI::IsMember({"sym", "anti"}));
  construct->add_option("-o,--output", opt.output, "output file");

  auto* realize_cmd = app.add_subcommand("realize", "Isostatic realization of a tight graph");
  realize_cmd->add_option("-i,--input", opt.input, "quotient or sequence JSON")->required();
  realize_cmd->add_option("--mode", opt.mode, "sym or anti")->check(CLI::IsMember({"sym", "anti"}));
  realize_cmd->add_option("--norm", opt.norm, "linf, l1, or a norm JSON file");
  realize_cmd->add_option("--seed", opt.seed, "random seed");
  realize_cmd->add_option("-o,--output", opt.output, "output file");

  auto* cross = app.add_subcommand("crosscheck", "Compare rank and combinatorial verdicts on random frameworks");
  cross->add_option("--random", opt.cases, "number of frameworks");
  cross->add_option("--max-orbits", opt.max_orbits)->check(CLI::Range(1, 8));
  cross->add_option("--seed", opt.seed, "random seed");
  cross->add_option("--norm", opt.norm, "linf, l1, or a norm JSON file");
  cross->add_option("-o,--output", opt.output, "output file");

  auto* fuzz = app.add_subcommand("fuzz", "Crosscheck plus sparsity-oracle agreement on random inputs");
  fuzz->add_option("--cases", opt.cases, "number of random inputs");
  fuzz->add_option("--max-orbits", opt.max_orbits)->check(CLI::Range(1, 6));
  fuzz->add_option("--seed", opt.seed, "random seed");
  fuzz->add_option("--norm", opt.norm, "linf, l1, or a norm JSON file");
  fuzz->add_option("--artifacts", opt.artifacts, "directory for failure artifacts");
  fuzz->add_option("-o,--output", opt.output, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSchema;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opt, out);
    if (sparsity->parsed()) return cmd_sparsity(opt, out);
    if (construct->parsed()) return cmd_construct(opt, out);
    if (realize_cmd->parsed()) return cmd_realize(opt, out);
    if (cross->parsed()) return cmd_crosscheck(opt, out);
    return cmd_fuzz(opt, out);
  } catch (const SchemaError& e) {
    Json j = error_json("schema", e.what());
    j["pointer"] = e.pointer();
    err << io::dump(j);
    return kExitSchema;
  } catch (const IllPositioned& e) {
    Json j = error_json("ill_positioned", e.what());
    j["edges"] = e.edges();
    err << io::dump(j);
    return kExitDomain;
  } catch (const std::exception& e) {
    err << io::dump(error_json("domain", e.what()));
    return kExitDomain;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace gridrig::cli
