// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "distsim/cli.hpp"

#include <fstream>
#include <ostream>
#include <thread>

#include "CLI11.hpp"

#include "distsim/catalog.hpp"
#include "distsim/error.hpp"
#include "distsim/eval.hpp"
#include "distsim/store_io.hpp"

namespace distsim::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raw flag values shared by sim, neighbors and eval.
struct ScoringFlags {
  std::string store;
  std::string measure = "cosine";
  std::string assoc;
  double log_base = std::numbers::e;
  double pmi_log_base = 2.0;
  double alpha = 0.99;
  double gamma = 0.5;
  double beta = 0.5;
  std::vector<std::string> relations;
  std::string symmetrize = "none";
  std::string support = "union";
  std::string kld_mode = "strict";
  std::string combine = "none";
  std::string format = "tsv";
  unsigned workers = 1;
};

void add_scoring_flags(CLI::App& cmd, ScoringFlags& f) {
  cmd.add_option("--store", f.store, "Store file")->envname("DISTSIM_STORE");
  cmd.add_option("--measure", f.measure, "Catalog key (see list-measures)")->capture_default_str();
  cmd.add_option("--assoc", f.assoc, "Strength of association; default is the measure's native one")
      ->check(CLI::IsMember({"cp", "pmi"}));
  cmd.add_option("--log-base", f.log_base, "Log base for divergences")->capture_default_str();
  cmd.add_option("--pmi-log-base", f.pmi_log_base, "Log base for PMI strengths")->capture_default_str();
  cmd.add_option("--alpha", f.alpha, "Skew divergence alpha in (0, 1]")->capture_default_str();
  cmd.add_option("--gamma", f.gamma, "CRM gamma in [0, 1]")->capture_default_str();
  cmd.add_option("--beta", f.beta, "CRM beta in [0, 1]")->capture_default_str();
  cmd.add_option("--relations", f.relations, "Relations to use, comma separated")->delimiter(',');
  cmd.add_option("--symmetrize", f.symmetrize)->check(CLI::IsMember({"none", "max", "avg"}))->capture_default_str();
  cmd.add_option("--support", f.support)->check(CLI::IsMember({"union", "intersection"}))->capture_default_str();
  cmd.add_option("--kld-mode", f.kld_mode, "Zero-denominator handling of division-based measures")
      ->check(CLI::IsMember({"strict", "error-free"}))
      ->capture_default_str();
  cmd.add_option("--combine", f.combine, "Score each relation separately and combine")
      ->check(CLI::IsMember({"none", "avg", "max"}))
      ->capture_default_str();
  cmd.add_option("--format", f.format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  cmd.add_option("--workers", f.workers, "Worker threads (0 = hardware concurrency)")->capture_default_str();
}

MeasureSpec to_spec(const ScoringFlags& f) {
  MeasureSpec spec;
  const auto id = parse_measure(f.measure);
  if (!id) throw UsageError("unknown measure '" + f.measure + "'; valid measures: " + catalog_keys());
  spec.measure = *id;
  if (f.assoc == "cp") spec.association = Semantics::kConditionalProbability;
  if (f.assoc == "pmi") spec.association = Semantics::kPmi;
  spec.log_base = f.log_base;
  spec.assoc.log_base = f.pmi_log_base;
  spec.alpha = f.alpha;
  spec.gamma = f.gamma;
  spec.beta = f.beta;
  spec.symmetrize = f.symmetrize == "max"   ? SymmetrizeMode::kMax
                    : f.symmetrize == "avg" ? SymmetrizeMode::kAvg
                                            : SymmetrizeMode::kNone;
  spec.support = f.support == "intersection" ? SupportMode::kIntersection : SupportMode::kUnion;
  spec.kld_mode = f.kld_mode == "error-free" ? StrictMode::kErrorFree : StrictMode::kStrict;
  try {
    spec.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return spec;
}

ScoringOptions to_options(const ScoringFlags& f) {
  ScoringOptions options;
  options.relations = f.relations;
  if (f.combine == "avg") options.combine = CombineMode::kAvg;
  if (f.combine == "max") options.combine = CombineMode::kMax;
  options.workers = f.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : f.workers;
  return options;
}

CooccurrenceStore open_store(const ScoringFlags& f) {
  if (f.store.empty()) throw UsageError("no store given; pass --store or set DISTSIM_STORE");
  return load_store(std::filesystem::path(f.store));
}

int run_app(CLI::App& app, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << "valid measures: " << catalog_keys() << '\n';
    return kExitUsage;
  }
  return -1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distributional similarity toolkit", "distsim"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Build a store from a corpus or dependency triples");
  std::string corpus, triples, output;
  std::uint32_t window = 2;
  unsigned build_workers = 1;
  bool keep_case = false;
  auto* corpus_opt = build->add_option("--corpus", corpus, "Plain text, one document per line");
  auto* triples_opt = build->add_option("--triples", triples, "TSV head, relation, dependent, count");
  corpus_opt->excludes(triples_opt);
  triples_opt->excludes(corpus_opt);
  build->add_option("-o,--output", output, "Store file to write")->required();
  build->add_option("--window", window, "Window size for corpus input")->capture_default_str();
  build->add_option("--workers", build_workers, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  build->add_flag("--keep-case", keep_case, "Do not lowercase tokens");

  // sim
  auto* sim = app.add_subcommand("sim", "Score one word pair");
  ScoringFlags sim_flags;
  std::string w1, w2;
  add_scoring_flags(*sim, sim_flags);
  sim->add_option("word1", w1)->required();
  sim->add_option("word2", w2)->required();

  // neighbors
  auto* nb = app.add_subcommand("neighbors", "Nearest neighbors of a word");
  ScoringFlags nb_flags;
  std::string target;
  std::size_t top_k = 10;
  add_scoring_flags(*nb, nb_flags);
  nb->add_option("word", target)->required();
  nb->add_option("--top-k", top_k, "Number of neighbors")->capture_default_str()->check(CLI::PositiveNumber);

  // eval
  auto* ev = app.add_subcommand("eval", "Score gold pairs and correlate with human ratings");
  ScoringFlags ev_flags;
  std::string gold_path;
  bool strict = false;
  add_scoring_flags(*ev, ev_flags);
  ev->add_option("--gold", gold_path, "Gold TSV word1, word2, rating")->required();
  ev->add_flag("--strict", strict, "Fail (exit 2) when any pair is skipped");

  // list-measures
  auto* lm = app.add_subcommand("list-measures", "Print the measure catalog");
  std::string lm_format = "tsv";
  lm->add_option("--format", lm_format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();

  if (const int code = run_app(app, args, out, err); code >= 0) return code;

  try {
    if (*build) {
      if (corpus.empty() == triples.empty()) throw UsageError("build needs exactly one of --corpus or --triples");
      CooccurrenceStore store;
      if (!corpus.empty()) {
        std::ifstream in(corpus);
        if (!in) throw Error(ErrorKind::kNotFound, "cannot open corpus " + corpus);
        TokenizerConfig tok;
        tok.lowercase = !keep_case;
        const unsigned workers = build_workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : build_workers;
        store = build_windowed(in, window, tok, workers);
      } else {
        std::ifstream in(triples);
        if (!in) throw Error(ErrorKind::kNotFound, "cannot open triples " + triples);
        store = ingest_triples(in);
      }
      save_store(store, std::filesystem::path(output));
      err << "wrote " << output << ": " << store.vocabulary().size() << " words, " << store.relations().size()
          << " relations, " << store.pairs().size() << " pairs\n";
      return kExitOk;
    }
    if (*sim) {
      const MeasureSpec spec = to_spec(sim_flags);
      const CooccurrenceStore store = open_store(sim_flags);
      const Score s = score_words(store, w1, w2, spec, to_options(sim_flags));
      if (sim_flags.format == "json") {
        write_score_json(s, w1, w2, out);
      } else {
        write_score_tsv(s, out);
      }
      return kExitOk;
    }
    if (*nb) {
      const MeasureSpec spec = to_spec(nb_flags);
      const CooccurrenceStore store = open_store(nb_flags);
      const auto list = neighbors(store, target, spec, top_k, to_options(nb_flags));
      if (nb_flags.format == "json") {
        write_neighbors_json(list, target, info(spec.measure).key, out);
      } else {
        write_neighbors_tsv(list, out);
      }
      return kExitOk;
    }
    if (*ev) {
      const MeasureSpec spec = to_spec(ev_flags);
      const CooccurrenceStore store = open_store(ev_flags);
      const GoldStandard gold = read_gold(std::filesystem::path(gold_path));
      const EvalReport report = score_all_pairs(store, gold, spec, to_options(ev_flags));
      if (ev_flags.format == "json") {
        write_report_json(report, out);
      } else {
        write_report_tsv(report, out);
      }
      if (report.scored_pairs.empty()) {
        err << "error (" << to_string(ErrorKind::kEmptyReport) << "): every gold pair was skipped\n";
        return kExitData;
      }
      if (strict && !report.skipped.empty()) {
        err << "error: " << report.skipped.size() << " pair(s) skipped under --strict\n";
        return kExitData;
      }
      return kExitOk;
    }
    if (*lm) {
      out << (lm_format == "json" ? catalog_json() : catalog_table());
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace distsim::cli
