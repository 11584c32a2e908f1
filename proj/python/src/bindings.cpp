// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <numbers>
#include <sstream>

#include "distsim/assoc.hpp"
#include "distsim/catalog.hpp"
#include "distsim/cli.hpp"
#include "distsim/error.hpp"
#include "distsim/eval.hpp"
#include "distsim/measures.hpp"
#include "distsim/profile.hpp"
#include "distsim/store.hpp"
#include "distsim/store_io.hpp"

namespace py = pybind11;
using namespace distsim;

namespace {

template <typename E>
E choice(const std::map<std::string, E>& options, const std::string& value, const char* what) {
  const auto it = options.find(value);
  if (it == options.end()) {
    std::string valid;
    for (const auto& [k, v] : options) valid += (valid.empty() ? "" : ", ") + k;
    throw Error(ErrorKind::kInvalidSpec, std::string(what) + " must be one of " + valid + ", got '" + value + "'");
  }
  return it->second;
}

const std::map<std::string, Semantics> kSemantics{
    {"raw", Semantics::kRaw}, {"cp", Semantics::kConditionalProbability}, {"pmi", Semantics::kPmi}};

MeasureSpec make_spec(const std::string& measure, std::optional<std::string> association, double log_base,
                      double pmi_log_base, bool keep_negative_pmi, double alpha, double gamma, double beta,
                      const std::string& support, const std::string& kld_mode, const std::string& symmetrize) {
  MeasureSpec spec;
  const auto id = parse_measure(measure);
  if (!id) throw Error(ErrorKind::kInvalidSpec, "unknown measure '" + measure + "'; valid: " + catalog_keys());
  spec.measure = *id;
  if (association) spec.association = choice(kSemantics, *association, "association");
  spec.log_base = log_base;
  spec.assoc.log_base = pmi_log_base;
  if (keep_negative_pmi) spec.assoc.negative_pmi_policy = NegativePmiPolicy::kKeep;
  spec.alpha = alpha;
  spec.gamma = gamma;
  spec.beta = beta;
  spec.support = choice<SupportMode>({{"union", SupportMode::kUnion}, {"intersection", SupportMode::kIntersection}},
                                     support, "support");
  spec.kld_mode = choice<StrictMode>({{"strict", StrictMode::kStrict}, {"error-free", StrictMode::kErrorFree}},
                                     kld_mode, "kld_mode");
  spec.symmetrize = choice<SymmetrizeMode>(
      {{"none", SymmetrizeMode::kNone}, {"max", SymmetrizeMode::kMax}, {"avg", SymmetrizeMode::kAvg}}, symmetrize,
      "symmetrize");
  spec.validate();
  return spec;
}

ScoringOptions make_options(const RelationFilter& relations, std::optional<std::string> combine, unsigned workers) {
  ScoringOptions options;
  options.relations = relations;
  if (combine) {
    options.combine = choice<CombineMode>({{"avg", CombineMode::kAvg}, {"max", CombineMode::kMax}}, *combine, "combine");
  }
  options.workers = workers;
  return options;
}

GoldStandard make_gold(const std::vector<std::tuple<std::string, std::string, double>>& rows) {
  GoldStandard gold;
  for (const auto& [w1, w2, rating] : rows) gold.pairs.push_back({w1, w2, rating});
  gold.validate();
  return gold;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Distributional similarity measures over co-occurrence stores";

  static py::handle error_type = py::exception<Error>(m, "DistsimError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<CooccurrenceStore>(m, "Store")
      .def_property_readonly("words", [](const CooccurrenceStore& s) { return s.vocabulary().words(); })
      .def_property_readonly("relations", &CooccurrenceStore::relations)
      .def_property_readonly("window_size", &CooccurrenceStore::window_size)
      .def_property_readonly("num_pairs", [](const CooccurrenceStore& s) { return s.pairs().size(); })
      .def(
          "count",
          [](const CooccurrenceStore& s, const std::string& head, const std::string& relation, const std::string& dep) {
            return s.pair_count(s.relation_at(relation), s.vocabulary().at(head), s.vocabulary().at(dep));
          },
          py::arg("head"), py::arg("relation"), py::arg("dep"))
      .def(
          "profile",
          [](const CooccurrenceStore& s, const std::string& word, const RelationFilter& relations,
             const std::string& semantics, double pmi_log_base) {
            AssocParams params;
            params.log_base = pmi_log_base;
            const auto p = profile(s, word, relations, choice(kSemantics, semantics, "semantics"), params);
            std::vector<std::tuple<std::string, std::string, double>> out;
            for (const auto& f : p.features()) {
              out.emplace_back(s.relations().at(f.key.relation), s.vocabulary().word(f.key.word), f.strength);
            }
            return out;
          },
          py::arg("word"), py::arg("relations") = RelationFilter{}, py::arg("semantics") = "cp",
          py::arg("pmi_log_base") = 2.0)
      .def("save", [](const CooccurrenceStore& s, const std::filesystem::path& path) { save_store(s, path); })
      .def("__eq__", &CooccurrenceStore::operator==);

  m.def(
      "build_windowed",
      [](const std::vector<std::string>& documents, std::uint32_t window, bool keep_case, unsigned workers) {
        TokenizerConfig config;
        config.lowercase = !keep_case;
        py::gil_scoped_release release;
        return build_windowed(documents, window, config, workers);
      },
      py::arg("documents"), py::arg("window") = 2, py::arg("keep_case") = false, py::arg("workers") = 1);
  m.def(
      "ingest_triples",
      [](const std::vector<std::tuple<std::string, std::string, std::string, std::int64_t>>& rows) {
        std::vector<TripleRow> data;
        for (const auto& [h, r, d, c] : rows) data.push_back({h, r, d, c});
        return ingest_triples(data);
      },
      py::arg("rows"));
  m.def("load_store", [](const std::filesystem::path& path) { return load_store(path); }, py::arg("path"));
  m.def("merge", &merge, py::arg("a"), py::arg("b"));

  py::class_<MeasureSpec>(m, "MeasureSpec")
      .def(py::init(&make_spec), py::arg("measure") = "cosine", py::kw_only(),
           py::arg("association") = std::nullopt, py::arg("log_base") = std::numbers::e,
           py::arg("pmi_log_base") = 2.0, py::arg("keep_negative_pmi") = false, py::arg("alpha") = 0.99,
           py::arg("gamma") = 0.5, py::arg("beta") = 0.5, py::arg("support") = "union",
           py::arg("kld_mode") = "strict", py::arg("symmetrize") = "none")
      .def_property_readonly("measure", [](const MeasureSpec& s) { return std::string(info(s.measure).key); });

  py::class_<Score>(m, "Score")
      .def_readonly("value", &Score::value)
      .def_readonly("measure", &Score::measure)
      .def_readonly("symmetric", &Score::symmetric)
      .def_property_readonly("polarity", [](const Score& s) { return std::string(to_string(s.direction)); })
      .def("__float__", [](const Score& s) { return s.value; })
      .def("__repr__", [](const Score& s) { return "Score(" + s.measure + "=" + std::to_string(s.value) + ")"; });

  m.def(
      "similarity",
      [](const CooccurrenceStore& store, const std::string& w1, const std::string& w2, const MeasureSpec& spec,
         const RelationFilter& relations, std::optional<std::string> combine) {
        return score_words(store, w1, w2, spec, make_options(relations, combine, 1));
      },
      py::arg("store"), py::arg("word1"), py::arg("word2"), py::arg("spec") = MeasureSpec{},
      py::arg("relations") = RelationFilter{}, py::arg("combine") = std::nullopt);

  m.def(
      "neighbors",
      [](const CooccurrenceStore& store, const std::string& target, const MeasureSpec& spec, std::size_t k,
         const RelationFilter& relations, std::optional<std::string> combine, unsigned workers) {
        const auto options = make_options(relations, combine, workers);
        std::vector<Neighbor> list;
        {
          py::gil_scoped_release release;
          list = neighbors(store, target, spec, k, options);
        }
        std::vector<std::pair<std::string, double>> out;
        for (const auto& n : list) out.emplace_back(n.word, n.score);
        return out;
      },
      py::arg("store"), py::arg("target"), py::arg("spec") = MeasureSpec{}, py::arg("k") = 10,
      py::arg("relations") = RelationFilter{}, py::arg("combine") = std::nullopt, py::arg("workers") = 1);

  py::class_<ScoredPair>(m, "ScoredPair")
      .def_readonly("word1", &ScoredPair::word1)
      .def_readonly("word2", &ScoredPair::word2)
      .def_readonly("score", &ScoredPair::score)
      .def_readonly("rank", &ScoredPair::rank)
      .def_readonly("rating", &ScoredPair::rating);

  py::class_<EvalReport>(m, "EvalReport")
      .def_readonly("measure", &EvalReport::measure)
      .def_property_readonly("polarity", [](const EvalReport& r) { return std::string(to_string(r.polarity)); })
      .def_readonly("scored_pairs", &EvalReport::scored_pairs)
      .def_readonly("spearman", &EvalReport::spearman)
      .def_readonly("pearson", &EvalReport::pearson)
      .def_property_readonly("skipped",
                             [](const EvalReport& r) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& s : r.skipped) out.emplace_back(s.word1, s.word2, s.reason);
                               return out;
                             })
      .def("to_tsv", [](const EvalReport& r) {
        std::ostringstream out;
        write_report_tsv(r, out);
        return out.str();
      });

  m.def(
      "score_pairs",
      [](const CooccurrenceStore& store, const std::vector<std::tuple<std::string, std::string, double>>& gold,
         const MeasureSpec& spec, const RelationFilter& relations, std::optional<std::string> combine,
         unsigned workers) {
        const auto g = make_gold(gold);
        const auto options = make_options(relations, combine, workers);
        py::gil_scoped_release release;
        return score_pairs(store, g, spec, options);
      },
      py::arg("store"), py::arg("gold"), py::arg("spec") = MeasureSpec{}, py::arg("relations") = RelationFilter{},
      py::arg("combine") = std::nullopt, py::arg("workers") = 1);
  m.def(
      "read_gold",
      [](const std::filesystem::path& path) {
        std::vector<std::tuple<std::string, std::string, double>> out;
        for (const auto& p : read_gold(path).pairs) out.emplace_back(p.word1, p.word2, p.rating);
        return out;
      },
      py::arg("path"));

  m.def("spearman", [](const std::vector<double>& x, const std::vector<double>& y) { return spearman(x, y); });
  m.def("pearson", [](const std::vector<double>& x, const std::vector<double>& y) { return pearson(x, y); });
  m.def("pmi",
        [](const CooccurrenceStore& store, const std::string& x, const std::string& y, const RelationFilter& relations,
           double log_base, bool keep_negative) {
          AssocParams params;
          params.log_base = log_base;
          if (keep_negative) params.negative_pmi_policy = NegativePmiPolicy::kKeep;
          return pmi(store, x, y, relations, params);
        },
        py::arg("store"), py::arg("x"), py::arg("y"), py::arg("relations") = RelationFilter{},
        py::arg("log_base") = 2.0, py::arg("keep_negative") = false);

  m.def("measures", [] {
    py::list out;
    for (const auto& info : catalog()) {
      py::dict d;
      d["key"] = std::string(info.key);
      d["name"] = std::string(info.name);
      d["polarity"] = std::string(to_string(info.polarity));
      d["symmetric"] = info.symmetric;
      d["compositional"] = info.compositional;
      d["native_association"] = std::string(to_string(info.native));
      d["parameters"] = std::string(info.parameters);
      d["formula"] = std::string(info.formula);
      out.append(d);
    }
    return out;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
