// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "distsim/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <utility>
#include <variant>

#include "json.hpp"

#include "distsim/catalog.hpp"
#include "distsim/detail/parallel.hpp"
#include "distsim/error.hpp"
#include "distsim/format.hpp"

namespace distsim {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::optional<double> parse_double(std::string_view text) {
  double value = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) return std::nullopt;
  return value;
}

/// Relatedness orientation: larger is more related.
double oriented(double value, Polarity polarity) { return polarity == Polarity::kDistance ? -value : value; }

std::string describe(const std::exception& e) {
  std::string text;
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    text = std::string(to_string(err->kind())) + ": " + err->what();
  } else {
    text = e.what();
  }
  std::replace_if(text.begin(), text.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return text;
}

void check_lengths(std::span<const double> xs, std::span<const double> ys, std::string_view what) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorKind::kInvalidInput, std::string(what) + ": inputs differ in length");
  }
  if (xs.size() < 2) throw Error(ErrorKind::kInvalidInput, std::string(what) + ": needs at least two values");
}

std::optional<double> correlation_or_none(double (*fn)(std::span<const double>, std::span<const double>),
                                          std::span<const double> xs, std::span<const double> ys) {
  try {
    return fn(xs, ys);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidInput || e.kind() == ErrorKind::kUndefinedCorrelation) {
      return std::nullopt;
    }
    throw;
  }
}

std::string optional_real(const std::optional<double>& v) { return format_real(v.value_or(std::nan(""))); }

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

void GoldStandard::validate() const {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& p : pairs) {
    if (!std::isfinite(p.rating)) {
      throw Error(ErrorKind::kInvalidInput, "gold pair " + p.word1 + "/" + p.word2 + " has a non-finite rating");
    }
    auto key = std::minmax(p.word1, p.word2);
    if (!seen.emplace(key.first, key.second).second) {
      throw Error(ErrorKind::kInvalidInput, "duplicate gold pair " + p.word1 + "/" + p.word2);
    }
  }
}

GoldStandard read_gold(std::istream& in) {
  GoldStandard gold;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    const auto where = "gold line " + std::to_string(line_no);
    if (fields.size() != 3) throw Error(ErrorKind::kParse, where + ": expected word1<TAB>word2<TAB>rating");
    if (fields[0].empty() || fields[1].empty()) throw Error(ErrorKind::kParse, where + ": empty word");
    const auto rating = parse_double(fields[2]);
    if (!rating) throw Error(ErrorKind::kParse, where + ": rating is not a number");
    gold.pairs.push_back(GoldPair{std::string(fields[0]), std::string(fields[1]), *rating});
  }
  gold.validate();
  return gold;
}

GoldStandard read_gold(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kNotFound, "cannot open gold file " + path.string());
  return read_gold(in);
}

Score score_words(const CooccurrenceStore& store, std::string_view w1, std::string_view w2,
                  const MeasureSpec& spec, const ScoringOptions& options) {
  if (options.combine) {
    const RelationFilter relations = options.relations.empty() ? store.relations() : options.relations;
    return combine_relations(store, w1, w2, spec, relations, *options.combine);
  }
  return evaluate(store, w1, w2, spec, options.relations);
}

EvalReport score_pairs(const CooccurrenceStore& store, const GoldStandard& gold, const MeasureSpec& spec,
                       const ScoringOptions& options) {
  EvalReport report = score_all_pairs(store, gold, spec, options);
  if (report.scored_pairs.empty()) {
    throw Error(ErrorKind::kEmptyReport, "every gold pair was skipped for " + report.measure);
  }
  return report;
}

EvalReport score_all_pairs(const CooccurrenceStore& store, const GoldStandard& gold, const MeasureSpec& spec,
                           const ScoringOptions& options) {
  spec.validate();
  const auto& m = info(spec.measure);
  std::vector<std::variant<Score, std::string>> results(gold.pairs.size());
  detail::parallel_for(gold.pairs.size(), options.workers, [&](std::size_t i) {
    const auto& p = gold.pairs[i];
    try {
      results[i] = score_words(store, p.word1, p.word2, spec, options);
    } catch (const std::exception& e) {
      results[i] = describe(e);
    }
  });

  EvalReport report;
  report.polarity = m.polarity;
  report.measure = std::string(m.key);
  std::vector<double> scores, ratings;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& p = gold.pairs[i];
    if (const auto* s = std::get_if<Score>(&results[i])) {
      if (report.scored_pairs.empty()) report.measure = s->measure;
      report.scored_pairs.push_back(ScoredPair{p.word1, p.word2, s->value, 0, p.rating});
      scores.push_back(oriented(s->value, m.polarity));
      ratings.push_back(p.rating);
    } else {
      report.skipped.push_back(SkippedPair{p.word1, p.word2, std::get<std::string>(results[i])});
    }
  }
  std::vector<double> descending(scores.size());
  std::transform(scores.begin(), scores.end(), descending.begin(), [](double v) { return -v; });
  const auto ranks = average_ranks(descending);
  for (std::size_t i = 0; i < ranks.size(); ++i) report.scored_pairs[i].rank = ranks[i];

  report.spearman = correlation_or_none(&spearman, scores, ratings);
  report.pearson = correlation_or_none(&pearson, scores, ratings);
  return report;
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  check_lengths(xs, ys, "pearson");
  const auto n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) throw Error(ErrorKind::kUndefinedCorrelation, "pearson: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  check_lengths(xs, ys, "spearman");
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  try {
    return pearson(rx, ry);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kUndefinedCorrelation) {
      throw Error(ErrorKind::kUndefinedCorrelation, "spearman: zero rank variance");
    }
    throw;
  }
}

double rank_concordance(std::span<const double> a, std::span<const double> b) {
  check_lengths(a, b, "rank_concordance");
  auto sign = [](double x, double y) { return (x > y) - (x < y); };
  std::size_t agree = 0, total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      ++total;
      if (sign(a[i], a[j]) == sign(b[i], b[j])) ++agree;
    }
  }
  return static_cast<double>(agree) / static_cast<double>(total);
}

std::vector<Neighbor> neighbors(const CooccurrenceStore& store, std::string_view target, const MeasureSpec& spec,
                                std::size_t k, const ScoringOptions& options) {
  spec.validate();
  if (k == 0) throw Error(ErrorKind::kInvalidParameter, "neighbors: k must be >= 1");
  const WordId t = store.vocabulary().at(target);
  const auto& words = store.vocabulary().words();
  const Polarity polarity = info(spec.measure).polarity;

  std::optional<ContextProfile> target_profile;
  ProfileRequest req;
  if (!options.combine) {
    req = profile_request(spec);
    target_profile = profile(store, target, options.relations, req.semantics, req.assoc);
    if (target_profile->empty()) {
      throw Error(ErrorKind::kUndefinedProbability,
                  "'" + std::string(target) + "' has no co-occurrences under the selected relations");
    }
  }

  std::vector<std::optional<double>> scores(words.size());
  detail::parallel_for(words.size(), options.workers, [&](std::size_t i) {
    if (i == t) return;
    try {
      if (target_profile) {
        const ContextProfile candidate = profile(store, words[i], options.relations, req.semantics, req.assoc);
        if (candidate.empty()) return;
        scores[i] = evaluate(spec, *target_profile, candidate).value;
      } else {
        scores[i] = score_words(store, target, words[i], spec, options).value;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kUndefinedMeasure && e.kind() != ErrorKind::kZeroDenominator &&
          e.kind() != ErrorKind::kUndefinedProbability) {
        throw;
      }
    }
  });

  std::vector<Neighbor> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (scores[i]) out.push_back(Neighbor{words[i], *scores[i]});
  }
  auto better = [polarity](const Neighbor& a, const Neighbor& b) {
    const double oa = oriented(a.score, polarity), ob = oriented(b.score, polarity);
    if (oa != ob) return oa > ob;
    return a.word < b.word;
  };
  const std::size_t keep = std::min(k, out.size());
  std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(keep), out.end(), better);
  out.resize(keep);
  return out;
}

void write_score_tsv(const Score& score, std::ostream& out) { out << format_real(score.value) << '\n'; }

void write_score_json(const Score& score, std::string_view w1, std::string_view w2, std::ostream& out) {
  Json j{{"word1", w1},
         {"word2", w2},
         {"measure", score.measure},
         {"polarity", to_string(score.direction)},
         {"symmetric", score.symmetric},
         {"value", score.value}};
  out << j.dump(2) << '\n';
}

void write_report_tsv(const EvalReport& report, std::ostream& out) {
  out << "#measure=" << report.measure << "\tpolarity=" << to_string(report.polarity) << '\n';
  out << "word1\tword2\trating\tscore\trank\n";
  for (const auto& p : report.scored_pairs) {
    out << p.word1 << '\t' << p.word2 << '\t' << format_real(p.rating) << '\t' << format_real(p.score) << '\t'
        << format_real(p.rank) << '\n';
  }
  for (const auto& s : report.skipped) out << "#skipped\t" << s.word1 << '\t' << s.word2 << '\t' << s.reason << '\n';
  out << "#spearman=" << optional_real(report.spearman) << '\n';
  out << "#pearson=" << optional_real(report.pearson) << '\n';
}

void write_report_json(const EvalReport& report, std::ostream& out) {
  Json scored = Json::array();
  for (const auto& p : report.scored_pairs) {
    scored.push_back(
        {{"word1", p.word1}, {"word2", p.word2}, {"rating", p.rating}, {"score", p.score}, {"rank", p.rank}});
  }
  Json skipped = Json::array();
  for (const auto& s : report.skipped) skipped.push_back({{"word1", s.word1}, {"word2", s.word2}, {"reason", s.reason}});
  Json j{{"measure", report.measure},
         {"polarity", to_string(report.polarity)},
         {"scored_pairs", std::move(scored)},
         {"skipped", std::move(skipped)},
         {"spearman", optional_json(report.spearman)},
         {"pearson", optional_json(report.pearson)}};
  out << j.dump(2) << '\n';
}

void write_neighbors_tsv(std::span<const Neighbor> list, std::ostream& out) {
  for (const auto& n : list) out << n.word << '\t' << format_real(n.score) << '\n';
}

void write_neighbors_json(std::span<const Neighbor> list, std::string_view target, std::string_view measure,
                          std::ostream& out) {
  Json arr = Json::array();
  for (const auto& n : list) arr.push_back({{"word", n.word}, {"score", n.score}});
  Json j{{"target", target}, {"measure", measure}, {"neighbors", std::move(arr)}};
  out << j.dump(2) << '\n';
}

}  // namespace distsim
