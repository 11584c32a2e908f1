// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distsim/measures.hpp"
#include "distsim/store.hpp"

namespace distsim {

struct GoldPair {
  std::string word1;
  std::string word2;
  double rating = 0;
};

/// Human similarity ratings. No unordered pair appears twice; ratings are finite.
struct GoldStandard {
  std::vector<GoldPair> pairs;

  /// Throws Error(kInvalidInput) on a duplicate pair or a non-finite rating.
  void validate() const;
};

/// TSV `word1<TAB>word2<TAB>rating`; blank and `#` lines are ignored. Malformed rows throw
/// kParse with the line number.
GoldStandard read_gold(std::istream& in);
GoldStandard read_gold(const std::filesystem::path& path);

/// How word pairs are scored beyond the MeasureSpec itself.
struct ScoringOptions {
  RelationFilter relations;
  /// Set: score each relation separately and combine (relatedness measures only).
  std::optional<CombineMode> combine;
  unsigned workers = 1;
};

/// The one scoring path shared by pair evaluation, neighbor search and the CLI.
Score score_words(const CooccurrenceStore& store, std::string_view w1, std::string_view w2,
                  const MeasureSpec& spec, const ScoringOptions& options = {});

struct ScoredPair {
  std::string word1;
  std::string word2;
  double score = 0;
  /// Average rank among scored pairs; 1 is the most related (smallest distance).
  double rank = 0;
  double rating = 0;
};

struct SkippedPair {
  std::string word1;
  std::string word2;
  std::string reason;
};

struct EvalReport {
  std::string measure;
  Polarity polarity = Polarity::kRelatedness;
  std::vector<ScoredPair> scored_pairs;
  /// Unset when fewer than two pairs were scored or either side has zero variance.
  std::optional<double> spearman;
  std::optional<double> pearson;
  std::vector<SkippedPair> skipped;
};

/// Scores every gold pair in gold order. Pairs whose evaluation throws are recorded in
/// `skipped` with the error text. Distance scores are negated before ranking and
/// correlation. Throws kEmptyReport when every pair is skipped.
EvalReport score_pairs(const CooccurrenceStore& store, const GoldStandard& gold, const MeasureSpec& spec,
                       const ScoringOptions& options = {});
/// As score_pairs, but a report with no scored pairs is returned instead of thrown.
EvalReport score_all_pairs(const CooccurrenceStore& store, const GoldStandard& gold, const MeasureSpec& spec,
                           const ScoringOptions& options = {});

/// Ascending average ranks (1-based); tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman rank correlation with average ranks for ties.
/// Length mismatch or fewer than two values: kInvalidInput. Zero rank variance: kUndefinedCorrelation.
double spearman(std::span<const double> xs, std::span<const double> ys);
/// Product-moment correlation with the same guards.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Fraction of unordered index pairs (i, j) on which a and b agree in strict order or tie.
double rank_concordance(std::span<const double> a, std::span<const double> b);

struct Neighbor {
  std::string word;
  double score = 0;
};

/// Top-k words by relatedness (bottom-k for distances), excluding the target. Words whose
/// score is undefined are left out. Ties break lexicographically. The result does not
/// depend on options.workers. Unknown target: kNotFound; k == 0: kInvalidParameter.
std::vector<Neighbor> neighbors(const CooccurrenceStore& store, std::string_view target,
                                const MeasureSpec& spec, std::size_t k, const ScoringOptions& options = {});

// Serialization. Numbers use format_real so output is byte-stable.

void write_score_tsv(const Score& score, std::ostream& out);
void write_score_json(const Score& score, std::string_view w1, std::string_view w2, std::ostream& out);

/// Header, one row per scored pair, `#skipped` rows, then `#spearman=` and `#pearson=`.
void write_report_tsv(const EvalReport& report, std::ostream& out);
void write_report_json(const EvalReport& report, std::ostream& out);

void write_neighbors_tsv(std::span<const Neighbor> list, std::ostream& out);
void write_neighbors_json(std::span<const Neighbor> list, std::string_view target, std::string_view measure,
                          std::ostream& out);

}  // namespace distsim
