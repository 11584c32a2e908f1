// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "distsim/assoc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "distsim/error.hpp"

namespace distsim {
namespace {

struct WordCounts {
  double joint = 0;
  double marginal_x = 0;
  double marginal_y = 0;
  double total = 0;
};

WordCounts combined_counts(const CooccurrenceStore& store, std::string_view x, std::string_view y,
                           const RelationFilter& relations) {
  const WordId xi = store.vocabulary().at(x);
  const WordId yi = store.vocabulary().at(y);
  WordCounts c;
  for (const RelationId r : store.resolve(relations)) {
    c.joint += static_cast<double>(store.pair_count(r, xi, yi) + store.pair_count(r, yi, xi));
    c.marginal_x += static_cast<double>(store.combined_marginal(r, xi));
    c.marginal_y += static_cast<double>(store.combined_marginal(r, yi));
    c.total += 2.0 * static_cast<double>(store.total_pairs(r));
  }
  return c;
}

}  // namespace

void AssocParams::validate() const {
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw Error(ErrorKind::kInvalidParameter, "log base must be a finite real > 1");
  }
}

double log_in_base(double x, double base) {
  if (base == 2.0) return std::log2(x);
  if (base == 10.0) return std::log10(x);
  if (base == std::numbers::e) return std::log(x);
  return std::log(x) / std::log(base);
}

double pmi_from_counts(double joint, double marginal_x, double marginal_y, double total,
                       const AssocParams& params) {
  params.validate();
  if (marginal_x <= 0 || marginal_y <= 0 || total <= 0) {
    throw Error(ErrorKind::kUndefinedProbability, "PMI undefined: zero marginal probability");
  }
  if (joint <= 0) {
    if (params.negative_pmi_policy == NegativePmiPolicy::kClampToZero) return 0.0;
    throw Error(ErrorKind::kNegativeInfinity, "PMI is -infinity: the pair never co-occurs");
  }
  const double value = log_in_base((joint * total) / (marginal_x * marginal_y), params.log_base);
  if (value < 0 && params.negative_pmi_policy == NegativePmiPolicy::kClampToZero) return 0.0;
  return value;
}

double pmi_correction_factor(double min_marginal) { return min_marginal / (min_marginal + 1.0); }

double conditional_probability(const CooccurrenceStore& store, std::string_view w, std::string_view t,
                               const RelationFilter& relations) {
  const WordCounts c = combined_counts(store, t, w, relations);
  if (c.marginal_x <= 0) {
    throw Error(ErrorKind::kUndefinedProbability,
                "P(.|" + std::string(t) + ") undefined: no co-occurrences under the filter");
  }
  return c.joint / c.marginal_x;
}

double pmi(const CooccurrenceStore& store, std::string_view x, std::string_view y,
           const RelationFilter& relations, const AssocParams& params) {
  const WordCounts c = combined_counts(store, x, y, relations);
  return pmi_from_counts(c.joint, c.marginal_x, c.marginal_y, c.total, params);
}

double corrected_pmi(const CooccurrenceStore& store, std::string_view x, std::string_view y,
                     const RelationFilter& relations, const AssocParams& params) {
  const WordCounts c = combined_counts(store, x, y, relations);
  const double value = pmi_from_counts(c.joint, c.marginal_x, c.marginal_y, c.total, params);
  return value * pmi_correction_factor(std::min(c.marginal_x, c.marginal_y));
}

double association_ratio(const CooccurrenceStore& store, std::string_view x, std::string_view y,
                         const RelationFilter& relations, const AssocParams& params) {
  const WordId xi = store.vocabulary().at(x);
  const WordId yi = store.vocabulary().at(y);
  double joint = 0, head_x = 0, dep_y = 0, total = 0;
  for (const RelationId r : store.resolve(relations)) {
    joint += static_cast<double>(store.pair_count(r, xi, yi));
    head_x += static_cast<double>(store.marginal(r, xi, Side::kHead));
    dep_y += static_cast<double>(store.marginal(r, yi, Side::kDep));
    total += static_cast<double>(store.total_pairs(r));
  }
  return pmi_from_counts(joint, head_x, dep_y, total, params);
}

}  // namespace distsim
