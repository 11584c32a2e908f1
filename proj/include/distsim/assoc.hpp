// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <string_view>

#include "distsim/store.hpp"

namespace distsim {

enum class NegativePmiPolicy { kClampToZero, kKeep };

struct AssocParams {
  double log_base = 2.0;
  NegativePmiPolicy negative_pmi_policy = NegativePmiPolicy::kClampToZero;

  /// Throws Error(kInvalidParameter) unless log_base > 1.
  void validate() const;
};

/// log of `x` in `base`, exact for the common bases 2, e and 10.
double log_in_base(double x, double base);

/// Count-level PMI: log(joint * total / (marginal_x * marginal_y)).
/// Zero marginals or total throw kUndefinedProbability. A zero joint is clamped to 0
/// under kClampToZero and throws kNegativeInfinity under kKeep.
double pmi_from_counts(double joint, double marginal_x, double marginal_y, double total,
                       const AssocParams& params);

/// min / (min + 1): in (0, 1) for min >= 1 and strictly increasing.
double pmi_correction_factor(double min_marginal);

// Word-level quantities over the filtered relations. Joint counts sum both directions;
// a word's marginal is the number of pair slots it fills, and the total is twice the
// number of pairs, so P(w|t) = joint(w,t) / marginal(t).

/// P(w | t). Throws kUndefinedProbability when t has no co-occurrences.
double conditional_probability(const CooccurrenceStore& store, std::string_view w, std::string_view t,
                               const RelationFilter& relations = {});

double pmi(const CooccurrenceStore& store, std::string_view x, std::string_view y,
           const RelationFilter& relations = {}, const AssocParams& params = {});

/// pmi * m / (m + 1) with m the smaller of the two marginals.
double corrected_pmi(const CooccurrenceStore& store, std::string_view x, std::string_view y,
                     const RelationFilter& relations = {}, const AssocParams& params = {});

/// Directed PMI: joint is the count of x before (or governing) y, x's probability uses its
/// head-side marginal and y's its dep-side marginal, the total is the number of pairs.
double association_ratio(const CooccurrenceStore& store, std::string_view x, std::string_view y,
                         const RelationFilter& relations = {}, const AssocParams& params = {});

}  // namespace distsim
