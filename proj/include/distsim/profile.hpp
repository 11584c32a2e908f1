// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "distsim/assoc.hpp"
#include "distsim/store.hpp"

namespace distsim {

/// What a profile's strengths mean.
enum class Semantics { kRaw, kConditionalProbability, kPmi };

std::string_view to_string(Semantics semantics);

struct FeatureKey {
  RelationId relation = 0;
  WordId word = 0;

  auto operator<=>(const FeatureKey&) const = default;
};

struct Feature {
  FeatureKey key;
  double strength = 0;
};

/// Sparse map from (relation, co-occurring word) to an association strength, sorted by key.
class ContextProfile {
 public:
  ContextProfile() = default;
  /// Sorts `features`. Duplicate keys and non-finite strengths throw kInvalidParameter.
  ContextProfile(Semantics semantics, std::vector<Feature> features, WordId target = 0,
                 AssocParams assoc = {});

  /// Features under relation 0, keyed by word id. Handy for hand-built profiles.
  static ContextProfile from_words(Semantics semantics,
                                   const std::vector<std::pair<WordId, double>>& strengths,
                                   AssocParams assoc = {});

  WordId target() const { return target_; }
  Semantics semantics() const { return semantics_; }
  /// Log base and negative-PMI policy the strengths were computed with (PMI only).
  const AssocParams& assoc() const { return assoc_; }

  std::span<const Feature> features() const { return features_; }
  std::size_t size() const { return features_.size(); }
  bool empty() const { return features_.empty(); }
  std::optional<double> find(FeatureKey key) const;
  double total() const;

 private:
  WordId target_ = 0;
  Semantics semantics_ = Semantics::kRaw;
  AssocParams assoc_;
  std::vector<Feature> features_;
};

/// Context profile of `target` over the filtered relations.
///
/// Support is every (relation, word) with a nonzero combined-direction count. Strengths:
///  - kRaw: the combined count c(t, r, w);
///  - kConditionalProbability: c(t, r, w) / M(t), M(t) the target's marginal summed over
///    the filter, so an unrestricted profile sums to 1;
///  - kPmi: log(c * T / (M(t) * m_r(w))) with T twice the filtered pair total and m_r(w)
///    the word's marginal under r. Negative values follow params.negative_pmi_policy
///    (clamped features stay in the support with strength 0).
///
/// Unknown target or relation names throw kNotFound.
ContextProfile profile(const CooccurrenceStore& store, std::string_view target,
                       const RelationFilter& relations, Semantics semantics,
                       const AssocParams& params = {});

}  // namespace distsim
