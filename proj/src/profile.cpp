// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "distsim/profile.hpp"

#include <algorithm>
#include <cmath>

#include "distsim/error.hpp"

namespace distsim {

std::string_view to_string(Semantics semantics) {
  switch (semantics) {
    case Semantics::kRaw: return "raw";
    case Semantics::kConditionalProbability: return "cp";
    case Semantics::kPmi: return "pmi";
  }
  return "unknown";
}

ContextProfile::ContextProfile(Semantics semantics, std::vector<Feature> features, WordId target,
                               AssocParams assoc)
    : target_(target), semantics_(semantics), assoc_(assoc), features_(std::move(features)) {
  std::sort(features_.begin(), features_.end(),
            [](const Feature& a, const Feature& b) { return a.key < b.key; });
  for (std::size_t i = 0; i < features_.size(); ++i) {
    if (!std::isfinite(features_[i].strength)) {
      throw Error(ErrorKind::kInvalidParameter, "profile strengths must be finite");
    }
    if (i > 0 && features_[i - 1].key == features_[i].key) {
      throw Error(ErrorKind::kInvalidParameter, "duplicate feature in profile");
    }
  }
}

ContextProfile ContextProfile::from_words(Semantics semantics,
                                          const std::vector<std::pair<WordId, double>>& strengths,
                                          AssocParams assoc) {
  std::vector<Feature> features;
  features.reserve(strengths.size());
  for (const auto& [word, s] : strengths) features.push_back(Feature{FeatureKey{0, word}, s});
  return ContextProfile(semantics, std::move(features), 0, assoc);
}

std::optional<double> ContextProfile::find(FeatureKey key) const {
  auto it = std::lower_bound(features_.begin(), features_.end(), key,
                             [](const Feature& f, const FeatureKey& k) { return f.key < k; });
  if (it != features_.end() && it->key == key) return it->strength;
  return std::nullopt;
}

double ContextProfile::total() const {
  double sum = 0;
  for (const auto& f : features_) sum += f.strength;
  return sum;
}

ContextProfile profile(const CooccurrenceStore& store, std::string_view target,
                       const RelationFilter& relations, Semantics semantics,
                       const AssocParams& params) {
  params.validate();
  const WordId t = store.vocabulary().at(target);
  const std::vector<RelationId> ids = store.resolve(relations);
  std::vector<bool> selected(store.relations().size(), false);
  double target_marginal = 0;
  double total = 0;
  for (const RelationId r : ids) {
    selected[r] = true;
    target_marginal += static_cast<double>(store.combined_marginal(r, t));
    total += 2.0 * static_cast<double>(store.total_pairs(r));
  }

  std::vector<Feature> features;
  for (const Link& link : store.links(t)) {
    if (!selected[link.relation]) continue;
    const auto count = static_cast<double>(link.count);
    double strength = count;
    switch (semantics) {
      case Semantics::kRaw:
        break;
      case Semantics::kConditionalProbability:
        strength = count / target_marginal;
        break;
      case Semantics::kPmi:
        strength = pmi_from_counts(count, target_marginal,
                                   static_cast<double>(store.combined_marginal(link.relation, link.other)),
                                   total, params);
        break;
    }
    features.push_back(Feature{FeatureKey{link.relation, link.other}, strength});
  }
  return ContextProfile(semantics, std::move(features), t, params);
}

}  // namespace distsim
