// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "distsim/profile.hpp"

namespace distsim {

enum class Polarity { kDistance, kRelatedness };

std::string_view to_string(Polarity polarity);

enum class MeasureId {
  kCosine,
  kL1,
  kL2,
  kJaccard,
  kDice,
  kJaccardFuzzy,
  kDiceFuzzy,
  kHindle,
  kLin,
  kSaif,
  kKld,
  kKldCom,
  kKldAbs,
  kDiv,
  kSaifDivAvgWt,
  kSaifDivMaxWt,
  kKldAvg,
  kKldMax,
  kAsd,
  kJsd,
  kJsdAbs,
  kPdtAvg,
  kPdtAvgWt,
  kCrmTypeAdd,
  kCrmTypeDw,
  kCrmTokenAdd,
  kCrmTokenDw,
  kCrmMiAdd,
  kCrmMiDw,
};

/// A measure value. Polarity is reported as declared and never inverted.
struct Score {
  double value = 0;
  Polarity direction = Polarity::kRelatedness;
  std::string measure;
  bool symmetric = false;
};

enum class SupportMode { kUnion, kIntersection };
enum class OverlapKind { kJaccard, kDice };
enum class KldMode { kStandard, kCommon, kAbs, kAbsUnweighted, kAvgWt, kMaxWt };
enum class PcmKind { kDif, kDiv, kPdtAvg, kPdtAvgWt };
enum class CrmFamily { kType, kToken, kMi };
enum class CrmWeighting { kAdditive, kDifferenceWeighted };
enum class SymmetrizeMode { kNone, kMax, kAvg };
enum class CombineMode { kAvg, kMax };
/// kStrict raises zero-denominator errors in division-based measures; kErrorFree evaluates
/// those measures over the common support instead.
enum class StrictMode { kStrict, kErrorFree };

/// A measure plus every free parameter.
struct MeasureSpec {
  MeasureId measure = MeasureId::kCosine;
  /// Strength of association; unset selects the measure's native strength.
  std::optional<Semantics> association;
  /// Used when PMI profiles are built (log base 2 by default).
  AssocParams assoc;
  /// Base of the logarithm in divergences and division PCMs.
  double log_base = std::numbers::e;
  double alpha = 0.99;
  double gamma = 0.5;
  double beta = 0.5;
  SupportMode support = SupportMode::kUnion;
  StrictMode kld_mode = StrictMode::kStrict;
  SymmetrizeMode symmetrize = SymmetrizeMode::kNone;

  /// Throws Error(kInvalidSpec) on out-of-range parameters or an association the
  /// measure cannot consume.
  void validate() const;
};

// Measure kernels over two profiles. Missing features have strength 0; sums over the
// union of supports unless noted. Mismatched semantics throw kInvalidSpec.

Score cosine(const ContextProfile& p1, const ContextProfile& p2);
/// order 1 (Manhattan) or 2 (Euclidean).
Score l_norm(const ContextProfile& p1, const ContextProfile& p2, int order);
/// Set overlap of the supports only.
Score crisp_overlap(const ContextProfile& p1, const ContextProfile& p2, OverlapKind kind);
/// Pseudo-fuzzy overlap with strengths as membership degrees.
Score fuzzy_overlap(const ContextProfile& p1, const ContextProfile& p2, OverlapKind kind);
/// Requires PMI strengths; negative values are meaningful.
Score hindle(const ContextProfile& p1, const ContextProfile& p2);
/// Only strictly positive strengths take part (the T(w) sets).
Score lin(const ContextProfile& p1, const ContextProfile& p2);
Score saif(const ContextProfile& p1, const ContextProfile& p2);

/// KLD family over CP profiles. 0 * log(0 / x) is 0. A zero strength in p2 (or, for the
/// unweighted and symmetrically weighted modes, in either) where the term is needed throws
/// kZeroDenominator.
Score kld(const ContextProfile& p1, const ContextProfile& p2, KldMode mode,
          double log_base = std::numbers::e);
/// alpha in [0, 1]; alpha = 1 is plain KLD and inherits its zero-denominator error.
Score asd(const ContextProfile& p1, const ContextProfile& p2, double alpha,
          double log_base = std::numbers::e);
Score jsd(const ContextProfile& p1, const ContextProfile& p2, bool abs_variant,
          double log_base = std::numbers::e);
/// DIV also accepts PMI profiles, where it sums |I1 - I2| converted to `log_base`.
Score pcm(const ContextProfile& p1, const ContextProfile& p2, PcmKind kind,
          double log_base = std::numbers::e);

struct PrecisionRecall {
  double precision = 0;
  double recall = 0;
};

PrecisionRecall crm_precision_recall(const ContextProfile& p1, const ContextProfile& p2,
                                     CrmFamily family, CrmWeighting weighting);
/// gamma * F1(P, R) + (1 - gamma) * (beta * P + (1 - beta) * R), F1 = 0 when P + R = 0.
Score crm(const ContextProfile& p1, const ContextProfile& p2, CrmFamily family,
          CrmWeighting weighting, double gamma, double beta);

using MeasureFn = std::function<Score(const ContextProfile&, const ContextProfile&)>;

/// max or mean of m(p1, p2) and m(p2, p1). kNone evaluates m(p1, p2) unchanged.
Score symmetrize(const MeasureFn& m, const ContextProfile& p1, const ContextProfile& p2,
                 SymmetrizeMode mode);

/// Profile semantics and association parameters a spec needs.
struct ProfileRequest {
  Semantics semantics = Semantics::kConditionalProbability;
  AssocParams assoc;
};

ProfileRequest profile_request(const MeasureSpec& spec);

/// Full dispatch on prebuilt profiles: support restriction, strict mode and symmetrization.
Score evaluate(const MeasureSpec& spec, const ContextProfile& p1, const ContextProfile& p2);

/// Builds both profiles from the store and evaluates. A word without co-occurrences under
/// the filter throws kUndefinedProbability.
Score evaluate(const CooccurrenceStore& store, std::string_view w1, std::string_view w2,
               const MeasureSpec& spec, const RelationFilter& relations = {});

/// Evaluates the measure once per relation and takes the mean (over all requested relations)
/// or the maximum. Relations where a profile is empty or the measure is undefined score 0;
/// if every relation is undefined, throws kUndefinedMeasure.
Score combine_relations(const CooccurrenceStore& store, std::string_view w1, std::string_view w2,
                        const MeasureSpec& spec, const RelationFilter& relations, CombineMode mode);

}  // namespace distsim
