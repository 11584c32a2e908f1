// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "distsim/measures.hpp"

#include <algorithm>
#include <cmath>

#include "distsim/catalog.hpp"
#include "distsim/error.hpp"

namespace distsim {
namespace {

/// Walks the union of both supports in key order. Missing strengths are 0.
template <typename Fn>
void for_union(const ContextProfile& a, const ContextProfile& b, Fn&& fn) {
  const auto fa = a.features();
  const auto fb = b.features();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].key < fb[j].key)) {
      fn(fa[i].strength, 0.0, true, false);
      ++i;
    } else if (i == fa.size() || fb[j].key < fa[i].key) {
      fn(0.0, fb[j].strength, false, true);
      ++j;
    } else {
      fn(fa[i].strength, fb[j].strength, true, true);
      ++i;
      ++j;
    }
  }
}

template <typename Fn>
void for_common(const ContextProfile& a, const ContextProfile& b, Fn&& fn) {
  for_union(a, b, [&](double s1, double s2, bool in1, bool in2) {
    if (in1 && in2) fn(s1, s2);
  });
}

Score make_score(MeasureId id, double value) {
  const auto& m = info(id);
  return Score{value, m.polarity, std::string(m.key), m.symmetric};
}

void require_same(const ContextProfile& p1, const ContextProfile& p2, std::string_view measure) {
  if (p1.semantics() != p2.semantics()) {
    throw Error(ErrorKind::kInvalidSpec,
                std::string(measure) + ": profiles have different strength semantics");
  }
}

void require(const ContextProfile& p1, const ContextProfile& p2, Semantics semantics,
             std::string_view measure) {
  require_same(p1, p2, measure);
  if (p1.semantics() != semantics) {
    throw Error(ErrorKind::kInvalidSpec, std::string(measure) + " needs " +
                                             std::string(to_string(semantics)) + " profiles, got " +
                                             std::string(to_string(p1.semantics())));
  }
}

[[noreturn]] void undefined(std::string_view measure, std::string_view why) {
  throw Error(ErrorKind::kUndefinedMeasure, std::string(measure) + " undefined: " + std::string(why));
}

[[noreturn]] void zero_denominator(std::string_view measure) {
  throw Error(ErrorKind::kZeroDenominator,
              std::string(measure) +
                  ": zero probability in a denominator; use asd, jsd or kld_com (or the error-free mode)");
}

/// log(s1 / s2) with both strictly positive.
double log_ratio(double s1, double s2, double base) { return log_in_base(s1 / s2, base); }

std::pair<ContextProfile, ContextProfile> restrict_to_common(const ContextProfile& p1,
                                                             const ContextProfile& p2) {
  std::vector<Feature> f1, f2;
  const auto a = p1.features();
  const auto b = p2.features();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].key < b[j].key) {
      ++i;
    } else if (b[j].key < a[i].key) {
      ++j;
    } else {
      f1.push_back(a[i++]);
      f2.push_back(b[j++]);
    }
  }
  return {ContextProfile(p1.semantics(), std::move(f1), p1.target(), p1.assoc()),
          ContextProfile(p2.semantics(), std::move(f2), p2.target(), p2.assoc())};
}

void check_unit_interval(double v, std::string_view name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorKind::kInvalidSpec, std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

std::string_view to_string(Polarity polarity) {
  return polarity == Polarity::kDistance ? "distance" : "relatedness";
}

// ---------------------------------------------------------------------------
// Spatial metrics

Score cosine(const ContextProfile& p1, const ContextProfile& p2) {
  require_same(p1, p2, "cosine");
  if (p1.empty() || p2.empty()) undefined("cosine", "empty profile");
  double dot = 0, n1 = 0, n2 = 0;
  for (const auto& f : p1.features()) n1 += f.strength * f.strength;
  for (const auto& f : p2.features()) n2 += f.strength * f.strength;
  for_common(p1, p2, [&](double s1, double s2) { dot += s1 * s2; });
  if (n1 == 0 || n2 == 0) undefined("cosine", "zero-norm profile");
  // sqrt of the product (not product of sqrts) so a profile against itself gives exactly 1.
  const double value = std::clamp(dot / std::sqrt(n1 * n2), -1.0, 1.0);
  return make_score(MeasureId::kCosine, value);
}

Score l_norm(const ContextProfile& p1, const ContextProfile& p2, int order) {
  require_same(p1, p2, "l_norm");
  if (order != 1 && order != 2) throw Error(ErrorKind::kInvalidParameter, "l_norm order must be 1 or 2");
  double sum = 0;
  for_union(p1, p2, [&](double s1, double s2, bool, bool) {
    const double d = s1 - s2;
    sum += order == 1 ? std::abs(d) : d * d;
  });
  if (p1.semantics() == Semantics::kConditionalProbability) {
    // Distributions are at most 2 apart in L1 and sqrt(2) in L2; clamp rounding overshoot.
    sum = std::min(sum, 2.0);
  }
  return order == 1 ? make_score(MeasureId::kL1, sum) : make_score(MeasureId::kL2, std::sqrt(sum));
}

// ---------------------------------------------------------------------------
// Set operations

Score crisp_overlap(const ContextProfile& p1, const ContextProfile& p2, OverlapKind kind) {
  if (p1.empty() && p2.empty()) undefined("overlap", "both supports empty");
  std::size_t common = 0;
  for_common(p1, p2, [&](double, double) { ++common; });
  const std::size_t n1 = p1.size(), n2 = p2.size();
  if (kind == OverlapKind::kJaccard) {
    return make_score(MeasureId::kJaccard,
                      static_cast<double>(common) / static_cast<double>(n1 + n2 - common));
  }
  return make_score(MeasureId::kDice, static_cast<double>(2 * common) / static_cast<double>(n1 + n2));
}

Score fuzzy_overlap(const ContextProfile& p1, const ContextProfile& p2, OverlapKind kind) {
  require_same(p1, p2, "fuzzy overlap");
  double sum_min = 0, sum_max = 0;
  for_union(p1, p2, [&](double s1, double s2, bool, bool) {
    sum_min += std::min(s1, s2);
    sum_max += std::max(s1, s2);
  });
  if (kind == OverlapKind::kJaccard) {
    if (sum_max == 0) undefined("jaccard_fuzzy", "zero denominator");
    return make_score(MeasureId::kJaccardFuzzy, sum_min / sum_max);
  }
  const double denom = p1.total() + p2.total();
  if (denom == 0) undefined("dice_fuzzy", "zero denominator");
  return make_score(MeasureId::kDiceFuzzy, 2.0 * sum_min / denom);
}

// ---------------------------------------------------------------------------
// Mutual information based

Score hindle(const ContextProfile& p1, const ContextProfile& p2) {
  require(p1, p2, Semantics::kPmi, "hindle");
  double sum = 0;
  for_common(p1, p2, [&](double i1, double i2) {
    if (i1 > 0 && i2 > 0) {
      sum += std::min(i1, i2);
    } else if (i1 < 0 && i2 < 0) {
      sum += std::abs(std::max(i1, i2));
    }
  });
  return make_score(MeasureId::kHindle, sum);
}

namespace {

struct PositiveMass {
  double common_sum = 0;
  double common_min = 0;
  double denominator = 0;
};

PositiveMass positive_mass(const ContextProfile& p1, const ContextProfile& p2, std::string_view measure) {
  require_same(p1, p2, measure);
  if (p1.semantics() == Semantics::kRaw) {
    throw Error(ErrorKind::kInvalidSpec, std::string(measure) + " needs cp or pmi profiles");
  }
  PositiveMass m;
  double exclusive = 0;
  for_union(p1, p2, [&](double s1, double s2, bool, bool) {
    if (s1 > 0 && s2 > 0) {
      m.common_sum += s1 + s2;
      m.common_min += std::min(s1, s2);
    } else {
      exclusive += std::max(0.0, s1) + std::max(0.0, s2);
    }
  });
  // Common mass plus the rest keeps the ratios at or below 1 under rounding.
  m.denominator = m.common_sum + exclusive;
  if (m.denominator == 0) undefined(measure, "no positive strengths");
  return m;
}

}  // namespace

Score lin(const ContextProfile& p1, const ContextProfile& p2) {
  const auto m = positive_mass(p1, p2, "lin");
  return make_score(MeasureId::kLin, m.common_sum / m.denominator);
}

Score saif(const ContextProfile& p1, const ContextProfile& p2) {
  const auto m = positive_mass(p1, p2, "saif");
  return make_score(MeasureId::kSaif, 2.0 * m.common_min / m.denominator);
}

// ---------------------------------------------------------------------------
// Relative entropy based

Score kld(const ContextProfile& p1, const ContextProfile& p2, KldMode mode, double log_base) {
  require(p1, p2, Semantics::kConditionalProbability, "kld");
  AssocParams{log_base}.validate();
  double sum = 0;
  switch (mode) {
    case KldMode::kStandard:
    case KldMode::kAbs:
      for_union(p1, p2, [&](double s1, double s2, bool, bool) {
        if (s1 == 0) return;
        if (s2 == 0) zero_denominator(mode == KldMode::kStandard ? "kld" : "kld_abs");
        const double l = log_ratio(s1, s2, log_base);
        sum += s1 * (mode == KldMode::kStandard ? l : std::abs(l));
      });
      return make_score(mode == KldMode::kStandard ? MeasureId::kKld : MeasureId::kKldAbs, sum);
    case KldMode::kCommon:
      for_common(p1, p2, [&](double s1, double s2) {
        if (s1 > 0 && s2 > 0) sum += s1 * log_ratio(s1, s2, log_base);
      });
      return make_score(MeasureId::kKldCom, sum);
    case KldMode::kAbsUnweighted:
      for_union(p1, p2, [&](double s1, double s2, bool, bool) {
        if (s1 == 0 || s2 == 0) zero_denominator("div");
        sum += std::abs(log_ratio(s1, s2, log_base));
      });
      return make_score(MeasureId::kDiv, sum);
    case KldMode::kAvgWt:
      for_union(p1, p2, [&](double s1, double s2, bool, bool) {
        if (s1 == 0 || s2 == 0) zero_denominator("saif_div_avgwt");
        sum += 0.5 * (s1 + s2) * std::abs(log_ratio(s1, s2, log_base));
      });
      return make_score(MeasureId::kSaifDivAvgWt, sum);
    case KldMode::kMaxWt: {
      double weight_total = 0;
      for_union(p1, p2, [&](double s1, double s2, bool, bool) {
        if (s1 == 0 || s2 == 0) zero_denominator("saif_div_maxwt");
        weight_total += std::max(s1, s2);
        sum += std::max(s1, s2) * std::abs(log_ratio(s1, s2, log_base));
      });
      return make_score(MeasureId::kSaifDivMaxWt, weight_total == 0 ? 0.0 : sum / weight_total);
    }
  }
  throw Error(ErrorKind::kInvalidSpec, "unknown kld mode");
}

Score asd(const ContextProfile& p1, const ContextProfile& p2, double alpha, double log_base) {
  require(p1, p2, Semantics::kConditionalProbability, "asd");
  AssocParams{log_base}.validate();
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::kInvalidParameter, "alpha must lie in [0, 1]");
  double sum = 0;
  for_union(p1, p2, [&](double s1, double s2, bool, bool) {
    if (s1 == 0) return;
    const double mixed = alpha * s2 + (1.0 - alpha) * s1;
    if (mixed == 0) zero_denominator("asd");
    sum += s1 * log_ratio(s1, mixed, log_base);
  });
  return make_score(MeasureId::kAsd, sum);
}

Score jsd(const ContextProfile& p1, const ContextProfile& p2, bool abs_variant, double log_base) {
  require(p1, p2, Semantics::kConditionalProbability, "jsd");
  AssocParams{log_base}.validate();
  double sum = 0;
  for_union(p1, p2, [&](double s1, double s2, bool, bool) {
    const double mean = 0.5 * (s1 + s2);
    auto part = [&](double s) {
      if (s == 0) return 0.0;
      const double l = log_ratio(s, mean, log_base);
      return s * (abs_variant ? std::abs(l) : l);
    };
    // Each pointwise term is non-negative; the max only absorbs rounding.
    sum += std::max(0.0, part(s1) + part(s2));
  });
  return make_score(abs_variant ? MeasureId::kJsdAbs : MeasureId::kJsd, sum);
}

// ---------------------------------------------------------------------------
// Primary compositional measures

Score pcm(const ContextProfile& p1, const ContextProfile& p2, PcmKind kind, double log_base) {
  switch (kind) {
    case PcmKind::kDif:
      return l_norm(p1, p2, 1);
    case PcmKind::kDiv: {
      require_same(p1, p2, "div");
      if (p1.semantics() == Semantics::kConditionalProbability) {
        return kld(p1, p2, KldMode::kAbsUnweighted, log_base);
      }
      if (p1.semantics() != Semantics::kPmi) throw Error(ErrorKind::kInvalidSpec, "div needs cp or pmi profiles");
      if (p1.assoc().log_base != p2.assoc().log_base) {
        throw Error(ErrorKind::kInvalidSpec, "div: PMI profiles use different log bases");
      }
      AssocParams{log_base}.validate();
      // |log(P(w|w1)/P(w|w2))| = |I(w,w1) - I(w,w2)|, rescaled from the PMI base.
      const double rescale = 1.0 / log_in_base(log_base, p1.assoc().log_base);
      double sum = 0;
      for_union(p1, p2, [&](double i1, double i2, bool in1, bool in2) {
        if (!in1 || !in2) zero_denominator("div");
        sum += std::abs(i1 - i2);
      });
      return make_score(MeasureId::kDiv, sum * rescale);
    }
    case PcmKind::kPdtAvg:
    case PcmKind::kPdtAvgWt: {
      require(p1, p2, Semantics::kConditionalProbability, "pdt");
      const bool weighted = kind == PcmKind::kPdtAvgWt;
      double sum = 0;
      for_common(p1, p2, [&](double s1, double s2) {
        if (s1 == 0 || s2 == 0) return;
        const double mean = 0.5 * (s1 + s2);
        sum += (s1 * s2) / (weighted ? mean : mean * mean);
      });
      return make_score(weighted ? MeasureId::kPdtAvgWt : MeasureId::kPdtAvg, sum);
    }
  }
  throw Error(ErrorKind::kInvalidSpec, "unknown pcm kind");
}

// ---------------------------------------------------------------------------
// Co-occurrence retrieval models

PrecisionRecall crm_precision_recall(const ContextProfile& p1, const ContextProfile& p2,
                                     CrmFamily family, CrmWeighting weighting) {
  const bool dw = weighting == CrmWeighting::kDifferenceWeighted;
  if (p1.empty() || p2.empty()) undefined("crm", "empty profile");
  PrecisionRecall pr;
  switch (family) {
    case CrmFamily::kType: {
      if (dw) require(p1, p2, Semantics::kConditionalProbability, "crm_type_dw");
      double p_num = 0, r_num = 0;
      for_common(p1, p2, [&](double s1, double s2) {
        if (dw) {
          p_num += std::min(s1, s2) / s1;
          r_num += std::min(s1, s2) / s2;
        } else {
          p_num += 1;
          r_num += 1;
        }
      });
      pr.precision = p_num / static_cast<double>(p1.size());
      pr.recall = r_num / static_cast<double>(p2.size());
      break;
    }
    case CrmFamily::kToken:
      require(p1, p2, Semantics::kConditionalProbability, "crm_token");
      for_common(p1, p2, [&](double s1, double s2) {
        pr.precision += dw ? std::min(s1, s2) : s1;
        pr.recall += dw ? std::min(s2, s1) : s2;
      });
      break;
    case CrmFamily::kMi: {
      require(p1, p2, Semantics::kPmi, "crm_mi");
      const double d1 = p1.total(), d2 = p2.total();
      if (d1 == 0 || d2 == 0) undefined("crm_mi", "zero total PMI");
      double p_num = 0, r_num = 0;
      for_common(p1, p2, [&](double i1, double i2) {
        p_num += dw ? std::min(i1, i2) : i1;
        r_num += dw ? std::min(i1, i2) : i2;
      });
      pr.precision = p_num / d1;
      pr.recall = r_num / d2;
      break;
    }
  }
  return pr;
}

Score crm(const ContextProfile& p1, const ContextProfile& p2, CrmFamily family, CrmWeighting weighting,
          double gamma, double beta) {
  check_unit_interval(gamma, "gamma");
  check_unit_interval(beta, "beta");
  const auto [p, r] = crm_precision_recall(p1, p2, family, weighting);
  const double f1 = p + r > 0 ? 2.0 * p * r / (p + r) : 0.0;
  const double value = gamma * f1 + (1.0 - gamma) * (beta * p + (1.0 - beta) * r);

  const bool dw = weighting == CrmWeighting::kDifferenceWeighted;
  MeasureId id{};
  switch (family) {
    case CrmFamily::kType: id = dw ? MeasureId::kCrmTypeDw : MeasureId::kCrmTypeAdd; break;
    case CrmFamily::kToken: id = dw ? MeasureId::kCrmTokenDw : MeasureId::kCrmTokenAdd; break;
    case CrmFamily::kMi: id = dw ? MeasureId::kCrmMiDw : MeasureId::kCrmMiAdd; break;
  }
  Score s = make_score(id, value);
  s.symmetric = gamma == 1.0 || beta == 0.5;
  return s;
}

// ---------------------------------------------------------------------------
// Wrappers

Score symmetrize(const MeasureFn& m, const ContextProfile& p1, const ContextProfile& p2,
                 SymmetrizeMode mode) {
  if (mode == SymmetrizeMode::kNone) return m(p1, p2);
  Score forward = m(p1, p2);
  const Score backward = m(p2, p1);
  forward.value = mode == SymmetrizeMode::kMax ? std::max(forward.value, backward.value)
                                               : 0.5 * (forward.value + backward.value);
  forward.measure += mode == SymmetrizeMode::kMax ? "_max" : "_avg";
  forward.symmetric = true;
  return forward;
}

void MeasureSpec::validate() const {
  const auto& m = info(measure);
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorKind::kInvalidSpec, "alpha must lie in (0, 1]");
  check_unit_interval(gamma, "gamma");
  check_unit_interval(beta, "beta");
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw Error(ErrorKind::kInvalidSpec, "log base must be a finite real > 1");
  }
  if (!(assoc.log_base > 1.0) || !std::isfinite(assoc.log_base)) {
    throw Error(ErrorKind::kInvalidSpec, "PMI log base must be a finite real > 1");
  }
  if (association) {
    const unsigned bit = *association == Semantics::kRaw ? kAcceptsRaw
                         : *association == Semantics::kPmi ? kAcceptsPmi
                                                           : kAcceptsCp;
    if ((m.accepts & bit) == 0) {
      throw Error(ErrorKind::kInvalidSpec, std::string(m.key) + " cannot use " +
                                               std::string(to_string(*association)) + " strengths");
    }
  }
}

ProfileRequest profile_request(const MeasureSpec& spec) {
  const auto& m = info(spec.measure);
  ProfileRequest req;
  req.semantics = spec.association.value_or(m.native);
  req.assoc = spec.assoc;
  if (m.keeps_negative_pmi) {
    req.assoc.negative_pmi_policy = NegativePmiPolicy::kKeep;
  } else if (spec.measure == MeasureId::kCrmMiAdd || spec.measure == MeasureId::kCrmMiDw ||
             spec.measure == MeasureId::kLin || spec.measure == MeasureId::kSaif) {
    req.assoc.negative_pmi_policy = NegativePmiPolicy::kClampToZero;
  }
  return req;
}

namespace {

Score dispatch(const MeasureSpec& spec, const ContextProfile& a, const ContextProfile& b) {
  using enum MeasureId;
  const double base = spec.log_base;
  switch (spec.measure) {
    case kCosine: return cosine(a, b);
    case kL1: return l_norm(a, b, 1);
    case kL2: return l_norm(a, b, 2);
    case kJaccard: return crisp_overlap(a, b, OverlapKind::kJaccard);
    case kDice: return crisp_overlap(a, b, OverlapKind::kDice);
    case kJaccardFuzzy: return fuzzy_overlap(a, b, OverlapKind::kJaccard);
    case kDiceFuzzy: return fuzzy_overlap(a, b, OverlapKind::kDice);
    case kHindle: return hindle(a, b);
    case kLin: return lin(a, b);
    case kSaif: return saif(a, b);
    case kKld: return kld(a, b, KldMode::kStandard, base);
    case kKldCom: return kld(a, b, KldMode::kCommon, base);
    case kKldAbs: return kld(a, b, KldMode::kAbs, base);
    case kDiv: return pcm(a, b, PcmKind::kDiv, base);
    case kSaifDivAvgWt: return kld(a, b, KldMode::kAvgWt, base);
    case kSaifDivMaxWt: return kld(a, b, KldMode::kMaxWt, base);
    case kKldAvg:
    case kKldMax: {
      auto inner = [base](const ContextProfile& x, const ContextProfile& y) {
        return kld(x, y, KldMode::kStandard, base);
      };
      Score s = symmetrize(inner, a, b, spec.measure == kKldAvg ? SymmetrizeMode::kAvg : SymmetrizeMode::kMax);
      s.measure = std::string(info(spec.measure).key);
      return s;
    }
    case kAsd: return asd(a, b, spec.alpha, base);
    case kJsd: return jsd(a, b, false, base);
    case kJsdAbs: return jsd(a, b, true, base);
    case kPdtAvg: return pcm(a, b, PcmKind::kPdtAvg, base);
    case kPdtAvgWt: return pcm(a, b, PcmKind::kPdtAvgWt, base);
    case kCrmTypeAdd: return crm(a, b, CrmFamily::kType, CrmWeighting::kAdditive, spec.gamma, spec.beta);
    case kCrmTypeDw: return crm(a, b, CrmFamily::kType, CrmWeighting::kDifferenceWeighted, spec.gamma, spec.beta);
    case kCrmTokenAdd: return crm(a, b, CrmFamily::kToken, CrmWeighting::kAdditive, spec.gamma, spec.beta);
    case kCrmTokenDw:
      return crm(a, b, CrmFamily::kToken, CrmWeighting::kDifferenceWeighted, spec.gamma, spec.beta);
    case kCrmMiAdd: return crm(a, b, CrmFamily::kMi, CrmWeighting::kAdditive, spec.gamma, spec.beta);
    case kCrmMiDw: return crm(a, b, CrmFamily::kMi, CrmWeighting::kDifferenceWeighted, spec.gamma, spec.beta);
  }
  throw Error(ErrorKind::kInvalidSpec, "unknown measure");
}

}  // namespace

Score evaluate(const MeasureSpec& spec, const ContextProfile& p1, const ContextProfile& p2) {
  spec.validate();
  const bool restrict = spec.support == SupportMode::kIntersection ||
                        (spec.kld_mode == StrictMode::kErrorFree && info(spec.measure).strict_zero);
  auto run = [&](const ContextProfile& a, const ContextProfile& b) {
    if (!restrict) return dispatch(spec, a, b);
    const auto [ra, rb] = restrict_to_common(a, b);
    return dispatch(spec, ra, rb);
  };
  return symmetrize(run, p1, p2, spec.symmetrize);
}

Score evaluate(const CooccurrenceStore& store, std::string_view w1, std::string_view w2,
               const MeasureSpec& spec, const RelationFilter& relations) {
  spec.validate();
  const ProfileRequest req = profile_request(spec);
  const ContextProfile p1 = profile(store, w1, relations, req.semantics, req.assoc);
  const ContextProfile p2 = profile(store, w2, relations, req.semantics, req.assoc);
  for (const auto* p : {&p1, &p2}) {
    if (p->empty()) {
      throw Error(ErrorKind::kUndefinedProbability,
                  "'" + store.vocabulary().word(p->target()) + "' has no co-occurrences under the selected relations");
    }
  }
  return evaluate(spec, p1, p2);
}

Score combine_relations(const CooccurrenceStore& store, std::string_view w1, std::string_view w2,
                        const MeasureSpec& spec, const RelationFilter& relations, CombineMode mode) {
  spec.validate();
  if (relations.empty()) throw Error(ErrorKind::kInvalidParameter, "combine_relations needs >= 1 relation");
  if (info(spec.measure).polarity != Polarity::kRelatedness) {
    throw Error(ErrorKind::kInvalidSpec, "combine_relations needs a relatedness measure");
  }
  const ProfileRequest req = profile_request(spec);
  double sum = 0;
  double best = 0;
  bool any_defined = false;
  Score last;
  for (const auto& rel : relations) {
    const RelationFilter one{rel};
    const ContextProfile p1 = profile(store, w1, one, req.semantics, req.assoc);
    const ContextProfile p2 = profile(store, w2, one, req.semantics, req.assoc);
    double value = 0;
    if (!p1.empty() && !p2.empty()) {
      try {
        last = evaluate(spec, p1, p2);
        value = last.value;
        any_defined = true;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kUndefinedMeasure && e.kind() != ErrorKind::kZeroDenominator) throw;
      }
    }
    sum += value;
    best = std::max(best, value);
  }
  if (!any_defined) undefined(info(spec.measure).key, "no relation gives a defined score");
  const double value = mode == CombineMode::kAvg ? sum / static_cast<double>(relations.size()) : best;
  last.value = value;
  last.measure += mode == CombineMode::kAvg ? "_rel_avg" : "_rel_max";
  return last;
}

}  // namespace distsim
