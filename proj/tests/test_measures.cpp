// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include <cmath>
#include <set>

#include "distsim/catalog.hpp"
#include "distsim/error.hpp"
#include "distsim/measures.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace distsim;
using doctest::Approx;

namespace {

constexpr WordId X = 0, Y = 1, Z = 2;
const oracle::Dict kA{{X, 0.5}, {Y, 0.5}};
const oracle::Dict kB{{X, 0.5}, {Z, 0.5}};
const oracle::Dict kDisjoint{{5, 0.25}, {6, 0.75}};

ContextProfile cp(const oracle::Dict& d) { return oracle::make(d); }
ContextProfile pmi_profile(const oracle::Dict& d, NegativePmiPolicy policy = NegativePmiPolicy::kClampToZero) {
  return oracle::make(d, Semantics::kPmi, AssocParams{2.0, policy});
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::kInvalidInput;
}

MeasureSpec spec_for(MeasureId id) {
  MeasureSpec s;
  s.measure = id;
  return s;
}

}  // namespace

TEST_CASE("catalog metadata") {
  const auto all = catalog();
  CHECK(all.size() == 29);
  std::set<std::string_view> keys;
  for (const auto& m : all) {
    CHECK(keys.insert(m.key).second);
    CHECK(&info(m.id) == &m);
    CHECK(parse_measure(m.key) == m.id);
    CHECK((m.accepts & (m.native == Semantics::kRaw ? kAcceptsRaw
                        : m.native == Semantics::kPmi ? kAcceptsPmi
                                                      : kAcceptsCp)) != 0);
  }
  CHECK(parse_measure("dif") == MeasureId::kL1);
  CHECK(parse_measure("pcm_div") == MeasureId::kDiv);
  CHECK_FALSE(parse_measure("nope").has_value());
  CHECK(info(MeasureId::kKld).polarity == Polarity::kDistance);
  CHECK_FALSE(info(MeasureId::kKld).symmetric);
  CHECK(info(MeasureId::kJsd).symmetric);
  CHECK(info(MeasureId::kPdtAvg).polarity == Polarity::kRelatedness);
  CHECK(info(MeasureId::kCosine).polarity == Polarity::kRelatedness);
  CHECK(info(MeasureId::kHindle).keeps_negative_pmi);
  // Distances come first in the table.
  bool seen_relatedness = false;
  for (const auto& m : all) {
    if (m.polarity == Polarity::kRelatedness) seen_relatedness = true;
    if (seen_relatedness) CHECK(m.polarity == Polarity::kRelatedness);
  }
  const std::string table = catalog_table();
  CHECK(table.find("polarity") != std::string::npos);
  CHECK(table.find("symmetric") != std::string::npos);
  CHECK(catalog_json().find("\"measure\": \"kld_avg\"") != std::string::npos);
}

TEST_CASE("cosine examples") {
  CHECK(cosine(cp(kA), cp(kA)).value == 1.0);
  CHECK(cosine(cp(kA), cp(kDisjoint)).value == 0.0);
  CHECK(cosine(cp(kA), cp(kB)).value == Approx(0.5).epsilon(1e-15));
  CHECK(cosine(cp(kA), cp(kB)).direction == Polarity::kRelatedness);
  CHECK(kind_of([] { cosine(cp({}), cp(kA)); }) == ErrorKind::kUndefinedMeasure);
  CHECK(kind_of([] { cosine(cp(kA), pmi_profile(kA)); }) == ErrorKind::kInvalidSpec);
}

TEST_CASE("l_norm examples") {
  CHECK(l_norm(cp(kA), cp(kA), 1).value == 0.0);
  CHECK(l_norm(cp(kA), cp(kA), 2).value == 0.0);
  CHECK(l_norm(cp(kA), cp(kB), 1).value == Approx(1.0).epsilon(1e-15));
  CHECK(l_norm(cp(kA), cp(kB), 2).value == Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(l_norm(cp(kA), cp(kDisjoint), 1).value == Approx(2.0).epsilon(1e-15));
  CHECK(l_norm(cp(kA), cp(kB), 1).direction == Polarity::kDistance);
  CHECK_THROWS_AS(l_norm(cp(kA), cp(kB), 3), Error);
}

TEST_CASE("crisp overlap examples") {
  CHECK(crisp_overlap(cp(kA), cp(kA), OverlapKind::kJaccard).value == 1.0);
  CHECK(crisp_overlap(cp(kA), cp(kA), OverlapKind::kDice).value == 1.0);
  CHECK(crisp_overlap(cp(kA), cp(kB), OverlapKind::kJaccard).value == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(crisp_overlap(cp(kA), cp(kB), OverlapKind::kDice).value == 0.5);
  CHECK(crisp_overlap(cp(kA), cp(kDisjoint), OverlapKind::kJaccard).value == 0.0);
  CHECK(crisp_overlap(cp(kA), cp(kDisjoint), OverlapKind::kDice).value == 0.0);
  CHECK(kind_of([] { crisp_overlap(cp({}), cp({}), OverlapKind::kDice); }) == ErrorKind::kUndefinedMeasure);
}

TEST_CASE("fuzzy overlap examples") {
  CHECK(fuzzy_overlap(cp(kA), cp(kA), OverlapKind::kJaccard).value == 1.0);
  CHECK(fuzzy_overlap(cp(kA), cp(kA), OverlapKind::kDice).value == 1.0);
  CHECK(fuzzy_overlap(cp(kA), cp(kB), OverlapKind::kJaccard).value == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(fuzzy_overlap(cp(kA), cp(kB), OverlapKind::kDice).value == Approx(0.5).epsilon(1e-15));
  CHECK(fuzzy_overlap(cp(kA), cp(kDisjoint), OverlapKind::kJaccard).value == 0.0);
  CHECK(fuzzy_overlap(cp(kA), cp(kDisjoint), OverlapKind::kDice).value == 0.0);
  CHECK(kind_of([] { fuzzy_overlap(cp({}), cp({}), OverlapKind::kJaccard); }) == ErrorKind::kUndefinedMeasure);
}

TEST_CASE("hindle piecewise cases") {
  const auto keep = NegativePmiPolicy::kKeep;
  CHECK(hindle(pmi_profile({{X, 2}}, keep), pmi_profile({{X, 3}}, keep)).value == 2.0);
  CHECK(hindle(pmi_profile({{X, -1}}, keep), pmi_profile({{X, -2}}, keep)).value == 1.0);
  CHECK(hindle(pmi_profile({{X, 2}}, keep), pmi_profile({{X, -1}}, keep)).value == 0.0);
  CHECK(hindle(pmi_profile({{X, 2}, {Y, -1}, {Z, 4}}, keep), pmi_profile({{X, 3}, {Y, -2}}, keep)).value == 3.0);
  CHECK(kind_of([] { hindle(cp(kA), cp(kB)); }) == ErrorKind::kInvalidSpec);
}

TEST_CASE("lin and saif examples") {
  const oracle::Dict t1{{0, 2}, {1, 1}}, t2{{0, 3}, {2, 1}};
  CHECK(lin(pmi_profile(t1), pmi_profile(t1)).value == 1.0);
  CHECK(lin(pmi_profile(t1), pmi_profile(t2)).value == Approx(5.0 / 7.0).epsilon(1e-15));
  CHECK(lin(pmi_profile(t1), pmi_profile({{7, 1}})).value == 0.0);
  CHECK(saif(pmi_profile(t1), pmi_profile(t1)).value == 1.0);
  CHECK(saif(pmi_profile(t1), pmi_profile(t2)).value == Approx(4.0 / 7.0).epsilon(1e-15));
  CHECK(saif(pmi_profile(t1), pmi_profile({{7, 1}})).value == 0.0);
  // Lin^CP.
  CHECK(lin(cp(kA), cp(kB)).value == Approx(0.5).epsilon(1e-15));
  CHECK(kind_of([] { lin(pmi_profile({{X, 0}}), pmi_profile({{X, 0}})); }) == ErrorKind::kUndefinedMeasure);
  // Clamped zeros are not in T(w).
  CHECK(lin(pmi_profile({{X, 0}, {Y, 1}}), pmi_profile({{X, 0}, {Z, 1}})).value == 0.0);
}

TEST_CASE("kld family examples") {
  for (auto mode : {KldMode::kStandard, KldMode::kCommon, KldMode::kAbs, KldMode::kAbsUnweighted, KldMode::kAvgWt,
                    KldMode::kMaxWt}) {
    CHECK(kld(cp(kA), cp(kA), mode).value == 0.0);
  }
  CHECK(kind_of([] { kld(cp(kA), cp(kB), KldMode::kStandard); }) == ErrorKind::kZeroDenominator);
  CHECK(kind_of([] { kld(cp(kA), cp(kB), KldMode::kAbs); }) == ErrorKind::kZeroDenominator);
  CHECK(kind_of([] { kld(cp(kA), cp(kB), KldMode::kAbsUnweighted); }) == ErrorKind::kZeroDenominator);
  CHECK(kld(cp(kA), cp(kB), KldMode::kCommon).value == 0.0);
  CHECK(kind_of([] { kld(pmi_profile(kA), pmi_profile(kA), KldMode::kStandard); }) == ErrorKind::kInvalidSpec);

  SUBCASE("worked example with base-10 logs") {
    CHECK(std::fabs(kld(cp({{X, 0.91}}), cp({{X, 0.80}}), KldMode::kAbsUnweighted, 10).value - 0.056) < 5e-4);
    CHECK(std::fabs(kld(cp({{X, 0.60}}), cp({{X, 0.50}}), KldMode::kAbsUnweighted, 10).value - 0.079) < 5e-4);
  }
  SUBCASE("against the brute-force oracle") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
      const auto a = oracle::random_distribution(rng, 10, 1.0);
      const auto b = oracle::random_distribution(rng, 10, 1.0);
      CHECK(kld(cp(a), cp(b), KldMode::kStandard).value == Approx(oracle::kld(a, b, std::numbers::e)).epsilon(1e-12));
      CHECK(kld(cp(a), cp(b), KldMode::kStandard, 2).value == Approx(oracle::kld(a, b, 2)).epsilon(1e-12));
    }
  }
  SUBCASE("weighted modes by hand") {
    const oracle::Dict p{{X, 0.25}, {Y, 0.75}}, q{{X, 0.5}, {Y, 0.5}};
    const double lx = std::log(0.25 / 0.5), ly = std::log(0.75 / 0.5);
    CHECK(kld(cp(p), cp(q), KldMode::kAbs).value == Approx(0.25 * std::fabs(lx) + 0.75 * std::fabs(ly)));
    CHECK(kld(cp(p), cp(q), KldMode::kAvgWt).value ==
          Approx(0.5 * (0.25 + 0.5) * std::fabs(lx) + 0.5 * (0.75 + 0.5) * std::fabs(ly)));
    CHECK(kld(cp(p), cp(q), KldMode::kMaxWt).value ==
          Approx((0.5 * std::fabs(lx) + 0.75 * std::fabs(ly)) / (0.5 + 0.75)));
  }
}

TEST_CASE("asd examples") {
  const auto a = cp(kA), b = cp(kB);
  CHECK(asd(a, b, 0.0).value == 0.0);
  for (double alpha : {0.1, 0.5, 0.99, 1.0}) CHECK(asd(a, a, alpha).value == 0.0);
  CHECK(asd(a, b, 0.99).value == Approx(oracle::asd(kA, kB, 0.99, std::numbers::e)).epsilon(1e-14));
  // x term vanishes; y term is 0.5 ln(0.5 / (0.01 * 0.5)).
  CHECK(asd(a, b, 0.99).value == Approx(0.5 * std::log(1.0 / 0.01)).epsilon(1e-14));
  CHECK(kind_of([&] { asd(a, b, 1.0); }) == ErrorKind::kZeroDenominator);
  CHECK_THROWS_AS(asd(a, b, 1.5), Error);
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const auto p = oracle::random_distribution(rng, 12);
    const auto q = oracle::random_distribution(rng, 12);
    const double v = asd(cp(p), cp(q), 0.99).value;
    CHECK(std::isfinite(v));
    CHECK(v == Approx(oracle::asd(p, q, 0.99, std::numbers::e)).epsilon(1e-12));
  }
}

TEST_CASE("jsd examples") {
  CHECK(jsd(cp(kA), cp(kA), false).value == 0.0);
  CHECK(jsd(cp(kA), cp(kB), false).value == Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(jsd(cp(kA), cp(kB), true).value == Approx(std::log(2.0)).epsilon(1e-15));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto p = oracle::random_distribution(rng, 12);
    const auto q = oracle::random_distribution(rng, 12);
    const double v = jsd(cp(p), cp(q), false).value;
    CHECK(v == jsd(cp(q), cp(p), false).value);
    CHECK(jsd(cp(p), cp(q), true).value == jsd(cp(q), cp(p), true).value);
    CHECK(v >= 0.0);
    CHECK(v == Approx(oracle::jsd(p, q, std::numbers::e)).epsilon(1e-12));
  }
}

TEST_CASE("pcm examples") {
  CHECK(std::fabs(pcm(cp({{X, 0.91}}), cp({{X, 0.80}}), PcmKind::kDif).value - 0.11) < 1e-12);
  CHECK(std::fabs(pcm(cp({{X, 0.60}}), cp({{X, 0.50}}), PcmKind::kDif).value - 0.10) < 1e-12);
  CHECK(std::fabs(pcm(cp({{X, 0.91}}), cp({{X, 0.80}}), PcmKind::kDiv, 10).value - 0.056) < 5e-4);
  CHECK(std::fabs(pcm(cp({{X, 0.60}}), cp({{X, 0.50}}), PcmKind::kDiv, 10).value - 0.079) < 5e-4);
  CHECK(pcm(cp(kA), cp(kA), PcmKind::kPdtAvg).value == 2.0);
  CHECK(pcm(cp(kA), cp(kB), PcmKind::kPdtAvgWt).value == 0.5);
  CHECK(pcm(cp(kA), cp(kB), PcmKind::kDif).direction == Polarity::kDistance);
  CHECK(pcm(cp(kA), cp(kB), PcmKind::kPdtAvg).direction == Polarity::kRelatedness);
  CHECK(kind_of([] { pcm(cp(kA), cp(kB), PcmKind::kDiv); }) == ErrorKind::kZeroDenominator);
  // Identical uniform profiles over n words score n: the average-product measure is unbounded.
  oracle::Dict uniform;
  for (WordId w = 0; w < 5; ++w) uniform[w] = 0.2;
  CHECK(pcm(cp(uniform), cp(uniform), PcmKind::kPdtAvg).value == Approx(5.0));
}

TEST_CASE("crm examples") {
  for (auto family : {CrmFamily::kType, CrmFamily::kToken}) {
    for (auto w : {CrmWeighting::kAdditive, CrmWeighting::kDifferenceWeighted}) {
      for (double g : {0.0, 0.3, 1.0}) {
        for (double b : {0.0, 0.5, 1.0}) {
          const double v = crm(cp(kA), cp(kA), family, w, g, b).value;
          if (family == CrmFamily::kType) CHECK(v == Approx(1.0));
          if (family == CrmFamily::kToken) CHECK(v == Approx(1.0));
        }
      }
    }
  }
  const auto pr = crm_precision_recall(cp(kA), cp(kB), CrmFamily::kToken, CrmWeighting::kDifferenceWeighted);
  CHECK(pr.precision == 0.5);
  CHECK(pr.recall == 0.5);
  for (double g : {0.0, 0.5, 1.0}) {
    for (double b : {0.0, 0.25, 1.0}) {
      CHECK(crm(cp(kA), cp(kB), CrmFamily::kToken, CrmWeighting::kDifferenceWeighted, g, b).value == Approx(0.5));
    }
  }
  // Type/additive on {x,y} vs {x,y,z}: P = 2/2, R = 2/3.
  const auto pr_type = crm_precision_recall(cp(kA), cp({{X, 0.2}, {Y, 0.3}, {Z, 0.5}}), CrmFamily::kType,
                                            CrmWeighting::kAdditive);
  CHECK(pr_type.precision == 1.0);
  CHECK(pr_type.recall == Approx(2.0 / 3.0));
  // F1 of disjoint profiles is 0, not NaN.
  CHECK(crm(cp(kA), cp(kDisjoint), CrmFamily::kToken, CrmWeighting::kAdditive, 1.0, 0.5).value == 0.0);
  CHECK(kind_of([] { crm(cp({}), cp(kA), CrmFamily::kType, CrmWeighting::kAdditive, 0.5, 0.5); }) ==
        ErrorKind::kUndefinedMeasure);
  CHECK(kind_of([] { crm(cp(kA), cp(kB), CrmFamily::kMi, CrmWeighting::kAdditive, 0.5, 0.5); }) ==
        ErrorKind::kInvalidSpec);
  CHECK_THROWS_AS(crm(cp(kA), cp(kB), CrmFamily::kType, CrmWeighting::kAdditive, 1.5, 0.5), Error);

  SUBCASE("MI, difference-weighted, gamma 1 equals Dice on PMI profiles") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 300; ++i) {
      const auto p = pmi_profile(oracle::random_weights(rng, 15));
      const auto q = pmi_profile(oracle::random_weights(rng, 15));
      const double a = crm(p, q, CrmFamily::kMi, CrmWeighting::kDifferenceWeighted, 1.0, rng() % 2 ? 0.2 : 0.8).value;
      CHECK(std::fabs(a - fuzzy_overlap(p, q, OverlapKind::kDice).value) < 1e-12);
    }
  }
  SUBCASE("asymmetric unless beta is 0.5 or gamma is 1") {
    const auto p = cp({{X, 0.9}, {Y, 0.1}}), q = cp({{X, 0.2}, {Z, 0.8}});
    const auto f = [&](const ContextProfile& a, const ContextProfile& b, double g, double be) {
      return crm(a, b, CrmFamily::kToken, CrmWeighting::kAdditive, g, be);
    };
    CHECK(f(p, q, 0.0, 0.2).value != Approx(f(q, p, 0.0, 0.2).value));
    CHECK_FALSE(f(p, q, 0.0, 0.2).symmetric);
    CHECK(f(p, q, 0.3, 0.5).value == Approx(f(q, p, 0.3, 0.5).value));
    CHECK(f(p, q, 1.0, 0.1).value == Approx(f(q, p, 1.0, 0.1).value));
    CHECK(f(p, q, 0.3, 0.5).symmetric);
  }
}

TEST_CASE("symmetrize") {
  auto kld_std = [](const ContextProfile& a, const ContextProfile& b) { return kld(a, b, KldMode::kStandard); };
  auto cos = [](const ContextProfile& a, const ContextProfile& b) { return cosine(a, b); };
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto p = oracle::random_distribution(rng, 8, 1.0);
    const auto q = oracle::random_distribution(rng, 8, 1.0);
    const auto mx = symmetrize(kld_std, cp(p), cp(q), SymmetrizeMode::kMax);
    const auto av = symmetrize(kld_std, cp(p), cp(q), SymmetrizeMode::kAvg);
    CHECK(mx.value >= av.value);
    CHECK(mx.value == symmetrize(kld_std, cp(q), cp(p), SymmetrizeMode::kMax).value);
    CHECK(av.value == symmetrize(kld_std, cp(q), cp(p), SymmetrizeMode::kAvg).value);
    CHECK(av.value == Approx(oracle::kld_avg_closed_form(p, q)).epsilon(1e-12));
    CHECK(mx.symmetric);
    CHECK(mx.measure == "kld_max");
    CHECK(av.measure == "kld_avg");
    CHECK(symmetrize(cos, cp(p), cp(q), SymmetrizeMode::kMax).value == cosine(cp(p), cp(q)).value);
    CHECK(symmetrize(cos, cp(p), cp(q), SymmetrizeMode::kAvg).value == cosine(cp(p), cp(q)).value);
  }
  CHECK(kind_of([&] { symmetrize(kld_std, cp(kA), cp(kB), SymmetrizeMode::kAvg); }) == ErrorKind::kZeroDenominator);
}

TEST_CASE("measure spec validation and dispatch") {
  MeasureSpec s;
  CHECK_NOTHROW(s.validate());
  s.alpha = 0.0;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::kInvalidSpec);
  s = {};
  s.gamma = 1.1;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::kInvalidSpec);
  s = {};
  s.beta = -0.1;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::kInvalidSpec);
  s = {};
  s.log_base = 1.0;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::kInvalidSpec);
  s = spec_for(MeasureId::kHindle);
  s.association = Semantics::kConditionalProbability;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::kInvalidSpec);
  s = spec_for(MeasureId::kKld);
  s.association = Semantics::kPmi;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::kInvalidSpec);

  CHECK(profile_request(spec_for(MeasureId::kHindle)).assoc.negative_pmi_policy == NegativePmiPolicy::kKeep);
  CHECK(profile_request(spec_for(MeasureId::kHindle)).semantics == Semantics::kPmi);
  CHECK(profile_request(spec_for(MeasureId::kCrmMiDw)).assoc.negative_pmi_policy == NegativePmiPolicy::kClampToZero);
  CHECK(profile_request(spec_for(MeasureId::kKld)).semantics == Semantics::kConditionalProbability);
  CHECK(profile_request(spec_for(MeasureId::kJaccard)).semantics == Semantics::kRaw);

  // Every catalog entry dispatches to a score tagged with its own key and polarity.
  const auto p = cp({{X, 0.5}, {Y, 0.3}, {Z, 0.2}}), q = cp({{X, 0.2}, {Y, 0.4}, {Z, 0.4}});
  const auto pp = pmi_profile({{X, 1.5}, {Y, 0.5}, {Z, 2.0}}), pq = pmi_profile({{X, 1.0}, {Y, 2.5}, {Z, 0.25}});
  for (const auto& m : catalog()) {
    const auto spec = spec_for(m.id);
    const bool pmi_native = m.native == Semantics::kPmi;
    const Score s1 = evaluate(spec, pmi_native ? pp : p, pmi_native ? pq : q);
    CHECK(s1.measure == m.key);
    CHECK(s1.direction == m.polarity);
    CHECK(std::isfinite(s1.value));
  }
}

TEST_CASE("support mode and error-free mode restrict to the common support") {
  MeasureSpec s = spec_for(MeasureId::kKld);
  CHECK(kind_of([&] { evaluate(s, cp(kA), cp(kB)); }) == ErrorKind::kZeroDenominator);
  s.kld_mode = StrictMode::kErrorFree;
  CHECK(evaluate(s, cp(kA), cp(kB)).value == 0.0);
  MeasureSpec l1 = spec_for(MeasureId::kL1);
  CHECK(evaluate(l1, cp(kA), cp(kB)).value == Approx(1.0));
  l1.support = SupportMode::kIntersection;
  CHECK(evaluate(l1, cp(kA), cp(kB)).value == 0.0);
  // Error-free mode leaves non-division measures alone.
  MeasureSpec l1_free = spec_for(MeasureId::kL1);
  l1_free.kld_mode = StrictMode::kErrorFree;
  CHECK(evaluate(l1_free, cp(kA), cp(kB)).value == Approx(1.0));
}

TEST_CASE("range and symmetry properties on random CP profiles") {
  std::mt19937_64 rng(37);
  bool kld_asymmetric = false;
  for (int i = 0; i < 300; ++i) {
    const auto a = oracle::random_distribution(rng, 10);
    const auto b = oracle::random_distribution(rng, 10);
    const auto pa = cp(a), pb = cp(b);
    for (double v : {cosine(pa, pb).value, crisp_overlap(pa, pb, OverlapKind::kJaccard).value,
                     crisp_overlap(pa, pb, OverlapKind::kDice).value, fuzzy_overlap(pa, pb, OverlapKind::kJaccard).value,
                     fuzzy_overlap(pa, pb, OverlapKind::kDice).value, lin(pa, pb).value, saif(pa, pb).value,
                     pcm(pa, pb, PcmKind::kPdtAvgWt).value}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    CHECK(lin(pa, pa).value == 1.0);
    CHECK(saif(pa, pa).value == 1.0);
    const double l1v = l_norm(pa, pb, 1).value;
    CHECK(l1v >= 0.0);
    CHECK(l1v <= 2.0 + 1e-12);
    CHECK(l1v == Approx(oracle::l1(a, b)).epsilon(1e-12));
    CHECK(cosine(pa, pb).value == Approx(oracle::cosine(a, b)).epsilon(1e-12));
    CHECK(cosine(pa, pb).value == cosine(pb, pa).value);
    CHECK(l_norm(pa, pb, 2).value == l_norm(pb, pa, 2).value);
    CHECK(fuzzy_overlap(pa, pb, OverlapKind::kDice).value == Approx(oracle::sum_min(a, b)).epsilon(1e-12));
    // Token/dw CRM: P = R = sum of minima = 1 - L1 / 2.
    const auto pr = crm_precision_recall(pa, pb, CrmFamily::kToken, CrmWeighting::kDifferenceWeighted);
    CHECK(pr.precision == pr.recall);
    CHECK(pr.precision == Approx(1.0 - l1v / 2.0).epsilon(1e-12));

    const auto full_a = oracle::random_distribution(rng, 6, 1.0), full_b = oracle::random_distribution(rng, 6, 1.0);
    const double fwd = kld(cp(full_a), cp(full_b), KldMode::kStandard).value;
    const double bwd = kld(cp(full_b), cp(full_a), KldMode::kStandard).value;
    CHECK(fwd >= -1e-15);
    if (std::fabs(fwd - bwd) > 1e-6) kld_asymmetric = true;
    CHECK(asd(cp(full_a), cp(full_b), 1.0).value == fwd);
  }
  CHECK(kld_asymmetric);
}

TEST_CASE("saif equals Dice on positive PMI values") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_weights(rng, 12), b = oracle::random_weights(rng, 12);
    CHECK(std::fabs(saif(pmi_profile(a), pmi_profile(b)).value -
                    fuzzy_overlap(pmi_profile(a), pmi_profile(b), OverlapKind::kDice).value) < 1e-12);
  }
}

TEST_CASE("Jaccard and Dice induce the same ranking") {
  std::mt19937_64 rng(43);
  std::vector<double> cj, cd, fj, fd;
  for (int i = 0; i < 300; ++i) {
    const auto a = cp(oracle::random_distribution(rng, 15, 0.4)), b = cp(oracle::random_distribution(rng, 15, 0.4));
    cj.push_back(crisp_overlap(a, b, OverlapKind::kJaccard).value);
    cd.push_back(crisp_overlap(a, b, OverlapKind::kDice).value);
    fj.push_back(fuzzy_overlap(a, b, OverlapKind::kJaccard).value);
    fd.push_back(fuzzy_overlap(a, b, OverlapKind::kDice).value);
  }
  auto sign = [](double u, double v) { return (u > v) - (u < v); };
  for (std::size_t i = 0; i < cj.size(); ++i) {
    for (std::size_t j = i + 1; j < cj.size(); ++j) {
      CHECK(sign(cj[i], cj[j]) == sign(cd[i], cd[j]));
      CHECK(sign(fj[i], fj[j]) == sign(fd[i], fd[j]));
    }
  }
}

TEST_CASE("division PCM from PMI strengths equals division PCM from CP strengths") {
  std::mt19937_64 rng(47);
  int compared = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto store = oracle::random_store(rng, 12, 2, 150);
    MeasureSpec spec_cp = spec_for(MeasureId::kDiv);
    spec_cp.support = SupportMode::kIntersection;
    MeasureSpec spec_pmi = spec_cp;
    spec_pmi.association = Semantics::kPmi;
    spec_pmi.assoc.negative_pmi_policy = NegativePmiPolicy::kKeep;
    const auto& words = store.vocabulary().words();
    for (std::size_t i = 0; i + 1 < words.size(); i += 2) {
      const double a = evaluate(store, words[i], words[i + 1], spec_cp).value;
      const double b = evaluate(store, words[i], words[i + 1], spec_pmi).value;
      CHECK(std::fabs(a - b) < 1e-12);
      ++compared;
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("combine_relations averages hand-computed per-relation Lin scores") {
  const std::vector<TripleRow> rows{{"eat", "obj", "apple", 2}, {"eat", "obj", "bread", 1}, {"cook", "obj", "apple", 1},
                                    {"cook", "obj", "rice", 1},  {"eat", "subj", "man", 1},  {"cook", "subj", "man", 1},
                                    {"cook", "subj", "chef", 2}};
  const auto store = ingest_triples(rows);
  // obj: 5 pairs (T = 10); marginals eat 3, cook 2, apple 3, bread 1, rice 1.
  const double eat_apple = std::log2(2.0 * 10 / (3 * 3)), eat_bread = std::log2(1.0 * 10 / (3 * 1));
  const double cook_apple = std::log2(1.0 * 10 / (2 * 3)), cook_rice = std::log2(1.0 * 10 / (2 * 1));
  const double lin_obj = (eat_apple + cook_apple) / (eat_apple + eat_bread + cook_apple + cook_rice);
  // subj: 4 pairs (T = 8); marginals eat 1, cook 3, man 2, chef 2.
  const double eat_man = std::log2(1.0 * 8 / (1 * 2));
  const double cook_man = std::log2(1.0 * 8 / (3 * 2)), cook_chef = std::log2(2.0 * 8 / (3 * 2));
  const double lin_subj = (eat_man + cook_man) / (eat_man + cook_man + cook_chef);

  const MeasureSpec spec = spec_for(MeasureId::kLin);
  CHECK(evaluate(store, "eat", "cook", spec, {"obj"}).value == Approx(lin_obj).epsilon(1e-12));
  const Score avg = combine_relations(store, "eat", "cook", spec, {"obj", "subj"}, CombineMode::kAvg);
  const Score mx = combine_relations(store, "eat", "cook", spec, {"obj", "subj"}, CombineMode::kMax);
  CHECK(avg.value == Approx(0.5 * (lin_obj + lin_subj)).epsilon(1e-12));
  CHECK(mx.value == Approx(std::max(lin_obj, lin_subj)).epsilon(1e-12));
  CHECK(mx.value >= avg.value);
  CHECK(combine_relations(store, "eat", "cook", spec, {"obj"}, CombineMode::kAvg).value ==
        evaluate(store, "eat", "cook", spec, {"obj"}).value);
  // A relation where one word has no profile scores 0 but still counts in the mean.
  CHECK(combine_relations(merge(store, ingest_triples(std::vector<TripleRow>{{"x", "mod", "y", 1}})), "eat", "cook",
                          spec, {"obj", "subj", "mod"}, CombineMode::kAvg)
            .value == Approx((lin_obj + lin_subj) / 3.0).epsilon(1e-12));
  CHECK(kind_of([&] { combine_relations(store, "eat", "cook", spec_for(MeasureId::kL1), {"obj"}, CombineMode::kAvg); }) ==
        ErrorKind::kInvalidSpec);
  CHECK(kind_of([&] {
          combine_relations(merge(store, ingest_triples(std::vector<TripleRow>{{"x", "mod", "y", 1}})), "eat", "cook",
                            spec, {"mod"}, CombineMode::kAvg);
        }) == ErrorKind::kUndefinedMeasure);
}

TEST_CASE("store-level evaluate") {
  const auto store = build_windowed(std::vector<std::string>{"a b a"}, 1);
  CHECK(evaluate(store, "a", "a", spec_for(MeasureId::kCosine)).value == 1.0);
  CHECK(kind_of([&] { evaluate(store, "a", "zzz", spec_for(MeasureId::kCosine)); }) == ErrorKind::kNotFound);
}
