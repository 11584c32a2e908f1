// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include <cmath>
#include <sstream>

#include "distsim/catalog.hpp"
#include "distsim/error.hpp"
#include "distsim/eval.hpp"
#include "distsim/format.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace distsim;
using doctest::Approx;

namespace {

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

GoldStandard gold_of(std::vector<GoldPair> pairs) { return GoldStandard{std::move(pairs)}; }

using V = std::vector<double>;

}  // namespace

TEST_CASE("average ranks share ties") {
  CHECK(average_ranks(V{10, 20, 30}) == V{1, 2, 3});
  CHECK(average_ranks(V{3, 1, 2}) == V{3, 1, 2});
  CHECK(average_ranks(V{1, 2, 2, 3}) == V{1, 2.5, 2.5, 4});
  CHECK(average_ranks(V{5, 5, 5}) == V{2, 2, 2});
}

TEST_CASE("spearman examples and guards") {
  CHECK(spearman(V{1, 2, 3, 4}, V{10, 20, 30, 40}) == Approx(1.0));
  CHECK(spearman(V{1, 2, 3, 4}, V{4, 3, 2, 1}) == Approx(-1.0));
  CHECK(spearman(V{1, 2, 3, 4}, V{2, 1, 3, 4}) == Approx(1.0 - 6.0 * 2 / (4 * 15)).epsilon(1e-12));
  CHECK(kind_of([] { spearman(V{1, 2}, V{1, 2, 3}); }) == ErrorKind::kInvalidInput);
  CHECK(kind_of([] { spearman(V{1}, V{1}); }) == ErrorKind::kInvalidInput);
  CHECK(kind_of([] { spearman(V{1, 1, 1}, V{1, 2, 3}); }) == ErrorKind::kUndefinedCorrelation);
}

TEST_CASE("spearman is invariant under strictly monotone transforms") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    V xs, ys;
    for (int i = 0; i < 20; ++i) {
      xs.push_back(u(rng));
      ys.push_back(u(rng));
    }
    const double base = spearman(xs, ys);
    V tx, ty;
    for (double x : xs) tx.push_back(std::exp(x) + 3);
    for (double y : ys) ty.push_back(std::log(y) * 7 - 1);
    CHECK(spearman(tx, ty) == Approx(base).epsilon(1e-12));
    CHECK(base >= -1.0);
    CHECK(base <= 1.0);
  }
}

TEST_CASE("pearson examples and guards") {
  CHECK(pearson(V{1, 2, 3}, V{1, 2, 3}) == Approx(1.0));
  CHECK(pearson(V{1, 2, 3}, V{-1, -2, -3}) == Approx(-1.0));
  // Direct formula: dx = (-1, 0, 1), dy = (-4/3, -1/3, 5/3), sxy = 3, sxx = 2, syy = 42/9.
  CHECK(pearson(V{1, 2, 3}, V{1, 2, 4}) == Approx(3.0 / std::sqrt(2.0 * 42.0 / 9.0)).epsilon(1e-12));
  CHECK(kind_of([] { pearson(V{1, 2}, V{1}); }) == ErrorKind::kInvalidInput);
  CHECK(kind_of([] { pearson(V{2, 2}, V{1, 3}); }) == ErrorKind::kUndefinedCorrelation);
}

TEST_CASE("rank concordance") {
  CHECK(rank_concordance(V{1, 3, 2}, V{1, 3, 2}) == 1.0);
  CHECK(rank_concordance(V{1, 3, 2}, V{-1, -3, -2}) == 0.0);
  CHECK(rank_concordance(V{1, 2, 3}, V{1, 3, 2}) == Approx(2.0 / 3.0));
  CHECK(rank_concordance(V{1, 1}, V{1, 1}) == 1.0);
  CHECK(rank_concordance(V{1, 1}, V{1, 2}) == 0.0);
  CHECK(kind_of([] { rank_concordance(V{1, 2}, V{1}); }) == ErrorKind::kInvalidInput);

  std::mt19937_64 rng(59);
  V jac, dice;
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::make(oracle::random_distribution(rng, 12, 0.4));
    const auto b = oracle::make(oracle::random_distribution(rng, 12, 0.4));
    jac.push_back(fuzzy_overlap(a, b, OverlapKind::kJaccard).value);
    dice.push_back(fuzzy_overlap(a, b, OverlapKind::kDice).value);
  }
  CHECK(rank_concordance(jac, dice) == 1.0);
}

TEST_CASE("gold file parsing") {
  std::istringstream in("# comment\n\ncar\tauto\t3.9\r\ngem\tjewel\t3.84\n");
  const auto gold = read_gold(in);
  REQUIRE(gold.pairs.size() == 2);
  CHECK(gold.pairs[0].word1 == "car");
  CHECK(gold.pairs[1].rating == 3.84);

  std::istringstream dup("a\tb\t1\nb\ta\t2\n");
  CHECK(kind_of([&] { read_gold(dup); }) == ErrorKind::kInvalidInput);
  std::istringstream bad("a\tb\n");
  CHECK(kind_of([&] { read_gold(bad); }) == ErrorKind::kParse);
  std::istringstream nan_rating("a\tb\tx\n");
  CHECK(kind_of([&] { read_gold(nan_rating); }) == ErrorKind::kParse);
  CHECK(kind_of([] { gold_of({{"a", "b", std::nan("")}}).validate(); }) == ErrorKind::kInvalidInput);
  CHECK(kind_of([] { read_gold(std::filesystem::path("/nonexistent/gold.tsv")); }) == ErrorKind::kNotFound);
}

TEST_CASE("score_pairs") {
  const auto store = build_windowed(std::vector<std::string>{"a b a", "a c b", "c d"}, 1);
  SUBCASE("identical words under cosine") {
    const auto r = score_pairs(store, gold_of({{"a", "a", 4}}), spec_for(MeasureId::kCosine));
    REQUIRE(r.scored_pairs.size() == 1);
    CHECK(r.scored_pairs[0].score == 1.0);
    CHECK_FALSE(r.spearman.has_value());
  }
  SUBCASE("out-of-vocabulary word is skipped with a reason") {
    const auto r = score_pairs(store, gold_of({{"a", "b", 3}, {"a", "zebra", 1}, {"c", "d", 2}}),
                               spec_for(MeasureId::kCosine));
    CHECK(r.scored_pairs.size() == 2);
    REQUIRE(r.skipped.size() == 1);
    CHECK(r.skipped[0].word2 == "zebra");
    CHECK(r.skipped[0].reason.find("not-found") != std::string::npos);
  }
  SUBCASE("every pair skipped") {
    CHECK(kind_of([&] { score_pairs(store, gold_of({{"x", "y", 1}}), spec_for(MeasureId::kCosine)); }) ==
          ErrorKind::kEmptyReport);
  }
  SUBCASE("strict divergence errors are skipped, not fatal") {
    const auto r = score_pairs(store, gold_of({{"a", "b", 3}, {"a", "d", 1}, {"b", "b", 2}}), spec_for(MeasureId::kKld));
    CHECK(r.skipped.size() >= 1);
    for (const auto& s : r.skipped) CHECK_FALSE(s.reason.empty());
  }
}

TEST_CASE("score_pairs reproduces hand-computed Lin scores on a triple store") {
  const std::vector<TripleRow> rows{{"eat", "obj", "apple", 2}, {"eat", "obj", "bread", 1}, {"cook", "obj", "apple", 1},
                                    {"cook", "obj", "rice", 1},  {"buy", "obj", "bread", 3}, {"buy", "obj", "rice", 1}};
  const auto store = ingest_triples(rows);
  // 9 pairs, T = 18. Marginals: eat 3, cook 2, buy 4, apple 3, bread 4, rice 2.
  auto I = [](double c, double mt, double mw) { return std::log2(c * 18 / (mt * mw)); };
  const double e_apple = I(2, 3, 3), e_bread = I(1, 3, 4);
  const double c_apple = I(1, 2, 3), c_rice = I(1, 2, 2);
  const double b_bread = I(3, 4, 4), b_rice = I(1, 4, 2);
  auto pos = [](double v) { return std::max(v, 0.0); };
  auto lin = [&](std::vector<std::pair<double, double>> shared, double total) {
    double s = 0;
    for (auto [u, v] : shared) {
      if (u > 0 && v > 0) s += u + v;
    }
    return s / total;
  };
  const double eat_cook = lin({{e_apple, c_apple}}, pos(e_apple) + pos(e_bread) + pos(c_apple) + pos(c_rice));
  const double eat_buy = lin({{e_bread, b_bread}}, pos(e_apple) + pos(e_bread) + pos(b_bread) + pos(b_rice));
  const double cook_buy = lin({{c_rice, b_rice}}, pos(c_apple) + pos(c_rice) + pos(b_bread) + pos(b_rice));

  const auto r = score_pairs(store, gold_of({{"eat", "cook", 3}, {"eat", "buy", 2}, {"cook", "buy", 1}}),
                             spec_for(MeasureId::kLin));
  REQUIRE(r.scored_pairs.size() == 3);
  CHECK(r.scored_pairs[0].score == Approx(eat_cook).epsilon(1e-12));
  CHECK(r.scored_pairs[1].score == Approx(eat_buy).epsilon(1e-12));
  CHECK(r.scored_pairs[2].score == Approx(cook_buy).epsilon(1e-12));
  CHECK(r.measure == "lin");
}

TEST_CASE("distance measures are ranked in inverted order") {
  const auto store = build_windowed(std::vector<std::string>{"a b c a b", "b c d", "d e a", "c e b"}, 2);
  const auto gold = gold_of({{"a", "b", 4}, {"a", "c", 3}, {"a", "d", 2}, {"b", "e", 1}, {"c", "d", 0.5}});
  const auto l1 = score_pairs(store, gold, spec_for(MeasureId::kL1));
  REQUIRE(l1.scored_pairs.size() == 5);
  for (const auto& p : l1.scored_pairs) {
    for (const auto& q : l1.scored_pairs) {
      if (p.score < q.score) CHECK(p.rank < q.rank);
    }
  }
  V neg, ratings;
  for (const auto& p : l1.scored_pairs) {
    neg.push_back(-p.score);
    ratings.push_back(p.rating);
  }
  CHECK(*l1.spearman == Approx(spearman(neg, ratings)));

  // A symmetric distance and its symmetrized wrapper rank identically.
  MeasureSpec wrapped = spec_for(MeasureId::kL1);
  wrapped.symmetrize = SymmetrizeMode::kMax;
  const auto w = score_pairs(store, gold, wrapped);
  for (std::size_t i = 0; i < w.scored_pairs.size(); ++i) CHECK(w.scored_pairs[i].rank == l1.scored_pairs[i].rank);
  CHECK(w.measure == "l1_max");
}

TEST_CASE("neighbors") {
  SUBCASE("exactly one word shares context with the target") {
    // t and u share x; v only co-occurs with w.
    const auto store = build_windowed(std::vector<std::string>{"t x", "u x", "v w"}, 1);
    const auto n = neighbors(store, "t", spec_for(MeasureId::kCosine), 1);
    REQUIRE(n.size() == 1);
    CHECK(n[0].word == "u");
    CHECK(n[0].score == Approx(1.0));
  }
  SUBCASE("k larger than the vocabulary") {
    const auto store = build_windowed(std::vector<std::string>{"a b c d"}, 3);
    const auto n = neighbors(store, "a", spec_for(MeasureId::kCosine), 100);
    CHECK(n.size() == 3);
    for (const auto& e : n) CHECK(e.word != "a");
  }
  SUBCASE("ties break lexicographically") {
    const auto store = build_windowed(std::vector<std::string>{"t x", "q x", "p x"}, 1);
    const auto n = neighbors(store, "t", spec_for(MeasureId::kCosine), 2);
    REQUIRE(n.size() == 2);
    CHECK(n[0].word == "p");
    CHECK(n[1].word == "q");
    CHECK(n[0].score == n[1].score);
  }
  SUBCASE("distances list the smallest first") {
    const auto store = build_windowed(std::vector<std::string>{"a b c a b", "b c d", "d e a", "c e b"}, 2);
    const auto n = neighbors(store, "a", spec_for(MeasureId::kJsd), 10);
    for (std::size_t i = 1; i < n.size(); ++i) CHECK(n[i - 1].score <= n[i].score);
  }
  SUBCASE("errors") {
    const auto store = build_windowed(std::vector<std::string>{"a b"}, 1);
    CHECK(kind_of([&] { neighbors(store, "zzz", spec_for(MeasureId::kCosine), 3); }) == ErrorKind::kNotFound);
    CHECK(kind_of([&] { neighbors(store, "a", spec_for(MeasureId::kCosine), 0); }) == ErrorKind::kInvalidParameter);
  }
  SUBCASE("deterministic across runs and worker counts") {
    std::mt19937_64 rng(61);
    std::vector<std::string> docs;
    for (int i = 0; i < 200; ++i) docs.push_back(oracle::random_document(rng, 20, 60));
    const auto store = build_windowed(docs, 2);
    for (auto id : {MeasureId::kCosine, MeasureId::kJsd, MeasureId::kLin}) {
      ScoringOptions one;
      const auto base = neighbors(store, "w1", spec_for(id), 15, one);
      for (unsigned w : {1u, 2u, 4u, 7u}) {
        ScoringOptions opts;
        opts.workers = w;
        const auto again = neighbors(store, "w1", spec_for(id), 15, opts);
        REQUIRE(again.size() == base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
          CHECK(again[i].word == base[i].word);
          CHECK(again[i].score == base[i].score);
        }
      }
    }
  }
}

TEST_CASE("report serialization") {
  const auto store = build_windowed(std::vector<std::string>{"a b a", "a c b", "c d"}, 1);
  const auto r =
      score_pairs(store, gold_of({{"a", "b", 3}, {"a", "c", 2}, {"b", "zz", 1}, {"c", "d", 1}}), spec_for(MeasureId::kCosine));
  std::ostringstream tsv;
  write_report_tsv(r, tsv);
  const std::string text = tsv.str();
  CHECK(text.rfind("#measure=cosine\tpolarity=relatedness\n", 0) == 0);
  CHECK(text.find("#skipped\tb\tzz\t") != std::string::npos);
  const auto sp = text.find("#spearman=");
  const auto pe = text.find("#pearson=");
  REQUIRE(sp != std::string::npos);
  REQUIRE(pe != std::string::npos);
  CHECK(sp < pe);
  CHECK(text.substr(sp, text.find('\n', sp) - sp) == "#spearman=" + format_real(*r.spearman));
  CHECK(text.find('\n', pe) == text.size() - 1);

  std::ostringstream json;
  write_report_json(r, json);
  CHECK(json.str().find("\"skipped\"") != std::string::npos);
  CHECK(json.str().find("\"spearman\"") != std::string::npos);

  std::ostringstream again;
  write_report_tsv(score_pairs(store, gold_of({{"a", "b", 3}, {"a", "c", 2}, {"b", "zz", 1}, {"c", "d", 1}}),
                               spec_for(MeasureId::kCosine)),
                   again);
  CHECK(again.str() == text);
}

TEST_CASE("format_real round-trips") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(std::nan("")) == "nan");
  CHECK(format_real(-INFINITY) == "-inf");
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng);
    CHECK(std::stod(format_real(v)) == v);
  }
}
