// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "distsim/catalog.hpp"

#include <array>
#include <sstream>

#include "json.hpp"

#include "distsim/error.hpp"

namespace distsim {
namespace {

using enum MeasureId;
constexpr auto D = Polarity::kDistance;
constexpr auto R = Polarity::kRelatedness;
constexpr auto CP = Semantics::kConditionalProbability;
constexpr auto PMI = Semantics::kPmi;
constexpr auto RAW = Semantics::kRaw;
constexpr unsigned kCpOrPmi = kAcceptsCp | kAcceptsPmi;

// clang-format off
constexpr std::array<MeasureInfo, 29> kCatalog{{
  // Distance measures.
  {kL1, "l1", "Dif or L1", D, true, true, "diff.", CP, kAcceptsAny, false, false, "",
   "sum_{w in C(w1) u C(w2)} |s1(w) - s2(w)|"},
  {kL2, "l2", "L2", D, true, true, "diff.", CP, kAcceptsAny, false, false, "",
   "sqrt(sum_{w in C(w1) u C(w2)} (s1(w) - s2(w))^2)"},
  {kKld, "kld", "KLD", D, false, true, "div.", CP, kAcceptsCp, false, true, "log_base",
   "sum_{w in C(w1) u C(w2)} P(w|w1) log(P(w|w1) / P(w|w2))"},
  {kKldCom, "kld_com", "KLD_Com", D, false, true, "div.", CP, kAcceptsCp, false, false, "log_base",
   "sum_{w in C(w1) n C(w2)} P(w|w1) log(P(w|w1) / P(w|w2))"},
  {kKldAbs, "kld_abs", "KLD^Abs", D, false, true, "div.", CP, kAcceptsCp, false, true, "log_base",
   "sum_{w in C(w1) u C(w2)} P(w|w1) |log(P(w|w1) / P(w|w2))|"},
  {kDiv, "div", "Div or KLD_Unw^Abs", D, true, true, "div.", CP, kCpOrPmi, false, true, "log_base",
   "sum_{w in C(w1) u C(w2)} |log(P(w|w1) / P(w|w2))|"},
  {kSaifDivAvgWt, "saif_div_avgwt", "Saif^Div_AvgWt", D, true, true, "div.", CP, kAcceptsCp, false, true,
   "log_base", "sum_{w in C(w1) u C(w2)} 1/2 (P(w|w1) + P(w|w2)) |log(P(w|w1) / P(w|w2))|"},
  {kSaifDivMaxWt, "saif_div_maxwt", "Saif^Div_MaxWt", D, true, true, "div.", CP, kAcceptsCp, false, true,
   "log_base",
   "sum_{w in C(w1) u C(w2)} max(P(w|w1), P(w|w2)) / sum_{w'} max(P(w'|w1), P(w'|w2)) * "
   "|log(P(w|w1) / P(w|w2))|"},
  {kKldAvg, "kld_avg", "KLD_Avg", D, true, true, "div.", CP, kAcceptsCp, false, true, "log_base",
   "1/2 sum_{w in C(w1) u C(w2)} (P(w|w1) - P(w|w2)) log(P(w|w1) / P(w|w2))"},
  {kKldMax, "kld_max", "KLD_Max", D, true, true, "div.", CP, kAcceptsCp, false, true, "log_base",
   "max(KLD(w1, w2), KLD(w2, w1))"},
  {kAsd, "asd", "ASD", D, false, true, "div.", CP, kAcceptsCp, false, false, "alpha,log_base",
   "sum_{w in C(w1) u C(w2)} P(w|w1) log(P(w|w1) / (alpha P(w|w2) + (1 - alpha) P(w|w1)))"},
  {kJsd, "jsd", "JSD", D, true, true, "div.", CP, kAcceptsCp, false, false, "log_base",
   "D(d1 || (d1 + d2)/2) + D(d2 || (d1 + d2)/2)"},
  {kJsdAbs, "jsd_abs", "JSD^Abs", D, true, true, "div.", CP, kAcceptsCp, false, false, "log_base",
   "D^Abs(d1 || (d1 + d2)/2) + D^Abs(d2 || (d1 + d2)/2)"},
  // Relatedness measures.
  {kPdtAvg, "pdt_avg", "Pdt^Avg", R, true, true, "pdt.", CP, kAcceptsCp, false, false, "",
   "sum_{w in C(w1) u C(w2)} P(w|w1) P(w|w2) / (1/2 (P(w|w1) + P(w|w2)))^2"},
  {kPdtAvgWt, "pdt_avgwt", "Pdt_AvgWt^Avg", R, true, true, "pdt.", CP, kAcceptsCp, false, false, "",
   "sum_{w in C(w1) u C(w2)} P(w|w1) P(w|w2) / (1/2 (P(w|w1) + P(w|w2)))"},
  {kCosine, "cosine", "Cos", R, true, false, "n.a.", CP, kAcceptsAny, false, false, "",
   "sum s1(w) s2(w) / (sqrt(sum_{C(w1)} s1^2) sqrt(sum_{C(w2)} s2^2))"},
  {kJaccard, "jaccard", "Jaccard", R, true, false, "n.a.", RAW, kAcceptsAny, false, false, "",
   "|W1 n W2| / |W1 u W2|"},
  {kDice, "dice", "Dice", R, true, false, "n.a.", RAW, kAcceptsAny, false, false, "",
   "2 |W1 n W2| / (|W1| + |W2|)"},
  {kJaccardFuzzy, "jaccard_fuzzy", "Jaccard^CP or Jaccard^MI", R, true, false, "n.a.", CP, kCpOrPmi, false,
   false, "", "sum_{w in C(w1) u C(w2)} min(s1, s2) / sum_{w in C(w1) u C(w2)} max(s1, s2)"},
  {kDiceFuzzy, "dice_fuzzy", "Dice^CP or Dice^MI", R, true, false, "n.a.", CP, kCpOrPmi, false, false, "",
   "2 sum_{w in C(w1) u C(w2)} min(s1, s2) / (sum_{C(w1)} s1 + sum_{C(w2)} s2)"},
  {kHindle, "hindle", "Hin_rel", R, true, false, "n.a.", PMI, kAcceptsPmi, true, false, "",
   "sum_{w in C(w1) u C(w2)} min(I1, I2) if both > 0; |max(I1, I2)| if both < 0; else 0"},
  {kLin, "lin", "Lin or Lin^CP", R, true, false, "n.a.", PMI, kCpOrPmi, false, false, "",
   "sum_{T(w1) n T(w2)} (s1 + s2) / (sum_{T(w1)} s1 + sum_{T(w2)} s2)"},
  {kSaif, "saif", "Saif", R, true, false, "n.a.", PMI, kCpOrPmi, false, false, "",
   "2 sum_{T(w1) n T(w2)} min(s1, s2) / (sum_{T(w1)} s1 + sum_{T(w2)} s2)"},
  {kCrmTypeAdd, "crm_type_add", "CRM type add", R, false, false, "n.a.", RAW, kAcceptsAny, false, false,
   "gamma,beta", "P = |C1 n C2| / |C1|, R = |C1 n C2| / |C2|"},
  {kCrmTypeDw, "crm_type_dw", "CRM type dw", R, false, false, "n.a.", CP, kAcceptsCp, false, false,
   "gamma,beta", "P = sum_{C1 n C2} min(P1, P2) / P1 / |C1|, R = sum_{C1 n C2} min(P1, P2) / P2 / |C2|"},
  {kCrmTokenAdd, "crm_token_add", "CRM token add", R, false, false, "n.a.", CP, kAcceptsCp, false, false,
   "gamma,beta", "P = sum_{C1 n C2} P(w|w1), R = sum_{C1 n C2} P(w|w2)"},
  {kCrmTokenDw, "crm_token_dw", "CRM token dw", R, false, false, "n.a.", CP, kAcceptsCp, false, false,
   "gamma,beta", "P = R = sum_{C1 n C2} min(P(w|w1), P(w|w2))"},
  {kCrmMiAdd, "crm_mi_add", "CRM mi add", R, false, false, "n.a.", PMI, kAcceptsPmi, false, false,
   "gamma,beta", "P = sum_{C1 n C2} I1 / sum_{C1} I1, R = sum_{C1 n C2} I2 / sum_{C2} I2"},
  {kCrmMiDw, "crm_mi_dw", "CRM mi dw", R, false, false, "n.a.", PMI, kAcceptsPmi, false, false,
   "gamma,beta", "P = sum_{C1 n C2} min(I1, I2) / sum_{C1} I1, R = sum_{C1 n C2} min(I1, I2) / sum_{C2} I2"},
}};
// clang-format on

std::string strength_label(const MeasureInfo& m) {
  if (m.accepts == kAcceptsAny && m.native == Semantics::kRaw) return "sets";
  std::string out;
  if (m.accepts & kAcceptsCp) out = "CP";
  if (m.accepts & kAcceptsPmi) out += out.empty() ? "PMI" : "|PMI";
  if (m.accepts & kAcceptsRaw) out += "|RAW";
  return out;
}

}  // namespace

std::span<const MeasureInfo> catalog() { return kCatalog; }

const MeasureInfo& info(MeasureId id) {
  for (const auto& m : kCatalog) {
    if (m.id == id) return m;
  }
  throw Error(ErrorKind::kInvalidSpec, "measure id missing from catalog");
}

std::optional<MeasureId> parse_measure(std::string_view key) {
  if (key == "dif" || key == "pcm_dif") return kL1;
  if (key == "pcm_div" || key == "kld_unw_abs") return kDiv;
  for (const auto& m : kCatalog) {
    if (m.key == key) return m.id;
  }
  return std::nullopt;
}

std::string catalog_keys() {
  std::string out;
  for (const auto& m : kCatalog) {
    if (!out.empty()) out += ", ";
    out += m.key;
  }
  return out;
}

std::string catalog_table() {
  std::ostringstream out;
  out << "table\tmeasure\tname\tpolarity\tcompositional\tpcm\tsymmetric\tstrength\tparameters\tformula\n";
  for (const auto& m : kCatalog) {
    out << (m.polarity == Polarity::kDistance ? "distance" : "relatedness") << '\t' << m.key << '\t'
        << m.name << '\t' << to_string(m.polarity) << '\t' << (m.compositional ? "yes" : "no") << '\t'
        << m.pcm << '\t' << (m.symmetric ? "yes" : "no") << '\t' << strength_label(m) << '\t'
        << (m.parameters.empty() ? "-" : m.parameters) << '\t' << m.formula << '\n';
  }
  return out.str();
}

std::string catalog_json() {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& m : kCatalog) {
    arr.push_back({{"measure", m.key},
                   {"name", m.name},
                   {"polarity", to_string(m.polarity)},
                   {"compositional", m.compositional},
                   {"pcm", m.pcm},
                   {"symmetric", m.symmetric},
                   {"strength", strength_label(m)},
                   {"native_strength", to_string(m.native)},
                   {"parameters", m.parameters},
                   {"formula", m.formula}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace distsim
