// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "distsim/measures.hpp"

namespace distsim {

/// Which profile semantics a measure can consume.
enum StrengthMask : unsigned {
  kAcceptsRaw = 1u << 0,
  kAcceptsCp = 1u << 1,
  kAcceptsPmi = 1u << 2,
  kAcceptsAny = kAcceptsRaw | kAcceptsCp | kAcceptsPmi,
};

struct MeasureInfo {
  MeasureId id;
  std::string_view key;
  std::string_view name;
  Polarity polarity;
  bool symmetric;
  bool compositional;
  std::string_view pcm;  // "diff.", "div.", "pdt." or "n.a."
  Semantics native;
  unsigned accepts;
  /// PMI profiles for this measure keep negative values.
  bool keeps_negative_pmi;
  /// Division-based: may raise zero-denominator errors under StrictMode::kStrict.
  bool strict_zero;
  std::string_view parameters;
  std::string_view formula;
};

std::span<const MeasureInfo> catalog();
const MeasureInfo& info(MeasureId id);

/// Accepts catalog keys and the aliases dif, pcm_dif, pcm_div, kld_unw_abs.
std::optional<MeasureId> parse_measure(std::string_view key);

/// Comma-separated list of keys, for usage messages.
std::string catalog_keys();

/// TSV grouped like the summary tables: distance measures first, then relatedness.
std::string catalog_table();
/// The same metadata as a JSON array.
std::string catalog_json();

}  // namespace distsim
