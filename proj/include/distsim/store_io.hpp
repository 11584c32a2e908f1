// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <filesystem>
#include <iosfwd>

#include "distsim/store.hpp"

namespace distsim {

/// Text store format, `#distsim-store v1`:
///
///     #distsim-store v1
///     window<TAB>2
///     [RELATIONS]<TAB>n     then n rows  id<TAB>name
///     [VOCAB]<TAB>n         then n rows  id<TAB>word
///     [PAIRS]<TAB>n         then n rows  rel-id<TAB>head-id<TAB>dep-id<TAB>count (canonical order)
///     [TOTALS]<TAB>n        then n rows  rel-id<TAB>total
///     [END]<TAB>fnv1a64-hex of every preceding byte
///
/// Marginals and totals are recomputed on load and checked against [TOTALS].
void save_store(const CooccurrenceStore& store, std::ostream& out);
void save_store(const CooccurrenceStore& store, const std::filesystem::path& path);

/// Throws Error(kFormat) naming the offending section.
CooccurrenceStore load_store(std::istream& in);
CooccurrenceStore load_store(const std::filesystem::path& path);

}  // namespace distsim
