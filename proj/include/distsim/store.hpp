// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "distsim/tokenize.hpp"
#include "distsim/vocabulary.hpp"

namespace distsim {

/// Relation name used for plain windowed co-occurrence.
inline constexpr std::string_view kWindowRelation = "window";

enum class Side { kHead, kDep };

/// One directed count: `head` precedes (or governs) `dep` under `relation`.
struct PairCount {
  RelationId relation = 0;
  WordId head = 0;
  WordId dep = 0;
  std::uint64_t count = 0;

  bool operator==(const PairCount&) const = default;
};

/// A co-occurring word seen from one side, with both directions summed.
struct Link {
  RelationId relation = 0;
  WordId other = 0;
  std::uint64_t count = 0;
};

/// Relation names to consult; empty means every relation in the store.
using RelationFilter = std::vector<std::string>;

/// Immutable, read-only co-occurrence counts. Built by StoreBuilder, build_windowed,
/// ingest_triples, merge or load_store.
///
/// Pairs are kept in canonical order (relation, head id, dep id). Marginals, totals
/// and the per-word link index are derived from the pairs.
class CooccurrenceStore {
 public:
  CooccurrenceStore() = default;

  const Vocabulary& vocabulary() const { return vocab_; }
  const std::vector<std::string>& relations() const { return relations_; }
  std::span<const PairCount> pairs() const { return pairs_; }
  std::uint32_t window_size() const { return window_size_; }

  std::optional<RelationId> find_relation(std::string_view name) const;
  /// Throws Error(kNotFound) for an unknown name.
  RelationId relation_at(std::string_view name) const;
  /// Sorted, de-duplicated ids; an empty filter selects every relation.
  std::vector<RelationId> resolve(const RelationFilter& filter) const;

  std::uint64_t pair_count(RelationId relation, WordId head, WordId dep) const;
  std::uint64_t marginal(RelationId relation, WordId word, Side side) const;
  /// Head plus dep marginal: the number of pair slots `word` fills under `relation`.
  std::uint64_t combined_marginal(RelationId relation, WordId word) const;
  std::uint64_t total_pairs(RelationId relation) const { return totals_.at(relation); }

  /// Links of `word`, sorted by (relation, other). A self pair is counted once per side.
  std::span<const Link> links(WordId word) const;

  /// Re-derives marginals and totals from the pairs and compares; throws Error(kFormat).
  void check_invariants() const;

  /// Structural equality: vocabulary, relations, pairs and window size.
  bool operator==(const CooccurrenceStore& other) const;

 private:
  friend class StoreBuilder;
  void finalize();

  Vocabulary vocab_;
  std::vector<std::string> relations_;
  std::vector<PairCount> pairs_;
  std::uint32_t window_size_ = 0;

  std::vector<std::uint64_t> totals_;
  // [relation][word]
  std::vector<std::vector<std::uint64_t>> head_marginals_;
  std::vector<std::vector<std::uint64_t>> dep_marginals_;
  std::vector<std::size_t> link_offsets_;
  std::vector<Link> links_;
};

/// Accumulates counts additively, then freezes them into a CooccurrenceStore.
class StoreBuilder {
 public:
  explicit StoreBuilder(std::uint32_t window_size = 0) : window_size_(window_size) {}

  WordId intern_word(std::string_view word) { return vocab_.intern(word); }
  RelationId intern_relation(std::string_view name);
  void add(RelationId relation, WordId head, WordId dep, std::uint64_t count = 1);

  const Vocabulary& vocabulary() const { return vocab_; }

  CooccurrenceStore build() &&;

 private:
  using CountMap = std::unordered_map<std::uint64_t, std::uint64_t>;

  std::uint32_t window_size_;
  Vocabulary vocab_;
  std::vector<std::string> relations_;
  std::vector<CountMap> counts_;  // per relation, key = head << 32 | dep
};

/// Counts every ordered pair (i, j) with i < j <= i + window inside one document under
/// the "window" relation. The earlier token is the head. Documents are sharded across
/// `workers` threads and merged additively; the result does not depend on `workers`.
CooccurrenceStore build_windowed(std::span<const std::string> documents, std::uint32_t window,
                                 const TokenizerConfig& tokenizer = {}, unsigned workers = 1);

/// One document per line.
CooccurrenceStore build_windowed(std::istream& corpus, std::uint32_t window,
                                 const TokenizerConfig& tokenizer = {}, unsigned workers = 1);

struct TripleRow {
  std::string head;
  std::string relation;
  std::string dependent;
  std::int64_t count = 1;
};

CooccurrenceStore ingest_triples(std::span<const TripleRow> rows);

/// TSV `head<TAB>relation<TAB>dependent<TAB>count`; blank and `#` lines are skipped.
CooccurrenceStore ingest_triples(std::istream& input);

/// Additive union. Words and relations of `b` not present in `a` get appended ids.
CooccurrenceStore merge(const CooccurrenceStore& a, const CooccurrenceStore& b);

}  // namespace distsim
