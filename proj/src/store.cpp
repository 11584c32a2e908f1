// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "distsim/store.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <thread>

#include "distsim/error.hpp"

namespace distsim {
namespace {

constexpr std::uint64_t pack(WordId head, WordId dep) {
  return (static_cast<std::uint64_t>(head) << 32) | dep;
}

bool canonical_less(const PairCount& a, const PairCount& b) {
  if (a.relation != b.relation) return a.relation < b.relation;
  if (a.head != b.head) return a.head < b.head;
  return a.dep < b.dep;
}

std::string row_error(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

// ---------------------------------------------------------------------------
// CooccurrenceStore

std::optional<RelationId> CooccurrenceStore::find_relation(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i] == name) return static_cast<RelationId>(i);
  }
  return std::nullopt;
}

RelationId CooccurrenceStore::relation_at(std::string_view name) const {
  if (auto id = find_relation(name)) return *id;
  throw Error(ErrorKind::kNotFound, "unknown relation '" + std::string(name) + "'");
}

std::vector<RelationId> CooccurrenceStore::resolve(const RelationFilter& filter) const {
  std::vector<RelationId> ids;
  if (filter.empty()) {
    ids.resize(relations_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<RelationId>(i);
    return ids;
  }
  for (const auto& name : filter) ids.push_back(relation_at(name));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::uint64_t CooccurrenceStore::pair_count(RelationId relation, WordId head, WordId dep) const {
  const PairCount probe{relation, head, dep, 0};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), probe, canonical_less);
  if (it != pairs_.end() && it->relation == relation && it->head == head && it->dep == dep) {
    return it->count;
  }
  return 0;
}

std::uint64_t CooccurrenceStore::marginal(RelationId relation, WordId word, Side side) const {
  const auto& table = side == Side::kHead ? head_marginals_ : dep_marginals_;
  if (relation >= table.size() || word >= table[relation].size()) return 0;
  return table[relation][word];
}

std::uint64_t CooccurrenceStore::combined_marginal(RelationId relation, WordId word) const {
  return marginal(relation, word, Side::kHead) + marginal(relation, word, Side::kDep);
}

std::span<const Link> CooccurrenceStore::links(WordId word) const {
  if (word + 1 >= link_offsets_.size()) return {};
  return std::span<const Link>(links_.data() + link_offsets_[word],
                               link_offsets_[word + 1] - link_offsets_[word]);
}

void CooccurrenceStore::finalize() {
  const std::size_t n_rel = relations_.size();
  const std::size_t n_words = vocab_.size();
  totals_.assign(n_rel, 0);
  head_marginals_.assign(n_rel, std::vector<std::uint64_t>(n_words, 0));
  dep_marginals_.assign(n_rel, std::vector<std::uint64_t>(n_words, 0));

  std::vector<std::size_t> degree(n_words, 0);
  for (const auto& p : pairs_) {
    totals_[p.relation] += p.count;
    head_marginals_[p.relation][p.head] += p.count;
    dep_marginals_[p.relation][p.dep] += p.count;
    ++degree[p.head];
    ++degree[p.dep];
  }

  link_offsets_.assign(n_words + 1, 0);
  for (std::size_t w = 0; w < n_words; ++w) link_offsets_[w + 1] = link_offsets_[w] + degree[w];
  std::vector<Link> raw(link_offsets_.back());
  std::vector<std::size_t> cursor(link_offsets_.begin(), link_offsets_.end() - 1);
  for (const auto& p : pairs_) {
    raw[cursor[p.head]++] = Link{p.relation, p.dep, p.count};
    raw[cursor[p.dep]++] = Link{p.relation, p.head, p.count};
  }

  // Sort each word's slice and fold (r, x, y) with (r, y, x) into one link.
  links_.clear();
  links_.reserve(raw.size());
  std::vector<std::size_t> offsets(n_words + 1, 0);
  for (std::size_t w = 0; w < n_words; ++w) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(link_offsets_[w]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(link_offsets_[w + 1]);
    std::sort(first, last, [](const Link& a, const Link& b) {
      return a.relation != b.relation ? a.relation < b.relation : a.other < b.other;
    });
    offsets[w] = links_.size();
    for (auto it = first; it != last; ++it) {
      if (links_.size() > offsets[w] && links_.back().relation == it->relation &&
          links_.back().other == it->other) {
        links_.back().count += it->count;
      } else {
        links_.push_back(*it);
      }
    }
  }
  offsets[n_words] = links_.size();
  link_offsets_ = std::move(offsets);
}

void CooccurrenceStore::check_invariants() const {
  const std::size_t n_rel = relations_.size();
  const std::size_t n_words = vocab_.size();
  std::vector<std::uint64_t> totals(n_rel, 0);
  std::vector<std::vector<std::uint64_t>> heads(n_rel, std::vector<std::uint64_t>(n_words, 0));
  std::vector<std::vector<std::uint64_t>> deps(n_rel, std::vector<std::uint64_t>(n_words, 0));
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& p = pairs_[i];
    if (p.relation >= n_rel || p.head >= n_words || p.dep >= n_words) {
      throw Error(ErrorKind::kFormat, "[PAIRS]: id out of range at row " + std::to_string(i));
    }
    if (p.count == 0) {
      throw Error(ErrorKind::kFormat, "[PAIRS]: zero count at row " + std::to_string(i));
    }
    if (i > 0 && !canonical_less(pairs_[i - 1], p)) {
      throw Error(ErrorKind::kFormat, "[PAIRS]: rows not in canonical order at row " + std::to_string(i));
    }
    totals[p.relation] += p.count;
    heads[p.relation][p.head] += p.count;
    deps[p.relation][p.dep] += p.count;
  }
  if (totals != totals_) throw Error(ErrorKind::kFormat, "[TOTALS]: totals disagree with pairs");
  if (heads != head_marginals_ || deps != dep_marginals_) {
    throw Error(ErrorKind::kFormat, "[PAIRS]: marginals disagree with pairs");
  }
}

bool CooccurrenceStore::operator==(const CooccurrenceStore& other) const {
  return window_size_ == other.window_size_ && vocab_ == other.vocab_ &&
         relations_ == other.relations_ && pairs_ == other.pairs_;
}

// ---------------------------------------------------------------------------
// StoreBuilder

RelationId StoreBuilder::intern_relation(std::string_view name) {
  if (name.empty()) throw Error(ErrorKind::kInvalidParameter, "relation name must be nonempty");
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i] == name) return static_cast<RelationId>(i);
  }
  relations_.emplace_back(name);
  counts_.emplace_back();
  return static_cast<RelationId>(relations_.size() - 1);
}

void StoreBuilder::add(RelationId relation, WordId head, WordId dep, std::uint64_t count) {
  if (relation >= relations_.size() || head >= vocab_.size() || dep >= vocab_.size()) {
    throw Error(ErrorKind::kInvalidParameter, "StoreBuilder::add: id out of range");
  }
  if (count == 0) return;
  counts_[relation][pack(head, dep)] += count;
}

CooccurrenceStore StoreBuilder::build() && {
  CooccurrenceStore store;
  store.window_size_ = window_size_;
  std::size_t n = 0;
  for (const auto& m : counts_) n += m.size();
  store.pairs_.reserve(n);
  for (std::size_t r = 0; r < counts_.size(); ++r) {
    for (const auto& [key, count] : counts_[r]) {
      store.pairs_.push_back(PairCount{static_cast<RelationId>(r), static_cast<WordId>(key >> 32),
                                       static_cast<WordId>(key & 0xffffffffu), count});
    }
  }
  std::sort(store.pairs_.begin(), store.pairs_.end(), canonical_less);
  store.vocab_ = std::move(vocab_);
  store.relations_ = std::move(relations_);
  counts_.clear();
  store.finalize();
  return store;
}

// ---------------------------------------------------------------------------
// Builders

CooccurrenceStore build_windowed(std::span<const std::string> documents, std::uint32_t window,
                                 const TokenizerConfig& tokenizer, unsigned workers) {
  if (window == 0) throw Error(ErrorKind::kInvalidParameter, "window must be >= 1");
  StoreBuilder builder(window);
  const RelationId rel = builder.intern_relation(kWindowRelation);

  // Interning is sequential so ids follow first appearance regardless of sharding.
  std::vector<std::vector<WordId>> docs;
  docs.reserve(documents.size());
  for (const auto& doc : documents) {
    std::vector<WordId> ids;
    for (const auto& tok : tokenize(doc, tokenizer)) ids.push_back(builder.intern_word(tok));
    docs.push_back(std::move(ids));
  }

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(docs.size())));
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> shards(workers);
  auto count_shard = [&](unsigned shard) {
    auto& local = shards[shard];
    for (std::size_t d = shard; d < docs.size(); d += workers) {
      const auto& ids = docs[d];
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::size_t end = std::min<std::size_t>(ids.size(), i + 1 + window);
        for (std::size_t j = i + 1; j < end; ++j) ++local[pack(ids[i], ids[j])];
      }
    }
  };
  if (workers == 1) {
    count_shard(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned s = 0; s < workers; ++s) threads.emplace_back(count_shard, s);
    for (auto& t : threads) t.join();
  }
  for (const auto& shard : shards) {
    for (const auto& [key, count] : shard) {
      builder.add(rel, static_cast<WordId>(key >> 32), static_cast<WordId>(key & 0xffffffffu), count);
    }
  }
  return std::move(builder).build();
}

CooccurrenceStore build_windowed(std::istream& corpus, std::uint32_t window,
                                 const TokenizerConfig& tokenizer, unsigned workers) {
  std::vector<std::string> documents;
  for (std::string line; std::getline(corpus, line);) documents.push_back(std::move(line));
  return build_windowed(documents, window, tokenizer, workers);
}

CooccurrenceStore ingest_triples(std::span<const TripleRow> rows) {
  StoreBuilder builder;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.count <= 0) {
      throw Error(ErrorKind::kInvalidParameter, row_error(i + 1, "count must be >= 1"));
    }
    if (row.relation.empty() || row.head.empty() || row.dependent.empty()) {
      throw Error(ErrorKind::kInvalidParameter, row_error(i + 1, "empty field"));
    }
    if (row.relation == kWindowRelation) {
      throw Error(ErrorKind::kInvalidParameter,
                  row_error(i + 1, "relation name 'window' is reserved for windowed counts"));
    }
    const RelationId rel = builder.intern_relation(row.relation);
    const WordId head = builder.intern_word(row.head);
    const WordId dep = builder.intern_word(row.dependent);
    builder.add(rel, head, dep, static_cast<std::uint64_t>(row.count));
  }
  return std::move(builder).build();
}

CooccurrenceStore ingest_triples(std::istream& input) {
  std::vector<TripleRow> rows;
  std::size_t line_no = 0;
  for (std::string line; std::getline(input, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find('\t')) != std::string_view::npos;) {
      fields.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    fields.push_back(rest);
    if (fields.size() != 4) {
      throw Error(ErrorKind::kParse,
                  row_error(line_no, "expected 4 tab-separated fields, got " + std::to_string(fields.size())));
    }
    std::int64_t count = 0;
    const auto cnt = fields[3];
    auto [ptr, ec] = std::from_chars(cnt.data(), cnt.data() + cnt.size(), count);
    if (ec != std::errc() || ptr != cnt.data() + cnt.size()) {
      throw Error(ErrorKind::kParse, row_error(line_no, "count '" + std::string(cnt) + "' is not an integer"));
    }
    if (count <= 0) throw Error(ErrorKind::kInvalidParameter, row_error(line_no, "count must be >= 1"));
    if (fields[0].empty() || fields[1].empty() || fields[2].empty()) {
      throw Error(ErrorKind::kParse, row_error(line_no, "empty field"));
    }
    if (fields[1] == kWindowRelation) {
      throw Error(ErrorKind::kInvalidParameter,
                  row_error(line_no, "relation name 'window' is reserved for windowed counts"));
    }
    rows.push_back(TripleRow{std::string(fields[0]), std::string(fields[1]), std::string(fields[2]), count});
  }
  return ingest_triples(rows);
}

CooccurrenceStore merge(const CooccurrenceStore& a, const CooccurrenceStore& b) {
  if (a.window_size() != b.window_size()) {
    throw Error(ErrorKind::kInvalidParameter, "cannot merge stores with different window sizes");
  }
  StoreBuilder builder(a.window_size());
  for (const auto* store : {&a, &b}) {
    std::vector<RelationId> rel_map;
    for (const auto& name : store->relations()) rel_map.push_back(builder.intern_relation(name));
    std::vector<WordId> word_map;
    for (const auto& w : store->vocabulary().words()) word_map.push_back(builder.intern_word(w));
    for (const auto& p : store->pairs()) {
      builder.add(rel_map[p.relation], word_map[p.head], word_map[p.dep], p.count);
    }
  }
  return std::move(builder).build();
}

}  // namespace distsim
