// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "distsim/store_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "distsim/error.hpp"

namespace distsim {
namespace {

constexpr std::string_view kMagic = "#distsim-store v1";

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void check_token(const std::string& s, std::string_view what) {
  if (s.find_first_of("\t\n\r") != std::string::npos || s.empty()) {
    throw Error(ErrorKind::kInvalidParameter,
                "cannot save " + std::string(what) + " '" + s + "': empty or contains tab/newline");
  }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  for (std::size_t pos; (pos = line.find('\t')) != std::string_view::npos;) {
    out.push_back(line.substr(0, pos));
    line.remove_prefix(pos + 1);
  }
  out.push_back(line);
  return out;
}

/// Line reader over an in-memory buffer that remembers where the [END] line begins.
class Reader {
 public:
  explicit Reader(std::string data) : data_(std::move(data)) {}

  bool next(std::string_view& line) {
    if (pos_ >= data_.size()) return false;
    line_start_ = pos_;
    const std::size_t nl = data_.find('\n', pos_);
    if (nl == std::string::npos) {
      line = std::string_view(data_).substr(pos_);
      pos_ = data_.size();
      terminated_ = false;
    } else {
      line = std::string_view(data_).substr(pos_, nl - pos_);
      pos_ = nl + 1;
      terminated_ = true;
    }
    return true;
  }

  std::string_view prefix_before_current() const { return std::string_view(data_).substr(0, line_start_); }
  bool terminated() const { return terminated_; }
  bool at_end() const { return pos_ >= data_.size(); }

 private:
  std::string data_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  bool terminated_ = true;
};

[[noreturn]] void fail(std::string_view section, const std::string& what) {
  throw Error(ErrorKind::kFormat, "store " + std::string(section) + ": " + what);
}

template <typename T>
T parse_uint(std::string_view field, std::string_view section) {
  T v{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    fail(section, "bad integer '" + std::string(field) + "'");
  }
  return v;
}

std::size_t read_section_header(Reader& reader, std::string_view name) {
  std::string_view line;
  if (!reader.next(line)) fail(name, "missing section (truncated file)");
  const auto fields = split_tabs(line);
  if (fields.size() != 2 || fields[0] != name) {
    fail(name, "expected section header, got '" + std::string(line) + "'");
  }
  return parse_uint<std::size_t>(fields[1], name);
}

std::vector<std::string_view> read_row(Reader& reader, std::string_view section, std::size_t columns) {
  std::string_view line;
  if (!reader.next(line)) fail(section, "truncated file");
  auto fields = split_tabs(line);
  if (fields.size() != columns) {
    fail(section, "expected " + std::to_string(columns) + " columns in '" + std::string(line) + "'");
  }
  return fields;
}

}  // namespace

void save_store(const CooccurrenceStore& store, std::ostream& out) {
  std::ostringstream body;
  body << kMagic << '\n';
  body << "window\t" << store.window_size() << '\n';
  body << "[RELATIONS]\t" << store.relations().size() << '\n';
  for (std::size_t i = 0; i < store.relations().size(); ++i) {
    check_token(store.relations()[i], "relation");
    body << i << '\t' << store.relations()[i] << '\n';
  }
  body << "[VOCAB]\t" << store.vocabulary().size() << '\n';
  for (std::size_t i = 0; i < store.vocabulary().size(); ++i) {
    check_token(store.vocabulary().word(static_cast<WordId>(i)), "word");
    body << i << '\t' << store.vocabulary().word(static_cast<WordId>(i)) << '\n';
  }
  body << "[PAIRS]\t" << store.pairs().size() << '\n';
  for (const auto& p : store.pairs()) {
    body << p.relation << '\t' << p.head << '\t' << p.dep << '\t' << p.count << '\n';
  }
  body << "[TOTALS]\t" << store.relations().size() << '\n';
  for (std::size_t i = 0; i < store.relations().size(); ++i) {
    body << i << '\t' << store.total_pairs(static_cast<RelationId>(i)) << '\n';
  }
  const std::string text = body.str();
  out << text << "[END]\t" << hex64(fnv1a(text)) << '\n';
}

void save_store(const CooccurrenceStore& store, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalidInput, "cannot open '" + path.string() + "' for writing");
  save_store(store, out);
  if (!out) throw Error(ErrorKind::kInvalidInput, "write to '" + path.string() + "' failed");
}

CooccurrenceStore load_store(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Reader reader(buffer.str());

  std::string_view line;
  if (!reader.next(line) || line != kMagic) {
    if (line.rfind("#distsim-store", 0) == 0) fail("header", "unsupported version '" + std::string(line) + "'");
    fail("header", "missing '#distsim-store v1' magic line");
  }
  auto window_row = read_row(reader, "header", 2);
  if (window_row[0] != "window") fail("header", "expected window row");
  StoreBuilder builder(parse_uint<std::uint32_t>(window_row[1], "header"));

  const std::size_t n_rel = read_section_header(reader, "[RELATIONS]");
  for (std::size_t i = 0; i < n_rel; ++i) {
    auto f = read_row(reader, "[RELATIONS]", 2);
    if (parse_uint<std::size_t>(f[0], "[RELATIONS]") != i) fail("[RELATIONS]", "ids not dense");
    if (builder.intern_relation(f[1]) != i) fail("[RELATIONS]", "duplicate relation '" + std::string(f[1]) + "'");
  }
  const std::size_t n_words = read_section_header(reader, "[VOCAB]");
  for (std::size_t i = 0; i < n_words; ++i) {
    auto f = read_row(reader, "[VOCAB]", 2);
    if (parse_uint<std::size_t>(f[0], "[VOCAB]") != i) fail("[VOCAB]", "ids not dense");
    if (f[1].empty()) fail("[VOCAB]", "empty word");
    if (builder.intern_word(f[1]) != i) fail("[VOCAB]", "duplicate word '" + std::string(f[1]) + "'");
  }
  const std::size_t n_pairs = read_section_header(reader, "[PAIRS]");
  std::optional<PairCount> previous;
  for (std::size_t i = 0; i < n_pairs; ++i) {
    auto f = read_row(reader, "[PAIRS]", 4);
    PairCount p{parse_uint<RelationId>(f[0], "[PAIRS]"), parse_uint<WordId>(f[1], "[PAIRS]"),
                parse_uint<WordId>(f[2], "[PAIRS]"), parse_uint<std::uint64_t>(f[3], "[PAIRS]")};
    if (p.relation >= n_rel || p.head >= n_words || p.dep >= n_words) fail("[PAIRS]", "id out of range");
    if (p.count == 0) fail("[PAIRS]", "zero count");
    if (previous) {
      const auto& q = *previous;
      const bool ordered = q.relation != p.relation ? q.relation < p.relation
                           : q.head != p.head       ? q.head < p.head
                                                    : q.dep < p.dep;
      if (!ordered) fail("[PAIRS]", "rows not in canonical order");
    }
    previous = p;
    builder.add(p.relation, p.head, p.dep, p.count);
  }
  const std::size_t n_totals = read_section_header(reader, "[TOTALS]");
  if (n_totals != n_rel) fail("[TOTALS]", "row count differs from [RELATIONS]");
  std::vector<std::uint64_t> totals(n_rel);
  for (std::size_t i = 0; i < n_totals; ++i) {
    auto f = read_row(reader, "[TOTALS]", 2);
    if (parse_uint<std::size_t>(f[0], "[TOTALS]") != i) fail("[TOTALS]", "ids not dense");
    totals[i] = parse_uint<std::uint64_t>(f[1], "[TOTALS]");
  }

  if (!reader.next(line)) fail("[END]", "missing checksum line (truncated file)");
  const auto end = split_tabs(line);
  if (end.size() != 2 || end[0] != "[END]") fail("[END]", "expected checksum line");
  if (end[1] != hex64(fnv1a(reader.prefix_before_current()))) fail("[END]", "checksum mismatch");
  if (!reader.terminated() || !reader.at_end()) fail("[END]", "trailing data after checksum");

  CooccurrenceStore store = std::move(builder).build();
  for (std::size_t r = 0; r < n_rel; ++r) {
    if (store.total_pairs(static_cast<RelationId>(r)) != totals[r]) {
      fail("[TOTALS]", "total for relation " + std::to_string(r) + " disagrees with [PAIRS]");
    }
  }
  store.check_invariants();
  return store;
}

CooccurrenceStore load_store(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot open store '" + path.string() + "'");
  return load_store(in);
}

}  // namespace distsim
