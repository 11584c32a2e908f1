// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace distsim {

using WordId = std::uint32_t;
using RelationId = std::uint32_t;

/// Dense bijection between word strings and 0-based ids, in order of first insertion.
class Vocabulary {
 public:
  Vocabulary() = default;

  /// Returns the existing id, or appends the word.
  WordId intern(std::string_view word);

  std::optional<WordId> find(std::string_view word) const;
  /// Like find() but throws Error(kNotFound).
  WordId at(std::string_view word) const;

  const std::string& word(WordId id) const { return words_.at(id); }
  const std::vector<std::string>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  bool operator==(const Vocabulary& other) const { return words_ == other.words_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId, Hash, std::equal_to<>> index_;
};

}  // namespace distsim
