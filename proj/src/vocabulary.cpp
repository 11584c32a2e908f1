// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "distsim/vocabulary.hpp"

#include "distsim/error.hpp"

namespace distsim {

WordId Vocabulary::intern(std::string_view word) {
  if (auto it = index_.find(word); it != index_.end()) return it->second;
  const auto id = static_cast<WordId>(words_.size());
  words_.emplace_back(word);
  index_.emplace(words_.back(), id);
  return id;
}

std::optional<WordId> Vocabulary::find(std::string_view word) const {
  if (auto it = index_.find(word); it != index_.end()) return it->second;
  return std::nullopt;
}

WordId Vocabulary::at(std::string_view word) const {
  if (auto id = find(word)) return *id;
  throw Error(ErrorKind::kNotFound, "unknown word '" + std::string(word) + "'");
}

}  // namespace distsim
