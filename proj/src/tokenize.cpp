// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "distsim/tokenize.hpp"

namespace distsim {
namespace {

bool is_word_byte(unsigned char c, const TokenizerConfig& config) {
  if (c >= 0x80) return config.keep_non_ascii;
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

}  // namespace

std::vector<std::string> tokenize(std::string_view document, const TokenizerConfig& config) {
  std::vector<std::string> tokens;
  std::string current;
  for (const char ch : document) {
    const auto c = static_cast<unsigned char>(ch);
    if (is_word_byte(c, config)) {
      current.push_back(config.lowercase && c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                                                : ch);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace distsim
