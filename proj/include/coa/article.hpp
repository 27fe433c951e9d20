#pragma once

#include <string>

namespace coa {

/// One corpus document (KILT-style JSONL record).
struct Article {
  std::string id;
  std::string title;
  std::string text;

  bool operator==(const Article&) const = default;
};

}  // namespace coa
