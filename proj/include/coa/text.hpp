#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace coa {

/// Lowercased word tokens. Word characters are ASCII alphanumerics plus any
/// non-ASCII byte (UTF-8 passthrough, no locale tables); everything else
/// separates. Deterministic and language-agnostic, no stemming.
std::vector<std::string> tokenize(std::string_view text);

/// ASCII lowercase; non-ASCII bytes pass through untouched.
std::string to_lower(std::string_view text);

/// Case-folded, whitespace-collapsed, edge-punctuation-trimmed form used for
/// title and wiki-answer comparisons. Input is assumed NFC.
std::string normalize_answer(std::string_view text);

/// Trims ASCII whitespace from both ends.
std::string_view trim(std::string_view text);

}  // namespace coa
