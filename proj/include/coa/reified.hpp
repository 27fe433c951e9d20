#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coa/article.hpp"
#include "coa/rational.hpp"
#include "coa/trace.hpp"

namespace coa {

/// Concrete value bound to a placeholder by a tool.
struct BoundValue {
  enum class Kind { Number, Article, Entity };

  Kind kind = Kind::Number;
  Rational number;        // Number (math derivations)
  Article article;        // Article (WikiSearch results)
  std::string entity;     // Entity (NER results)

  static BoundValue of_number(Rational v);
  static BoundValue of_article(Article a);
  static BoundValue of_entity(std::string surface);

  /// Canonical rendering used for substitution: the exact value for numbers,
  /// the article title for search results, the surface string for entities.
  std::string rendered() const;
};

/// A trace with every placeholder bound to a concrete value. Wiki plans that
/// fail mid-way keep their partial bindings and carry ok=false plus an error.
struct ReifiedTrace {
  Trace trace;
  std::map<int, BoundValue> bindings;
  std::string reified_text;
  std::optional<std::string> final_answer;
  std::vector<double> step_latencies_seconds;  // one entry per tool step, in step order
  bool ok = true;
  std::string error;
};

}  // namespace coa
