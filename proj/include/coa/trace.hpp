#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coa/rational.hpp"
#include "coa/result.hpp"

namespace coa {

/// Abstract placeholder "y<k>", k >= 1. Occurrences with the same index refer
/// to the same intermediate result.
struct Placeholder {
  int index = 0;

  bool operator==(const Placeholder&) const = default;
  auto operator<=>(const Placeholder&) const = default;
  std::string name() const { return "y" + std::to_string(index); }
};

enum class Domain { Math, Wiki };

enum class EntityClass { Person, Group, Location, Culture, Date, Numeral };

std::string_view entity_class_name(EntityClass c);
std::optional<EntityClass> parse_entity_class(std::string_view name);

// ---------------------------------------------------------------------------
// Arithmetic expression AST (leaves: rational constants or placeholders).

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Constant, Ref, Neg, Binary };

  Kind kind = Kind::Constant;
  Rational constant;     // Constant
  Placeholder ref;       // Ref
  char op = 0;           // Binary: one of + - * /
  ExprPtr lhs, rhs;      // Binary; Neg uses lhs only

  static ExprPtr make_constant(Rational v);
  static ExprPtr make_ref(Placeholder p);
  static ExprPtr make_neg(ExprPtr child);
  static ExprPtr make_binary(char op, ExprPtr l, ExprPtr r);
};

bool expr_equal(const Expr& a, const Expr& b);

/// Canonical text: binary operators spaced, structure-preserving parentheses.
std::string render_expr(const Expr& e);

/// Placeholders referenced by the expression, in left-to-right order
/// (duplicates preserved).
void collect_expr_refs(const Expr& e, std::vector<Placeholder>& out);

// ---------------------------------------------------------------------------
// Segments

struct SourceSpan {
  size_t begin = 0;
  size_t end = 0;  // one past the closing ']'
};

struct TextSegment {
  std::string text;
};

/// "[expr = y<k>]"
struct MathDerivation {
  ExprPtr expression;
  Placeholder result;
  SourceSpan span;
};

/// "[query text -Wiki-> y<k>]"; the query may reference earlier placeholders.
struct WikiSearchOp {
  std::string query;
  std::vector<Placeholder> refs;
  Placeholder output;
  SourceSpan span;
};

/// "[y<j> -NER(class)-> y<k>]"
struct NerExtractOp {
  Placeholder source;
  EntityClass entity_class = EntityClass::Person;
  Placeholder output;
  SourceSpan span;
};

using Segment = std::variant<TextSegment, MathDerivation, WikiSearchOp, NerExtractOp>;

/// Structural equality; source spans are ignored.
bool segment_equal(const Segment& a, const Segment& b);

struct Trace {
  Domain domain = Domain::Math;
  std::vector<Segment> segments;
  std::set<Placeholder> defined;
  std::set<Placeholder> used;

  size_t operation_count() const;
};

bool trace_equal(const Trace& a, const Trace& b);

// ---------------------------------------------------------------------------
// Parsing

enum class ParseErrorKind {
  UnbalancedBracket,
  MalformedOperation,
  DuplicateDefinition,
  UseBeforeDefinition,
};

std::string_view parse_error_kind_name(ParseErrorKind k);

struct ParseError {
  ParseErrorKind kind = ParseErrorKind::MalformedOperation;
  size_t offset = 0;  // byte offset into the input
  std::string detail;
};

/// Total over arbitrary input: every string yields a Trace or a ParseError.
/// Bracketed spans must parse as one of the domain's operation forms; nesting
/// and stray brackets are rejected, placeholder structure (single assignment,
/// def-before-use) is enforced.
Result<Trace, ParseError> parse_trace(std::string_view text, Domain domain);

/// Canonical text; parse_trace(render_trace(t), t.domain) is structurally
/// identical to t.
std::string render_trace(const Trace& trace);

struct SubstituteError {
  std::vector<Placeholder> missing;
};

/// Replaces every placeholder occurrence (inside and outside brackets) with
/// its rendered binding; math derivations render as "expr = value". Bindings
/// are canonical value renderings keyed by placeholder index.
Result<std::string, SubstituteError> substitute(const Trace& trace,
                                                const std::map<int, std::string>& bindings);

/// Placeholder token occurrences ("y" + digits on word boundaries, no leading
/// zeros) within plain text.
struct PlaceholderOccurrence {
  Placeholder placeholder;
  size_t begin = 0;
  size_t length = 0;
};
std::vector<PlaceholderOccurrence> find_placeholders(std::string_view text);

/// Standalone arithmetic-expression parse, used where bracket contents (or
/// reified "expr" halves) need evaluating outside a full trace.
Result<ExprPtr, ParseError> parse_math_expression(std::string_view text);

}  // namespace coa
