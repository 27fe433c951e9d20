#include "coa/trace.hpp"

#include <algorithm>
#include <cctype>

namespace coa {

namespace {

bool is_word_byte(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

constexpr std::string_view kWikiMarker = "-Wiki->";
constexpr std::string_view kNerMarker = "-NER(";

}  // namespace

std::string_view entity_class_name(EntityClass c) {
  switch (c) {
    case EntityClass::Person: return "person";
    case EntityClass::Group: return "group";
    case EntityClass::Location: return "location";
    case EntityClass::Culture: return "culture";
    case EntityClass::Date: return "date";
    case EntityClass::Numeral: return "numeral";
  }
  return "person";
}

std::optional<EntityClass> parse_entity_class(std::string_view name) {
  if (name == "person") return EntityClass::Person;
  if (name == "group") return EntityClass::Group;
  if (name == "location") return EntityClass::Location;
  if (name == "culture") return EntityClass::Culture;
  if (name == "date") return EntityClass::Date;
  if (name == "numeral") return EntityClass::Numeral;
  return std::nullopt;
}

std::string_view parse_error_kind_name(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::UnbalancedBracket: return "UnbalancedBracket";
    case ParseErrorKind::MalformedOperation: return "MalformedOperation";
    case ParseErrorKind::DuplicateDefinition: return "DuplicateDefinition";
    case ParseErrorKind::UseBeforeDefinition: return "UseBeforeDefinition";
  }
  return "MalformedOperation";
}

// ---------------------------------------------------------------------------
// Expr

ExprPtr Expr::make_constant(Rational v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Constant;
  e->constant = std::move(v);
  return e;
}

ExprPtr Expr::make_ref(Placeholder p) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Ref;
  e->ref = p;
  return e;
}

ExprPtr Expr::make_neg(ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Neg;
  e->lhs = std::move(child);
  return e;
}

ExprPtr Expr::make_binary(char op, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Binary;
  e->op = op;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Constant: return a.constant == b.constant;
    case Expr::Kind::Ref: return a.ref == b.ref;
    case Expr::Kind::Neg: return expr_equal(*a.lhs, *b.lhs);
    case Expr::Kind::Binary:
      return a.op == b.op && expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
  }
  return false;
}

void collect_expr_refs(const Expr& e, std::vector<Placeholder>& out) {
  switch (e.kind) {
    case Expr::Kind::Constant: return;
    case Expr::Kind::Ref: out.push_back(e.ref); return;
    case Expr::Kind::Neg: collect_expr_refs(*e.lhs, out); return;
    case Expr::Kind::Binary:
      collect_expr_refs(*e.lhs, out);
      collect_expr_refs(*e.rhs, out);
      return;
  }
}

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Constant:
    case Expr::Kind::Ref: return 4;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Binary: return (e.op == '+' || e.op == '-') ? 1 : 2;
  }
  return 4;
}

// Parentheses preserve the tree exactly: the grammar is left-associative, so
// a right child at equal precedence needs parens to reparse unchanged.
void render_expr_rec(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Constant:
      out += e.constant.to_string();
      return;
    case Expr::Kind::Ref:
      out += e.ref.name();
      return;
    case Expr::Kind::Neg: {
      out += '-';
      bool parens = precedence(*e.lhs) < precedence(e);
      if (parens) out += '(';
      render_expr_rec(*e.lhs, out);
      if (parens) out += ')';
      return;
    }
    case Expr::Kind::Binary: {
      int my = precedence(e);
      bool lp = precedence(*e.lhs) < my;
      bool rp = precedence(*e.rhs) <= my;
      if (lp) out += '(';
      render_expr_rec(*e.lhs, out);
      if (lp) out += ')';
      out += ' ';
      out += e.op;
      out += ' ';
      if (rp) out += '(';
      render_expr_rec(*e.rhs, out);
      if (rp) out += ')';
      return;
    }
  }
}

}  // namespace

std::string render_expr(const Expr& e) {
  std::string out;
  render_expr_rec(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Placeholder scanning

std::vector<PlaceholderOccurrence> find_placeholders(std::string_view text) {
  std::vector<PlaceholderOccurrence> out;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'y') continue;
    if (i > 0 && is_word_byte(static_cast<unsigned char>(text[i - 1]))) continue;
    size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i + 1) continue;                                   // no digits
    if (text[i + 1] == '0') continue;                           // leading zero / y0
    if (j < text.size() && is_word_byte(static_cast<unsigned char>(text[j]))) continue;
    int index = 0;
    for (size_t k = i + 1; k < j; ++k) {
      index = index * 10 + (text[k] - '0');
      if (index > 1'000'000) { index = -1; break; }  // absurd index: not a placeholder
    }
    if (index > 0) {
      out.push_back({Placeholder{index}, i, j - i});
      i = j - 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Math expression parsing

namespace {

struct ExprToken {
  enum class Type { Number, Ref, Op, LParen, RParen, End } type = Type::End;
  Rational number;
  Placeholder ref;
  char op = 0;
  size_t offset = 0;
};

class ExprLexer {
 public:
  ExprLexer(std::string_view text, size_t base_offset)
      : text_(text), base_(base_offset) {}

  Result<std::vector<ExprToken>, ParseError> run() {
    std::vector<ExprToken> tokens;
    size_t i = 0;
    while (i < text_.size()) {
      unsigned char c = text_[i];
      if (std::isspace(c) || c == '$') {  // currency stripped during normalization
        ++i;
        continue;
      }
      if (c == '(' || c == ')') {
        tokens.push_back({c == '(' ? ExprToken::Type::LParen : ExprToken::Type::RParen,
                          Rational(), Placeholder{}, 0, base_ + i});
        ++i;
        continue;
      }
      if (c == '+' || c == '-' || c == '*' || c == '/') {
        tokens.push_back({ExprToken::Type::Op, Rational(), Placeholder{}, static_cast<char>(c),
                          base_ + i});
        ++i;
        continue;
      }
      if (std::isdigit(c) || (c == '.' && i + 1 < text_.size() &&
                              std::isdigit(static_cast<unsigned char>(text_[i + 1])))) {
        size_t start = i;
        bool seen_dot = false;
        while (i < text_.size()) {
          unsigned char d = text_[i];
          if (std::isdigit(d)) {
            ++i;
          } else if (d == ',' && i + 1 < text_.size() &&
                     std::isdigit(static_cast<unsigned char>(text_[i + 1]))) {
            ++i;  // digit-group comma
          } else if (d == '.' && !seen_dot && i + 1 < text_.size() &&
                     std::isdigit(static_cast<unsigned char>(text_[i + 1]))) {
            seen_dot = true;
            ++i;
          } else {
            break;
          }
        }
        auto value = Rational::parse(text_.substr(start, i - start));
        if (!value) {
          return ParseError{ParseErrorKind::MalformedOperation, base_ + start,
                            "bad number literal"};
        }
        tokens.push_back({ExprToken::Type::Number, *value, Placeholder{}, 0, base_ + start});
        continue;
      }
      if (c == 'y') {
        auto occ = find_placeholders(text_.substr(i));
        if (!occ.empty() && occ.front().begin == 0) {
          tokens.push_back({ExprToken::Type::Ref, Rational(), occ.front().placeholder, 0,
                            base_ + i});
          i += occ.front().length;
          continue;
        }
      }
      return ParseError{ParseErrorKind::MalformedOperation, base_ + i,
                        std::string("unexpected character '") + static_cast<char>(c) + "'"};
    }
    tokens.push_back({ExprToken::Type::End, Rational(), Placeholder{}, 0, base_ + text_.size()});
    return tokens;
  }

 private:
  std::string_view text_;
  size_t base_;
};

class ExprParser {
 public:
  explicit ExprParser(std::vector<ExprToken> tokens) : tokens_(std::move(tokens)) {}

  Result<ExprPtr, ParseError> run() {
    auto e = parse_sum();
    if (!e) return e;
    if (peek().type != ExprToken::Type::End) {
      return ParseError{ParseErrorKind::MalformedOperation, peek().offset,
                        "trailing tokens in expression"};
    }
    return e;
  }

 private:
  const ExprToken& peek() const { return tokens_[pos_]; }
  const ExprToken& advance() { return tokens_[pos_++]; }

  Result<ExprPtr, ParseError> parse_sum() {
    auto lhs = parse_product();
    if (!lhs) return lhs;
    ExprPtr node = lhs.value();
    while (peek().type == ExprToken::Type::Op && (peek().op == '+' || peek().op == '-')) {
      char op = advance().op;
      auto rhs = parse_product();
      if (!rhs) return rhs;
      node = Expr::make_binary(op, node, rhs.value());
    }
    return node;
  }

  Result<ExprPtr, ParseError> parse_product() {
    auto lhs = parse_factor();
    if (!lhs) return lhs;
    ExprPtr node = lhs.value();
    while (peek().type == ExprToken::Type::Op && (peek().op == '*' || peek().op == '/')) {
      char op = advance().op;
      auto rhs = parse_factor();
      if (!rhs) return rhs;
      node = Expr::make_binary(op, node, rhs.value());
    }
    return node;
  }

  Result<ExprPtr, ParseError> parse_factor() {
    if (peek().type == ExprToken::Type::Op && (peek().op == '-' || peek().op == '+')) {
      char op = advance().op;
      auto child = parse_factor();
      if (!child) return child;
      return op == '-' ? Expr::make_neg(child.value()) : child.value();
    }
    return parse_primary();
  }

  Result<ExprPtr, ParseError> parse_primary() {
    const ExprToken& t = peek();
    switch (t.type) {
      case ExprToken::Type::Number:
        advance();
        return Expr::make_constant(t.number);
      case ExprToken::Type::Ref:
        advance();
        return Expr::make_ref(t.ref);
      case ExprToken::Type::LParen: {
        advance();
        auto inner = parse_sum();
        if (!inner) return inner;
        if (peek().type != ExprToken::Type::RParen) {
          return ParseError{ParseErrorKind::MalformedOperation, peek().offset,
                            "expected ')'"};
        }
        advance();
        return inner;
      }
      default:
        return ParseError{ParseErrorKind::MalformedOperation, t.offset,
                          "expected number, placeholder or '('"};
    }
  }

  std::vector<ExprToken> tokens_;
  size_t pos_ = 0;
};

Result<ExprPtr, ParseError> parse_expr_text(std::string_view text, size_t base_offset) {
  ExprLexer lexer(text, base_offset);
  auto tokens = lexer.run();
  if (!tokens) return tokens.error();
  return ExprParser(std::move(tokens.value())).run();
}

// Parses "y<k>" and nothing else (modulo surrounding whitespace).
std::optional<Placeholder> parse_sole_placeholder(std::string_view text) {
  auto occ = find_placeholders(text);
  if (occ.size() != 1) return std::nullopt;
  std::string_view before = text.substr(0, occ[0].begin);
  std::string_view after = text.substr(occ[0].begin + occ[0].length);
  auto blank = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
  };
  if (!blank(before) || !blank(after)) return std::nullopt;
  return occ[0].placeholder;
}

std::string_view trim_view(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Result<ExprPtr, ParseError> parse_math_expression(std::string_view text) {
  return parse_expr_text(text, 0);
}

// ---------------------------------------------------------------------------
// Operation parsing

namespace {

Result<Segment, ParseError> parse_operation(std::string_view content, size_t content_offset,
                                            SourceSpan span, Domain domain) {
  if (domain == Domain::Wiki) {
    // NER form first: "y<j> -NER(class)-> y<k>".
    if (auto ner_pos = content.find(kNerMarker); ner_pos != std::string_view::npos) {
      auto source = parse_sole_placeholder(content.substr(0, ner_pos));
      if (!source) {
        return ParseError{ParseErrorKind::MalformedOperation, content_offset,
                          "NER source must be a single placeholder"};
      }
      size_t rest = ner_pos + kNerMarker.size();
      size_t close = content.find(')', rest);
      if (close == std::string_view::npos || content.substr(close + 1, 2) != "->") {
        return ParseError{ParseErrorKind::MalformedOperation, content_offset + ner_pos,
                          "malformed NER marker"};
      }
      auto cls = parse_entity_class(trim_view(content.substr(rest, close - rest)));
      if (!cls) {
        return ParseError{ParseErrorKind::MalformedOperation, content_offset + rest,
                          "unknown NER class"};
      }
      auto output = parse_sole_placeholder(content.substr(close + 3));
      if (!output) {
        return ParseError{ParseErrorKind::MalformedOperation, content_offset + close,
                          "NER output must be a single placeholder"};
      }
      return Segment(NerExtractOp{*source, *cls, *output, span});
    }
    if (auto wiki_pos = content.rfind(kWikiMarker); wiki_pos != std::string_view::npos) {
      auto output = parse_sole_placeholder(content.substr(wiki_pos + kWikiMarker.size()));
      if (!output) {
        return ParseError{ParseErrorKind::MalformedOperation, content_offset + wiki_pos,
                          "WikiSearch output must be a single placeholder"};
      }
      std::string query(trim_view(content.substr(0, wiki_pos)));
      if (query.empty()) {
        return ParseError{ParseErrorKind::MalformedOperation, content_offset,
                          "empty WikiSearch query"};
      }
      std::vector<Placeholder> refs;
      for (const auto& occ : find_placeholders(query)) refs.push_back(occ.placeholder);
      return Segment(WikiSearchOp{std::move(query), std::move(refs), *output, span});
    }
    return ParseError{ParseErrorKind::MalformedOperation, content_offset,
                      "expected a WikiSearch or NER operation"};
  }

  // Math: "expr = y<k>".
  auto eq = content.rfind('=');
  if (eq == std::string_view::npos) {
    return ParseError{ParseErrorKind::MalformedOperation, content_offset,
                      "expected '=' in derivation"};
  }
  auto result = parse_sole_placeholder(content.substr(eq + 1));
  if (!result) {
    return ParseError{ParseErrorKind::MalformedOperation, content_offset + eq,
                      "derivation result must be a single placeholder"};
  }
  auto expr = parse_expr_text(content.substr(0, eq), content_offset);
  if (!expr) return expr.error();
  return Segment(MathDerivation{expr.value(), *result, span});
}

struct SegmentUses {
  // (placeholder, offset) pairs in occurrence order.
  std::vector<std::pair<Placeholder, size_t>> uses;
  std::optional<std::pair<Placeholder, size_t>> definition;
};

SegmentUses segment_uses(const Segment& seg, size_t text_offset) {
  SegmentUses out;
  if (const auto* text = std::get_if<TextSegment>(&seg)) {
    for (const auto& occ : find_placeholders(text->text)) {
      out.uses.emplace_back(occ.placeholder, text_offset + occ.begin);
    }
  } else if (const auto* math = std::get_if<MathDerivation>(&seg)) {
    std::vector<Placeholder> refs;
    collect_expr_refs(*math->expression, refs);
    for (auto p : refs) out.uses.emplace_back(p, math->span.begin);
    out.definition = {math->result, math->span.begin};
  } else if (const auto* wiki = std::get_if<WikiSearchOp>(&seg)) {
    for (auto p : wiki->refs) out.uses.emplace_back(p, wiki->span.begin);
    out.definition = {wiki->output, wiki->span.begin};
  } else if (const auto* ner = std::get_if<NerExtractOp>(&seg)) {
    out.uses.emplace_back(ner->source, ner->span.begin);
    out.definition = {ner->output, ner->span.begin};
  }
  return out;
}

}  // namespace

Result<Trace, ParseError> parse_trace(std::string_view text, Domain domain) {
  Trace trace;
  trace.domain = domain;

  size_t pos = 0;
  size_t text_start = 0;
  std::vector<size_t> segment_offsets;  // source offset per segment

  auto flush_text = [&](size_t end) {
    if (end > text_start) {
      segment_offsets.push_back(text_start);
      trace.segments.push_back(TextSegment{std::string(text.substr(text_start, end - text_start))});
    }
  };

  while (pos < text.size()) {
    char c = text[pos];
    if (c == ']') {
      return ParseError{ParseErrorKind::UnbalancedBracket, pos, "']' without matching '['"};
    }
    if (c != '[') {
      ++pos;
      continue;
    }
    size_t open = pos;
    size_t scan = open + 1;
    while (scan < text.size() && text[scan] != '[' && text[scan] != ']') ++scan;
    if (scan == text.size()) {
      return ParseError{ParseErrorKind::UnbalancedBracket, open, "'[' is never closed"};
    }
    if (text[scan] == '[') {
      return ParseError{ParseErrorKind::UnbalancedBracket, scan, "nested '['"};
    }
    flush_text(open);
    SourceSpan span{open, scan + 1};
    auto op = parse_operation(text.substr(open + 1, scan - open - 1), open + 1, span, domain);
    if (!op) return op.error();
    segment_offsets.push_back(open);
    trace.segments.push_back(std::move(op.value()));
    pos = scan + 1;
    text_start = pos;
  }
  flush_text(text.size());

  // Single assignment and def-before-use, in segment order.
  std::set<Placeholder> defined;
  for (size_t i = 0; i < trace.segments.size(); ++i) {
    auto usage = segment_uses(trace.segments[i], segment_offsets[i]);
    for (const auto& [p, off] : usage.uses) {
      trace.used.insert(p);
      if (!defined.contains(p)) {
        return ParseError{ParseErrorKind::UseBeforeDefinition, off,
                          p.name() + " used before definition"};
      }
    }
    if (usage.definition) {
      const auto& [p, off] = *usage.definition;
      if (!defined.insert(p).second) {
        return ParseError{ParseErrorKind::DuplicateDefinition, off,
                          p.name() + " defined more than once"};
      }
    }
  }
  trace.defined = std::move(defined);
  return trace;
}

// ---------------------------------------------------------------------------
// Rendering and substitution

namespace {

std::string render_segment(const Segment& seg) {
  std::string out;
  if (const auto* text = std::get_if<TextSegment>(&seg)) {
    out = text->text;
  } else if (const auto* math = std::get_if<MathDerivation>(&seg)) {
    out = "[" + render_expr(*math->expression) + " = " + math->result.name() + "]";
  } else if (const auto* wiki = std::get_if<WikiSearchOp>(&seg)) {
    out = "[" + wiki->query + " -Wiki-> " + wiki->output.name() + "]";
  } else if (const auto* ner = std::get_if<NerExtractOp>(&seg)) {
    out = "[" + ner->source.name() + " -NER(" + std::string(entity_class_name(ner->entity_class)) +
          ")-> " + ner->output.name() + "]";
  }
  return out;
}

// A fraction or negative value spliced into an operand position would change
// the reading; parenthesize those.
bool value_needs_parens(const std::string& rendered) {
  return rendered.find('/') != std::string::npos || (!rendered.empty() && rendered[0] == '-');
}

class Substituter {
 public:
  Substituter(const std::map<int, std::string>& bindings) : bindings_(bindings) {}

  std::optional<std::string> lookup(Placeholder p) {
    auto it = bindings_.find(p.index);
    if (it == bindings_.end()) {
      if (std::find(missing_.begin(), missing_.end(), p) == missing_.end()) {
        missing_.push_back(p);
      }
      return std::nullopt;
    }
    return it->second;
  }

  std::string replace_in_text(std::string_view text) {
    std::string out;
    size_t last = 0;
    for (const auto& occ : find_placeholders(text)) {
      out += text.substr(last, occ.begin - last);
      out += lookup(occ.placeholder).value_or(occ.placeholder.name());
      last = occ.begin + occ.length;
    }
    out += text.substr(last);
    return out;
  }

  std::string render_expr_substituted(const Expr& e) {
    std::string out;
    render_rec(e, out);
    return out;
  }

  const std::vector<Placeholder>& missing() const { return missing_; }

 private:
  void render_rec(const Expr& e, std::string& out) {
    if (e.kind == Expr::Kind::Ref) {
      auto value = lookup(e.ref);
      if (!value) {
        out += e.ref.name();
        return;
      }
      bool parens = value_needs_parens(*value);
      if (parens) out += '(';
      out += *value;
      if (parens) out += ')';
      return;
    }
    if (e.kind == Expr::Kind::Constant) {
      out += e.constant.to_string();
      return;
    }
    if (e.kind == Expr::Kind::Neg) {
      out += '-';
      bool parens = precedence(*e.lhs) < precedence(e);
      if (parens) out += '(';
      render_rec(*e.lhs, out);
      if (parens) out += ')';
      return;
    }
    int my = precedence(e);
    bool lp = precedence(*e.lhs) < my;
    bool rp = precedence(*e.rhs) <= my;
    if (lp) out += '(';
    render_rec(*e.lhs, out);
    if (lp) out += ')';
    out += ' ';
    out += e.op;
    out += ' ';
    if (rp) out += '(';
    render_rec(*e.rhs, out);
    if (rp) out += ')';
  }

  const std::map<int, std::string>& bindings_;
  std::vector<Placeholder> missing_;
};

}  // namespace

std::string render_trace(const Trace& trace) {
  std::string out;
  for (const auto& seg : trace.segments) out += render_segment(seg);
  return out;
}

Result<std::string, SubstituteError> substitute(const Trace& trace,
                                                const std::map<int, std::string>& bindings) {
  Substituter sub(bindings);
  std::string out;
  for (const auto& seg : trace.segments) {
    if (const auto* text = std::get_if<TextSegment>(&seg)) {
      out += sub.replace_in_text(text->text);
    } else if (const auto* math = std::get_if<MathDerivation>(&seg)) {
      out += "[" + sub.render_expr_substituted(*math->expression) + " = " +
             sub.lookup(math->result).value_or(math->result.name()) + "]";
    } else if (const auto* wiki = std::get_if<WikiSearchOp>(&seg)) {
      out += "[" + sub.replace_in_text(wiki->query) + " -Wiki-> " +
             sub.lookup(wiki->output).value_or(wiki->output.name()) + "]";
    } else if (const auto* ner = std::get_if<NerExtractOp>(&seg)) {
      out += "[" + sub.lookup(ner->source).value_or(ner->source.name()) + " -NER(" +
             std::string(entity_class_name(ner->entity_class)) + ")-> " +
             sub.lookup(ner->output).value_or(ner->output.name()) + "]";
    }
  }
  if (!sub.missing().empty()) return SubstituteError{sub.missing()};
  return out;
}

// ---------------------------------------------------------------------------
// Equality

bool segment_equal(const Segment& a, const Segment& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ta = std::get_if<TextSegment>(&a)) {
    return ta->text == std::get<TextSegment>(b).text;
  }
  if (const auto* ma = std::get_if<MathDerivation>(&a)) {
    const auto& mb = std::get<MathDerivation>(b);
    return ma->result == mb.result && expr_equal(*ma->expression, *mb.expression);
  }
  if (const auto* wa = std::get_if<WikiSearchOp>(&a)) {
    const auto& wb = std::get<WikiSearchOp>(b);
    return wa->query == wb.query && wa->refs == wb.refs && wa->output == wb.output;
  }
  const auto& na = std::get<NerExtractOp>(a);
  const auto& nb = std::get<NerExtractOp>(b);
  return na.source == nb.source && na.entity_class == nb.entity_class && na.output == nb.output;
}

bool trace_equal(const Trace& a, const Trace& b) {
  if (a.domain != b.domain || a.segments.size() != b.segments.size()) return false;
  for (size_t i = 0; i < a.segments.size(); ++i) {
    if (!segment_equal(a.segments[i], b.segments[i])) return false;
  }
  return a.defined == b.defined && a.used == b.used;
}

size_t Trace::operation_count() const {
  size_t n = 0;
  for (const auto& seg : segments) {
    if (!std::holds_alternative<TextSegment>(seg)) ++n;
  }
  return n;
}

}  // namespace coa
