#include "coa/math_solver.hpp"

#include <algorithm>
#include <deque>

namespace coa {

std::string_view solve_error_kind_name(SolveErrorKind k) {
  switch (k) {
    case SolveErrorKind::CyclicDependency: return "CyclicDependency";
    case SolveErrorKind::Redefinition: return "Redefinition";
    case SolveErrorKind::DivisionByZero: return "DivisionByZero";
    case SolveErrorKind::UnboundPlaceholder: return "UnboundPlaceholder";
    case SolveErrorKind::NoFinalAnswer: return "NoFinalAnswer";
  }
  return "NoFinalAnswer";
}

BoundValue BoundValue::of_number(Rational v) {
  BoundValue b;
  b.kind = Kind::Number;
  b.number = std::move(v);
  return b;
}

BoundValue BoundValue::of_article(Article a) {
  BoundValue b;
  b.kind = Kind::Article;
  b.article = std::move(a);
  return b;
}

BoundValue BoundValue::of_entity(std::string surface) {
  BoundValue b;
  b.kind = Kind::Entity;
  b.entity = std::move(surface);
  return b;
}

std::string BoundValue::rendered() const {
  switch (kind) {
    case Kind::Number: return number.to_string();
    case Kind::Article: return article.title;
    case Kind::Entity: return entity;
  }
  return {};
}

Result<EquationSystem, SolveError> extract_system(const Trace& trace) {
  EquationSystem system;
  for (const auto& seg : trace.segments) {
    const auto* math = std::get_if<MathDerivation>(&seg);
    if (!math) continue;
    std::vector<Placeholder> refs;
    collect_expr_refs(*math->expression, refs);
    if (std::find(refs.begin(), refs.end(), math->result) != refs.end()) {
      return SolveError{SolveErrorKind::CyclicDependency, {math->result},
                        math->result.name() + " refers to itself"};
    }
    if (system.dep_graph.contains(math->result)) {
      return SolveError{SolveErrorKind::Redefinition, {math->result},
                        math->result.name() + " defined more than once"};
    }
    std::sort(refs.begin(), refs.end());
    refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
    system.dep_graph[math->result] = refs;
    system.derivations.push_back({math->expression, math->result});
  }

  // Cycle check over defined placeholders (edges into undefined operands are
  // dangling, reported later by solve as UnboundPlaceholder).
  std::map<Placeholder, int> state;  // 0 unvisited, 1 on stack, 2 done
  std::vector<Placeholder> stack;
  auto dfs = [&](auto&& self, Placeholder p) -> std::optional<SolveError> {
    state[p] = 1;
    stack.push_back(p);
    for (auto dep : system.dep_graph.at(p)) {
      if (!system.dep_graph.contains(dep)) continue;
      int s = state.count(dep) ? state[dep] : 0;
      if (s == 1) {
        auto at = std::find(stack.begin(), stack.end(), dep);
        return SolveError{SolveErrorKind::CyclicDependency,
                          std::vector<Placeholder>(at, stack.end()), "dependency cycle"};
      }
      if (s == 0) {
        if (auto err = self(self, dep)) return err;
      }
    }
    stack.pop_back();
    state[p] = 2;
    return std::nullopt;
  };
  for (const auto& [p, _] : system.dep_graph) {
    if ((state.count(p) ? state[p] : 0) == 0) {
      if (auto err = dfs(dfs, p)) return *err;
    }
  }
  return system;
}

Result<Rational, SolveError> evaluate_expr(const Expr& expr,
                                           const std::map<Placeholder, Rational>& bindings) {
  switch (expr.kind) {
    case Expr::Kind::Constant:
      return expr.constant;
    case Expr::Kind::Ref: {
      auto it = bindings.find(expr.ref);
      if (it == bindings.end()) {
        return SolveError{SolveErrorKind::UnboundPlaceholder, {expr.ref},
                          expr.ref.name() + " has no value"};
      }
      return it->second;
    }
    case Expr::Kind::Neg: {
      auto v = evaluate_expr(*expr.lhs, bindings);
      if (!v) return v;
      return -v.value();
    }
    case Expr::Kind::Binary: {
      auto l = evaluate_expr(*expr.lhs, bindings);
      if (!l) return l;
      auto r = evaluate_expr(*expr.rhs, bindings);
      if (!r) return r;
      switch (expr.op) {
        case '+': return l.value() + r.value();
        case '-': return l.value() - r.value();
        case '*': return l.value() * r.value();
        case '/':
          if (r.value().is_zero()) {
            return SolveError{SolveErrorKind::DivisionByZero, {}, "division by zero"};
          }
          return l.value() / r.value();
      }
      return SolveError{SolveErrorKind::NoFinalAnswer, {}, "bad operator"};
    }
  }
  return SolveError{SolveErrorKind::NoFinalAnswer, {}, "bad expression"};
}

Result<std::map<Placeholder, Rational>, SolveError> solve(const EquationSystem& system) {
  // Kahn's ordering over result -> operand edges.
  std::map<Placeholder, size_t> pending;  // unresolved defined operands per derivation result
  std::map<Placeholder, std::vector<size_t>> dependents;  // operand -> derivation indices
  for (size_t i = 0; i < system.derivations.size(); ++i) {
    const auto& d = system.derivations[i];
    auto it = system.dep_graph.find(d.result);
    size_t defined_deps = 0;
    if (it != system.dep_graph.end()) {
      for (auto dep : it->second) {
        if (system.dep_graph.contains(dep)) {
          ++defined_deps;
          dependents[dep].push_back(i);
        }
      }
    }
    pending[d.result] = defined_deps;
  }

  std::deque<size_t> ready;
  for (size_t i = 0; i < system.derivations.size(); ++i) {
    if (pending[system.derivations[i].result] == 0) ready.push_back(i);
  }

  std::map<Placeholder, Rational> bindings;
  size_t solved = 0;
  while (!ready.empty()) {
    size_t i = ready.front();
    ready.pop_front();
    const auto& d = system.derivations[i];
    auto value = evaluate_expr(*d.expression, bindings);
    if (!value) {
      auto err = value.error();
      if (err.kind == SolveErrorKind::DivisionByZero && err.placeholders.empty()) {
        err.placeholders = {d.result};
        err.detail = "division by zero while solving " + d.result.name();
      }
      return err;
    }
    bindings.emplace(d.result, value.value());
    ++solved;
    auto dep_it = dependents.find(d.result);
    if (dep_it != dependents.end()) {
      for (size_t j : dep_it->second) {
        if (--pending[system.derivations[j].result] == 0) ready.push_back(j);
      }
    }
  }

  if (solved != system.derivations.size()) {
    std::vector<Placeholder> stuck;
    for (const auto& d : system.derivations) {
      if (!bindings.contains(d.result)) stuck.push_back(d.result);
    }
    return SolveError{SolveErrorKind::CyclicDependency, stuck,
                      "system is not forward-evaluable"};
  }
  return bindings;
}

std::optional<Placeholder> final_answer_placeholder(const Trace& trace) {
  std::optional<Placeholder> last_text_ref;
  std::optional<Placeholder> last_defined;
  for (const auto& seg : trace.segments) {
    if (const auto* text = std::get_if<TextSegment>(&seg)) {
      auto occ = find_placeholders(text->text);
      if (!occ.empty()) last_text_ref = occ.back().placeholder;
    } else if (const auto* math = std::get_if<MathDerivation>(&seg)) {
      last_defined = math->result;
    } else if (const auto* wiki = std::get_if<WikiSearchOp>(&seg)) {
      last_defined = wiki->output;
    } else if (const auto* ner = std::get_if<NerExtractOp>(&seg)) {
      last_defined = ner->output;
    }
  }
  return last_text_ref ? last_text_ref : last_defined;
}

Result<ReifiedTrace, SolveError> reify_math(const Trace& trace) {
  auto system = extract_system(trace);
  if (!system) return system.error();
  if (system.value().derivations.empty()) {
    return SolveError{SolveErrorKind::NoFinalAnswer, {}, "trace has no derivations"};
  }
  auto values = solve(system.value());
  if (!values) return values.error();

  ReifiedTrace out;
  out.trace = trace;
  std::map<int, std::string> rendered;
  for (const auto& [p, v] : values.value()) {
    out.bindings.emplace(p.index, BoundValue::of_number(v));
    rendered.emplace(p.index, v.to_string());
  }
  auto text = substitute(trace, rendered);
  if (!text) {
    return SolveError{SolveErrorKind::UnboundPlaceholder, text.error().missing,
                      "trace references unsolved placeholders"};
  }
  out.reified_text = std::move(text.value());

  auto answer_ref = final_answer_placeholder(trace);
  if (!answer_ref || !values.value().contains(*answer_ref)) {
    return SolveError{SolveErrorKind::NoFinalAnswer, {}, "no answer placeholder"};
  }
  out.final_answer = values.value().at(*answer_ref).to_string();
  return out;
}

}  // namespace coa
