#pragma once

#include <map>
#include <string>
#include <vector>

#include "coa/rational.hpp"
#include "coa/reified.hpp"
#include "coa/result.hpp"
#include "coa/trace.hpp"

namespace coa {

/// One "[expr = y<k>]" assignment lifted out of a trace.
struct Derivation {
  ExprPtr expression;
  Placeholder result;
};

/// All derivations of a trace plus the result -> operand dependency edges.
struct EquationSystem {
  std::vector<Derivation> derivations;  // trace order
  std::map<Placeholder, std::vector<Placeholder>> dep_graph;
};

enum class SolveErrorKind {
  CyclicDependency,
  Redefinition,
  DivisionByZero,
  UnboundPlaceholder,
  NoFinalAnswer,
};

std::string_view solve_error_kind_name(SolveErrorKind k);

struct SolveError {
  SolveErrorKind kind = SolveErrorKind::NoFinalAnswer;
  std::vector<Placeholder> placeholders;  // cycle members / offending derivation result
  std::string detail;
};

/// Lifts the derivations out of a math trace in order and builds the
/// dependency graph. Rejects redefinitions, self-references and cycles.
Result<EquationSystem, SolveError> extract_system(const Trace& trace);

/// Exact forward evaluation in topological order. Derivation order does not
/// matter; any topological reordering of the same system solves identically.
Result<std::map<Placeholder, Rational>, SolveError> solve(const EquationSystem& system);

/// Evaluates one expression against existing bindings.
Result<Rational, SolveError> evaluate_expr(const Expr& expr,
                                           const std::map<Placeholder, Rational>& bindings);

/// The placeholder the trace's trailing answer statement refers to: the last
/// placeholder occurrence in plain text, else the last-defined placeholder.
std::optional<Placeholder> final_answer_placeholder(const Trace& trace);

/// extract -> solve -> substitute; the final answer is the value of
/// final_answer_placeholder. Fails with NoFinalAnswer on traces without
/// derivations.
Result<ReifiedTrace, SolveError> reify_math(const Trace& trace);

}  // namespace coa
