#pragma once

#include <string>
#include <vector>

#include "ihstar/formula.hpp"
#include "ihstar/measure.hpp"

namespace ihstar {

enum class RewriteCase {
  Case1,
  Case2,
  Case3,
  Case4a,
  Case4b,
  Case4ci,
  Case4cii,
  Case4ciii,
  Case4civFirst,   // bracketed disjunct already below the input measure
  Case4civSecond,  // fallback through the primed bracket
};

std::string rewrite_case_name(RewriteCase c);

/// One rewriting step: which case fired, the measure of the input, and the
/// subgoals handed to recursive calls. Every subgoal's measure is strictly
/// below the input measure; the rewriter aborts otherwise.
struct RewriteStep {
  RewriteCase rule;
  MeasureTuple input_measure;
  std::vector<Formula> subgoals;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;

  /// Line-oriented dump: `case <label> <measure> subgoals=<n>` per step.
  std::string dump() const;
};

struct ApproxResult {
  Formula result;
  RewriteTrace trace;
};

/// NNIL_box approximation A*. The result is an NNIL_box formula with
/// IPC_box |- A* -> A. Boxed subformulas are treated as atoms.
ApproxResult nnil_star(const Formula& a);

/// TNNIL approximation A+: abstract the outermost boxes, star the skeleton,
/// substitute the boxed approximations back. Computed by recursion on box
/// depth with memoization over structurally equal boxed subformulas.
Formula tnnil_plus(const Formula& a);

/// TNNIL_box approximation A-: only the outermost boxed parts are rewritten,
/// the skeleton stays untouched. IPC_box |- A+ -> A-.
Formula tnnil_minus(const Formula& a);

/// Single-pass dagger variant that recurses into boxes at case 1.
Formula tnnil_dagger(const Formula& a);
ApproxResult tnnil_dagger_traced(const Formula& a);

}  // namespace ihstar
