#pragma once

#include <span>

#include "curling/graph.hpp"
#include "curling/sequence.hpp"

namespace curling {

// Runs of a multiset arranged canonically: sorted by exponent ascending,
// ties by value ascending. This puts a run of maximal exponent last, so the
// curling number of the expanded string equals the largest multiplicity.
RunDecomposition canonical_runs(std::span<const Int> values);

// Degree sequence of g arranged canonically. Throws on an empty graph.
IntSeq canonical_degree_string(const Graph& g);

struct CurlingReport {
  int cn = 0;        // curling number of the canonical degree string
  BigInt cnc;        // product of run exponents
  int ic = 0;        // number of runs (distinct degree values)
  BigInt vartheta;   // 1 if ic == 1, else ic + ic!
  RunDecomposition runs;
};

CurlingReport curling_report(const Graph& g);
int graph_curling_number(const Graph& g);
BigInt graph_compound_curling(const Graph& g);
int identity_subsequence_count(const Graph& g);
BigInt curling_subsequence_count(const Graph& g);

struct UnionRuleResult {
  int rule_value = 0;      // value the union rule predicts
  int computed_value = 0;  // curling number of the actual disjoint union
  bool agree = false;
  bool shared_degree_value = false;  // some degree occurs in >= 2 components
};

// Components must be nonempty and connected. Rule: with no degree value
// shared between components, the union's curling number is the max of the
// per-component ones; otherwise it is the largest summed multiplicity of
// any degree value.
UnionRuleResult union_rule(std::span<const Graph> components);

// Exhaustive maximum of curling_number over all distinct arrangements of
// the multiset. Factorial cost, so the size is capped at 9.
int max_arrangement_cn(std::span<const Int> degrees);

}  // namespace curling
