#include "curling/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace curling {

namespace {
constexpr const char* kEmptyGraphError = "undefined on empty graph";
}

RunDecomposition canonical_runs(std::span<const Int> values) {
  std::map<Int, std::int64_t> mult;
  for (Int v : values) ++mult[v];
  RunDecomposition runs;
  runs.reserve(mult.size());
  for (auto [value, count] : mult) runs.push_back({value, count});
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return a.value < b.value;
  });
  return runs;
}

IntSeq canonical_degree_string(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument(kEmptyGraphError);
  const std::vector<int> deg = degree_sequence(g);
  const IntSeq values(deg.begin(), deg.end());
  return expand_runs(canonical_runs(values));
}

CurlingReport curling_report(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument(kEmptyGraphError);
  const std::vector<int> deg = degree_sequence(g);
  const IntSeq values(deg.begin(), deg.end());

  CurlingReport rep;
  rep.runs = canonical_runs(values);
  rep.cn = curling_number(expand_runs(rep.runs));
  rep.cnc = compound_curling(rep.runs);
  rep.ic = static_cast<int>(rep.runs.size());
  rep.vartheta = rep.ic == 1 ? BigInt(1) : BigInt(rep.ic) + factorial(rep.ic);
  return rep;
}

int graph_curling_number(const Graph& g) { return curling_report(g).cn; }
BigInt graph_compound_curling(const Graph& g) { return curling_report(g).cnc; }
int identity_subsequence_count(const Graph& g) { return curling_report(g).ic; }
BigInt curling_subsequence_count(const Graph& g) { return curling_report(g).vartheta; }

UnionRuleResult union_rule(std::span<const Graph> components) {
  if (components.empty()) {
    throw std::invalid_argument("undefined on empty component list");
  }
  for (const Graph& c : components) {
    if (c.order() == 0) throw std::invalid_argument("components must be nonempty");
    if (!is_connected(c)) throw std::invalid_argument("components must be connected");
  }

  // total multiplicity of each degree value and in how many components it occurs
  std::map<int, std::pair<std::int64_t, int>> by_value;
  for (const Graph& c : components) {
    std::map<int, std::int64_t> local;
    for (int u = 0; u < c.order(); ++u) ++local[c.degree(u)];
    for (auto [value, count] : local) {
      auto& slot = by_value[value];
      slot.first += count;
      ++slot.second;
    }
  }

  UnionRuleResult res;
  for (auto& [value, slot] : by_value) {
    res.shared_degree_value = res.shared_degree_value || slot.second >= 2;
  }
  if (res.shared_degree_value) {
    std::int64_t best = 0;
    for (auto& [value, slot] : by_value) best = std::max(best, slot.first);
    res.rule_value = static_cast<int>(best);
  } else {
    int best = 0;
    for (const Graph& c : components) best = std::max(best, graph_curling_number(c));
    res.rule_value = best;
  }

  std::vector<Graph> copy(components.begin(), components.end());
  res.computed_value = graph_curling_number(disjoint_union(copy));
  res.agree = res.rule_value == res.computed_value;
  return res;
}

int max_arrangement_cn(std::span<const Int> degrees) {
  if (degrees.empty() || degrees.size() > 9) {
    throw std::invalid_argument("arrangement search handles multisets of size 1..9");
  }
  IntSeq perm(degrees.begin(), degrees.end());
  std::sort(perm.begin(), perm.end());
  int best = 1;
  do {
    best = std::max(best, curling_number_naive(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace curling
