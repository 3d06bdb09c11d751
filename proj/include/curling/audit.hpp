#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curling/formulas.hpp"

namespace curling {

enum class Verdict { match, ambiguous_match, gap, mismatch, out_of_domain };
std::string to_string(Verdict v);

// One parameter point: the formula's prediction next to ground truth
// computed from an explicitly constructed graph. For out_of_domain points
// no graph is built and the computed fields stay zero.
struct AuditRecord {
  std::string formula_id;
  Params params;
  std::optional<std::set<BigInt>> predicted_cn;
  std::optional<std::set<BigInt>> predicted_cnc;
  std::int64_t computed_cn = 0;
  BigInt computed_cnc;
  Verdict verdict = Verdict::out_of_domain;
};

struct NamedRange {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // inclusive
};

struct SweepSpec {
  std::string formula_id;
  std::vector<NamedRange> ranges;
  // caterpillar sweeps (F15/F16): exhaustive spine lengths come from the
  // "n" range (default 3..6) with per-vertex leaf counts 0..leaf_max,
  // followed by random_caterpillars seeded larger instances
  int leaf_max = 3;
  int random_caterpillars = 100;
  int random_spine_max = 12;
  int random_leaf_max = 5;
  // union sweeps (F19): component count from the "m" range (default 2..4),
  // trials per count from the "t" range (default 1..25)
  int union_max_vertices = 6;
  std::uint64_t seed = 0;
  std::size_t point_cap = 10000;
  bool parallel = true;
};

// Evaluates the sweep. Points are enumerated lexicographically over the
// formula's parameter tuple, and the output order never depends on the
// parallel flag. Throws if the sweep would exceed spec.point_cap points,
// naming the cap.
std::vector<AuditRecord> run_audit(const SweepSpec& spec);

enum class ReportFormat { json, csv, markdown };
std::string render(const SweepSpec& spec, const std::vector<AuditRecord>& records,
                   ReportFormat format);

// Checked-in ledger of parameter points where the cataloged formulas are
// known to disagree with ground truth. Returns the ledger note when the
// point is covered.
std::optional<std::string> expected_discrepancy(const std::string& formula_id,
                                                const Params& params);

// Records with verdict mismatch or gap that the ledger does not cover.
std::vector<const AuditRecord*> unexpected_defects(
    const std::vector<AuditRecord>& records);

// --- family summary table -------------------------------------------------

struct TableRowRange {
  std::string formula_id;
  std::vector<NamedRange> ranges;
};

// Rows F1..F7 with each family's full parameter range up to max_n
// (bipartite rows enumerate m < n).
std::vector<TableRowRange> default_table_ranges(int max_n);
std::vector<AuditRecord> reproduce_table(const std::vector<TableRowRange>& rows);
std::string render_table_markdown(const std::vector<AuditRecord>& records);

// --- analytic degree profiles ----------------------------------------------
//
// Closed-form degree computations used by the ledger predicates and verified
// against BFS-built graphs in the tests. They never feed ground truth.

// Degree in power(complete_kary_tree(k, h), r) of a vertex at the given depth.
std::int64_t kary_power_level_degree(int k, int h, int r, int depth);

// True when two levels of the tree share a degree in the r-th power (the
// point where the per-level run structure behind F13/F14 collapses).
bool kary_power_has_level_collision(int k, int h, int r);

// Degree multiset of power(tadpole(m, n), r), ascending.
std::vector<std::int64_t> tadpole_power_degrees(int m, int n, int r);

}  // namespace curling
