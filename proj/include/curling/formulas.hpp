#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "curling/bigint.hpp"
#include "curling/invariants.hpp"

namespace curling {

// Named integer parameters, in display order.
using Params = std::vector<std::pair<std::string, std::int64_t>>;

std::int64_t param(const Params& ps, const std::string& name);
bool has_param(const Params& ps, const std::string& name);

// Result of evaluating one cataloged formula at a parameter point. A slot
// that is nullopt means the formula says nothing about that quantity; an
// engaged but empty set means the point is in domain yet matched by no
// case (a gap); more than one element means overlapping cases.
struct Prediction {
  std::string formula_id;
  Params params;
  bool in_domain = false;
  std::optional<std::set<BigInt>> cn;
  std::optional<std::set<BigInt>> cnc;
  std::optional<std::set<BigInt>> vartheta;
  std::vector<std::string> case_labels;
};

struct FormulaInfo {
  std::string id;
  std::string family;
  std::vector<std::string> params;
  std::string domain;
  std::string claim;  // the formula itself, in ascii; used as the catalog anchor
  bool predicts_cn = false;
  bool predicts_cnc = false;
  bool predicts_vartheta = false;
};

// The twenty cataloged closed forms, F1..F20.
const std::vector<FormulaInfo>& formula_catalog();
const FormulaInfo& formula_info(const std::string& id);  // throws on unknown id

// Evaluates the formula verbatim: guards and expressions as cataloged, no
// corrections. Total over in-domain points (never throws for those); out of
// domain yields in_domain = false with no engaged slots. Throws
// std::invalid_argument for unknown ids or missing parameters.
Prediction predict(const std::string& id, const Params& params);

// F19 takes a component list rather than integer parameters, so it is
// evaluated through this wrapper.
UnionRuleResult evaluate_union_rule(std::span<const Graph> components);

// Catalog as a JSON array of {id, family, params, domain, anchor}.
std::string catalog_json();

}  // namespace curling
