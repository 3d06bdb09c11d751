#include "curling/formulas.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace curling {

std::int64_t param(const Params& ps, const std::string& name) {
  for (const auto& [k, v] : ps) {
    if (k == name) return v;
  }
  throw std::invalid_argument("missing parameter '" + name + "'");
}

bool has_param(const Params& ps, const std::string& name) {
  return std::any_of(ps.begin(), ps.end(),
                     [&](const auto& kv) { return kv.first == name; });
}

namespace {

// l1..ln, required to be a contiguous block starting at l1
std::vector<std::int64_t> leaf_vector(const Params& ps) {
  std::vector<std::int64_t> l;
  for (std::size_t i = 1;; ++i) {
    const std::string key = "l" + std::to_string(i);
    if (!has_param(ps, key)) break;
    l.push_back(param(ps, key));
  }
  if (l.empty()) throw std::invalid_argument("missing parameter 'l1'");
  return l;
}

std::vector<FormulaInfo> build_catalog() {
  std::vector<FormulaInfo> cat;
  auto add = [&](FormulaInfo info) { cat.push_back(std::move(info)); };

  add({"F1", "complete", {"n"}, "n >= 1",
       "cn(K_n) = n; cnc(K_n) = n", true, true, false});
  add({"F2", "complete_bipartite", {"m", "n"}, "m >= 1; n >= 1; m != n",
       "cn(K_{m,n}) = max(m, n); cnc(K_{m,n}) = m*n", true, true, false});
  add({"F3", "complete_bipartite_balanced", {"n"}, "n >= 1",
       "cn(K_{n,n}) = 2n; cnc(K_{n,n}) = n^2", true, true, false});
  add({"F4", "path", {"n"}, "n >= 3",
       "cn(P_n) = n-2; cnc(P_n) = 2(n-2)", true, true, false});
  add({"F5", "cycle", {"n"}, "n >= 3",
       "cn(C_n) = n; cnc(C_n) = n", true, true, false});
  add({"F6", "wheel", {"n"}, "n >= 4",
       "cn(W_n) = n-1; cnc(W_n) = n-1, where W_n = C_{n-1} + K_1", true, true,
       false});
  add({"F7", "ladder", {"n"}, "n >= 2",
       "cn(L_n) = 2(n-2); cnc(L_n) = 8(n-2), where L_n = P_n x P_2", true, true,
       false});
  add({"F8", "path_power", {"n", "r"}, "n >= 3; 1 <= r <= n-1",
       "cn(P_n^r) = 2 if r = floor(n/2); n-2r if r < floor(n/2)-1; "
       "2(r+1)-n if floor(n/2) <= r <= n-1",
       true, false, false});
  add({"F9", "path_power", {"n", "r"}, "n >= 3; 1 <= r <= n",
       "cnc(P_n^r) = 2^r if r = floor(n/2); 2^r(n-2r) if r < floor(n/2)-1; "
       "2^(r-1)(r+1)-n if floor(n/2) <= r <= n-1",
       false, true, false});
  add({"F10", "cycle_power", {"n", "r"}, "n >= 3; 1 <= r <= floor(n/2)",
       "cn(C_n^r) = n", true, false, false});
  add({"F11", "tadpole_power", {"m", "n", "r"},
       "m >= 3; n >= 1; 1 <= r <= n + floor(m/2)",
       "cn(T_{m,n}^r) = m+n-2(2r-1)", true, false, false});
  add({"F12", "tadpole_power", {"m", "n", "r"},
       "m >= 3; n >= 1; 1 <= r <= n + floor(m/2)",
       "cnc(T_{m,n}^r) = r(r-1)(m+n-2(2r-1))", false, true, false});
  add({"F13", "binary_tree_power", {"h", "r"}, "h >= 2; 1 <= r <= 2h",
       "cn(T^r) = 2^h; cnc(T^r) = 2^C(h+1,2) for the complete binary tree of "
       "height h",
       true, true, false});
  add({"F14", "kary_tree_power", {"k", "h", "r"}, "k >= 2; h >= 1; 1 <= r <= 2h",
       "cn(T^r) = k^h; cnc(T^r) = prod_{i=0..h} k^i for the complete k-ary "
       "tree of height h",
       true, true, false});
  add({"F15", "caterpillar", {"l1", "...", "ln"},
       "spine length n >= 3; l1 >= 1; ln >= 1; li >= 0",
       "cn = max(eta, sum l_i), eta = max multiplicity among spine degrees",
       true, false, false});
  add({"F16", "caterpillar", {"l1", "...", "ln"},
       "spine length n >= 3; l1 >= 1; ln >= 1; li >= 0",
       "cn = max(eta, sum d(u_i) - 2(n-3))", true, false, false});
  add({"F17", "regular", {"cn"}, "cn >= 1",
       "cnc(G) = cn(G) for every regular graph G", false, true, false});
  add({"F18", "subsequence_count", {"ic"}, "ic >= 1",
       "vartheta(G) = 1 if ic = 1, else ic + ic!", false, false, true});
  add({"F19", "disjoint_union", {"components"},
       "finitely many nonempty connected components",
       "cn(U G_i) = max_i cn(G_i) if no degree value is shared between "
       "components; otherwise the largest summed multiplicity of any degree "
       "value",
       true, false, false});
  add({"F20", "power_at_diameter", {"n", "r", "d"}, "n >= 1; d >= 0; r >= max(1, d)",
       "cn(G^r) = cnc(G^r) = |V(G)| once r reaches the diameter d", true, true,
       false});
  return cat;
}

}  // namespace

const std::vector<FormulaInfo>& formula_catalog() {
  static const std::vector<FormulaInfo> cat = build_catalog();
  return cat;
}

const FormulaInfo& formula_info(const std::string& id) {
  for (const FormulaInfo& f : formula_catalog()) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown formula id '" + id + "'");
}

Prediction predict(const std::string& id, const Params& params) {
  formula_info(id);  // reject unknown ids up front

  Prediction out;
  out.formula_id = id;
  out.params = params;

  auto single = [](std::optional<std::set<BigInt>>& slot, BigInt v) {
    slot.emplace();
    slot->insert(std::move(v));
  };

  if (id == "F1") {
    const auto n = param(params, "n");
    if (n >= 1) {
      out.in_domain = true;
      single(out.cn, BigInt(n));
      single(out.cnc, BigInt(n));
      out.case_labels.push_back("n>=1");
    }
  } else if (id == "F2") {
    const auto m = param(params, "m"), n = param(params, "n");
    if (m >= 1 && n >= 1 && m != n) {
      out.in_domain = true;
      single(out.cn, BigInt(std::max(m, n)));
      single(out.cnc, BigInt(m) * n);
      out.case_labels.push_back("m!=n");
    }
  } else if (id == "F3") {
    const auto n = param(params, "n");
    if (n >= 1) {
      out.in_domain = true;
      single(out.cn, BigInt(2 * n));
      single(out.cnc, BigInt(n) * n);
      out.case_labels.push_back("n>=1");
    }
  } else if (id == "F4") {
    const auto n = param(params, "n");
    if (n >= 3) {
      out.in_domain = true;
      single(out.cn, BigInt(n - 2));
      single(out.cnc, BigInt(2) * (n - 2));
      out.case_labels.push_back("n>=3");
    }
  } else if (id == "F5") {
    const auto n = param(params, "n");
    if (n >= 3) {
      out.in_domain = true;
      single(out.cn, BigInt(n));
      single(out.cnc, BigInt(n));
      out.case_labels.push_back("n>=3");
    }
  } else if (id == "F6") {
    const auto n = param(params, "n");
    if (n >= 4) {
      out.in_domain = true;
      single(out.cn, BigInt(n - 1));
      single(out.cnc, BigInt(n - 1));
      out.case_labels.push_back("n>=4");
    }
  } else if (id == "F7") {
    const auto n = param(params, "n");
    if (n >= 2) {
      out.in_domain = true;
      single(out.cn, BigInt(2) * (n - 2));
      single(out.cnc, BigInt(8) * (n - 2));
      out.case_labels.push_back("n>=2");
    }
  } else if (id == "F8") {
    const auto n = param(params, "n"), r = param(params, "r");
    if (n >= 3 && r >= 1 && r <= n - 1) {
      out.in_domain = true;
      out.cn.emplace();
      const auto half = n / 2;
      if (r == half) {
        out.cn->insert(BigInt(2));
        out.case_labels.push_back("r=floor(n/2)");
      }
      if (r < half - 1) {
        out.cn->insert(BigInt(n - 2 * r));
        out.case_labels.push_back("r<floor(n/2)-1");
      }
      if (r >= half && r <= n - 1) {
        out.cn->insert(BigInt(2) * (r + 1) - n);
        out.case_labels.push_back("floor(n/2)<=r<=n-1");
      }
    }
  } else if (id == "F9") {
    const auto n = param(params, "n"), r = param(params, "r");
    if (n >= 3 && r >= 1 && r <= n) {
      out.in_domain = true;
      out.cnc.emplace();
      const auto half = n / 2;
      if (r == half) {
        out.cnc->insert(ipow(2, r));
        out.case_labels.push_back("r=floor(n/2)");
      }
      if (r < half - 1) {
        out.cnc->insert(ipow(2, r) * (n - 2 * r));
        out.case_labels.push_back("r<floor(n/2)-1");
      }
      if (r >= half && r <= n - 1) {
        out.cnc->insert(ipow(2, r - 1) * (r + 1) - n);
        out.case_labels.push_back("floor(n/2)<=r<=n-1");
      }
    }
  } else if (id == "F10") {
    const auto n = param(params, "n"), r = param(params, "r");
    if (n >= 3 && r >= 1 && r <= n / 2) {
      out.in_domain = true;
      single(out.cn, BigInt(n));
      out.case_labels.push_back("1<=r<=floor(n/2)");
    }
  } else if (id == "F11" || id == "F12") {
    const auto m = param(params, "m"), n = param(params, "n"), r = param(params, "r");
    if (m >= 3 && n >= 1 && r >= 1 && r <= n + m / 2) {
      out.in_domain = true;
      const BigInt base = BigInt(m) + n - BigInt(2) * (2 * r - 1);
      if (id == "F11") {
        single(out.cn, base);
      } else {
        single(out.cnc, BigInt(r) * (r - 1) * base);
      }
      out.case_labels.push_back("1<=r<=diam");
    }
  } else if (id == "F13") {
    const auto h = param(params, "h"), r = param(params, "r");
    if (h >= 2 && r >= 1 && r <= 2 * h) {
      out.in_domain = true;
      single(out.cn, ipow(2, h));
      single(out.cnc, ipow(2, h * (h + 1) / 2));
      out.case_labels.push_back("any power r");
    }
  } else if (id == "F14") {
    const auto k = param(params, "k"), h = param(params, "h"), r = param(params, "r");
    if (k >= 2 && h >= 1 && r >= 1 && r <= 2 * h) {
      out.in_domain = true;
      single(out.cn, ipow(k, h));
      single(out.cnc, ipow(k, h * (h + 1) / 2));
      out.case_labels.push_back("any power r");
    }
  } else if (id == "F15" || id == "F16") {
    const auto l = leaf_vector(params);
    const auto n = static_cast<std::int64_t>(l.size());
    const bool nonneg = std::all_of(l.begin(), l.end(), [](auto x) { return x >= 0; });
    if (n >= 3 && nonneg && l.front() >= 1 && l.back() >= 1) {
      out.in_domain = true;
      std::vector<std::int64_t> spine_deg(l.size());
      std::int64_t sum_l = 0, sum_d = 0;
      for (std::size_t i = 0; i < l.size(); ++i) {
        const std::int64_t ends = (i == 0 || i + 1 == l.size()) ? 1 : 2;
        spine_deg[i] = l[i] + ends;
        sum_l += l[i];
        sum_d += spine_deg[i];
      }
      std::map<std::int64_t, std::int64_t> mult;
      for (auto d : spine_deg) ++mult[d];
      std::int64_t eta = 0;
      for (auto [value, count] : mult) eta = std::max(eta, count);
      if (id == "F15") {
        single(out.cn, BigInt(std::max(eta, sum_l)));
        out.case_labels.push_back("max(eta,sum l_i)");
      } else {
        single(out.cn, BigInt(std::max(eta, sum_d - 2 * (n - 3))));
        out.case_labels.push_back("max(eta,sum d(u_i)-2(n-3))");
      }
    }
  } else if (id == "F17") {
    const auto cn = param(params, "cn");
    if (cn >= 1) {
      out.in_domain = true;
      single(out.cnc, BigInt(cn));
      out.case_labels.push_back("regular");
    }
  } else if (id == "F18") {
    const auto ic = param(params, "ic");
    if (ic >= 1) {
      out.in_domain = true;
      single(out.vartheta, ic == 1 ? BigInt(1) : BigInt(ic) + factorial(ic));
      out.case_labels.push_back(ic == 1 ? "ic=1" : "ic>1");
    }
  } else if (id == "F19") {
    // takes a component list, not integer parameters; see evaluate_union_rule
    out.in_domain = false;
  } else if (id == "F20") {
    const auto n = param(params, "n"), r = param(params, "r"), d = param(params, "d");
    if (n >= 1 && d >= 0 && r >= 1 && r >= d) {
      out.in_domain = true;
      single(out.cn, BigInt(n));
      single(out.cnc, BigInt(n));
      out.case_labels.push_back("r>=diam");
    }
  }
  return out;
}

UnionRuleResult evaluate_union_rule(std::span<const Graph> components) {
  return union_rule(components);
}

std::string catalog_json() {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const FormulaInfo& f : formula_catalog()) {
    nlohmann::ordered_json item;
    item["id"] = f.id;
    item["family"] = f.family;
    item["params"] = f.params;
    item["domain"] = f.domain;
    item["anchor"] = f.claim;
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

}  // namespace curling
