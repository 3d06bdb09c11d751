#include <doctest.h>

#include <set>

#include "curling/formulas.hpp"

using curling::BigInt;
using curling::Params;
using curling::Prediction;

namespace {

std::set<BigInt> ints(std::initializer_list<long long> vs) {
  std::set<BigInt> out;
  for (long long v : vs) out.insert(BigInt(v));
  return out;
}

}  // namespace

TEST_CASE("catalog lists twenty formulas with unique ids") {
  const auto& cat = curling::formula_catalog();
  REQUIRE(cat.size() == 20);
  std::set<std::string> ids;
  for (const auto& info : cat) {
    CHECK(!info.family.empty());
    CHECK(!info.domain.empty());
    CHECK(!info.claim.empty());
    ids.insert(info.id);
  }
  CHECK(ids.size() == 20);
  CHECK(ids.count("F1") == 1);
  CHECK(ids.count("F20") == 1);
  CHECK(curling::formula_info("F7").family == "ladder");
  CHECK_THROWS_AS(curling::formula_info("F99"), std::invalid_argument);
  CHECK_THROWS_AS(curling::predict("F99", {}), std::invalid_argument);
  CHECK_THROWS_AS(curling::predict("F1", {}), std::invalid_argument);  // missing n
}

TEST_CASE("closed families predict single values") {
  CHECK(*curling::predict("F1", {{"n", 5}}).cn == ints({5}));
  CHECK(*curling::predict("F1", {{"n", 5}}).cnc == ints({5}));
  CHECK(*curling::predict("F2", {{"m", 2}, {"n", 3}}).cn == ints({3}));
  CHECK(*curling::predict("F2", {{"m", 2}, {"n", 3}}).cnc == ints({6}));
  CHECK(!curling::predict("F2", {{"m", 3}, {"n", 3}}).in_domain);
  CHECK(*curling::predict("F3", {{"n", 4}}).cn == ints({8}));
  CHECK(*curling::predict("F3", {{"n", 4}}).cnc == ints({16}));
  CHECK(*curling::predict("F4", {{"n", 3}}).cn == ints({1}));
  CHECK(*curling::predict("F5", {{"n", 8}}).cnc == ints({8}));
  CHECK(*curling::predict("F6", {{"n", 4}}).cn == ints({3}));
  CHECK(*curling::predict("F7", {{"n", 2}}).cn == ints({0}));
  CHECK(*curling::predict("F7", {{"n", 5}}).cnc == ints({24}));
  CHECK(!curling::predict("F4", {{"n", 2}}).in_domain);
}

TEST_CASE("path-power cases overlap and leave gaps") {
  const Prediction amb = curling::predict("F8", {{"n", 7}, {"r", 3}});
  REQUIRE(amb.in_domain);
  CHECK(*amb.cn == ints({1, 2}));  // r=floor(n/2) and the third case both fire
  CHECK(amb.case_labels.size() == 2);

  const Prediction gap = curling::predict("F8", {{"n", 6}, {"r", 2}});
  REQUIRE(gap.in_domain);
  REQUIRE(gap.cn.has_value());
  CHECK(gap.cn->empty());  // r = floor(n/2)-1 is matched by no case
  CHECK(gap.case_labels.empty());

  CHECK(*curling::predict("F8", {{"n", 10}, {"r", 2}}).cn == ints({6}));
  CHECK(*curling::predict("F8", {{"n", 6}, {"r", 5}}).cn == ints({6}));
  CHECK(!curling::predict("F8", {{"n", 6}, {"r", 6}}).in_domain);
  CHECK(!curling::predict("F8", {{"n", 2}, {"r", 1}}).in_domain);

  const Prediction nine = curling::predict("F9", {{"n", 7}, {"r", 3}});
  CHECK(*nine.cnc == ints({8, 9}));
  CHECK(!nine.cn.has_value());
  // the third case can go negative; it is evaluated verbatim
  CHECK(*curling::predict("F9", {{"n", 12}, {"r", 6}}).cnc == ints({64, 212}));
  CHECK(curling::predict("F9", {{"n", 9}, {"r", 3}}).cnc->empty());
  // r = n sits in the declared domain but no case covers it
  CHECK(curling::predict("F9", {{"n", 5}, {"r", 5}}).cnc->empty());
}

TEST_CASE("power families") {
  CHECK(*curling::predict("F10", {{"n", 6}, {"r", 3}}).cn == ints({6}));
  CHECK(!curling::predict("F10", {{"n", 6}, {"r", 4}}).in_domain);

  CHECK(*curling::predict("F11", {{"m", 5}, {"n", 4}, {"r", 1}}).cn == ints({7}));
  CHECK(*curling::predict("F11", {{"m", 5}, {"n", 4}, {"r", 2}}).cn == ints({3}));
  CHECK(*curling::predict("F11", {{"m", 5}, {"n", 4}, {"r", 3}}).cn == ints({-1}));
  CHECK(!curling::predict("F11", {{"m", 5}, {"n", 4}, {"r", 7}}).in_domain);
  CHECK(*curling::predict("F12", {{"m", 5}, {"n", 4}, {"r", 1}}).cnc == ints({0}));
  CHECK(*curling::predict("F12", {{"m", 5}, {"n", 4}, {"r", 2}}).cnc == ints({6}));

  const Prediction t13 = curling::predict("F13", {{"h", 5}, {"r", 1}});
  CHECK(*t13.cn == ints({32}));
  CHECK(*t13.cnc == ints({32768}));  // 2^(5*6/2)
  CHECK(!curling::predict("F13", {{"h", 5}, {"r", 11}}).in_domain);
  CHECK(!curling::predict("F13", {{"h", 1}, {"r", 1}}).in_domain);

  const Prediction t14 = curling::predict("F14", {{"k", 3}, {"h", 2}, {"r", 2}});
  CHECK(*t14.cn == ints({9}));
  CHECK(*t14.cnc == ints({27}));
  CHECK(!curling::predict("F14", {{"k", 1}, {"h", 2}, {"r", 1}}).in_domain);

  CHECK(*curling::predict("F20", {{"n", 7}, {"r", 6}, {"d", 6}}).cn == ints({7}));
  CHECK(*curling::predict("F20", {{"n", 7}, {"r", 6}, {"d", 6}}).cnc == ints({7}));
  CHECK(!curling::predict("F20", {{"n", 7}, {"r", 5}, {"d", 6}}).in_domain);
}

TEST_CASE("caterpillar lemmas") {
  const Params p = {{"l1", 1}, {"l2", 0}, {"l3", 1}};
  CHECK(*curling::predict("F15", p).cn == ints({3}));   // max(eta, sum l)
  CHECK(*curling::predict("F16", p).cn == ints({6}));   // sum d(u_i) - 2(n-3)
  const Params q = {{"l1", 2}, {"l2", 1}, {"l3", 3}, {"l4", 1}};
  CHECK(*curling::predict("F15", q).cn == ints({7}));
  const Params bare_end = {{"l1", 0}, {"l2", 2}, {"l3", 1}};
  CHECK(!curling::predict("F15", bare_end).in_domain);
  const Params two_spine = {{"l1", 1}, {"l2", 1}};
  CHECK(!curling::predict("F15", two_spine).in_domain);
}

TEST_CASE("relations between invariants") {
  CHECK(*curling::predict("F17", {{"cn", 4}}).cnc == ints({4}));
  CHECK(!curling::predict("F17", {{"cn", 0}}).in_domain);

  CHECK(*curling::predict("F18", {{"ic", 1}}).vartheta == ints({1}));
  CHECK(*curling::predict("F18", {{"ic", 3}}).vartheta == ints({9}));
  CHECK(*curling::predict("F18", {{"ic", 5}}).vartheta == ints({125}));  // 5 + 120
  CHECK(!curling::predict("F18", {{"ic", 0}}).in_domain);

  // F19 takes a component list, not integer parameters
  CHECK(!curling::predict("F19", {}).in_domain);
  const std::vector<curling::Graph> comps = {curling::complete(3), curling::path(4)};
  CHECK(curling::evaluate_union_rule(comps).rule_value == 5);
}

TEST_CASE("predict is total over integer grids") {
  const auto& cat = curling::formula_catalog();
  for (const auto& info : cat) {
    if (info.id == "F19") continue;
    for (std::int64_t a = -2; a <= 6; ++a) {
      for (std::int64_t b = -2; b <= 6; ++b) {
        for (std::int64_t c = -2; c <= 6; ++c) {
          Params ps;
          const std::int64_t vals[] = {a, b, c};
          for (std::size_t i = 0; i < info.params.size() && i < 3; ++i) {
            ps.emplace_back(info.params[i], vals[i]);
          }
          if (info.params.size() > 3) break;
          if (info.id == "F15" || info.id == "F16") {
            ps = {{"l1", a}, {"l2", b}, {"l3", c}};
          }
          const Prediction pred = curling::predict(info.id, ps);
          CHECK(pred.formula_id == info.id);
          if (pred.in_domain) {
            CHECK((pred.cn.has_value() || pred.cnc.has_value() ||
                   pred.vartheta.has_value()));
          } else {
            CHECK(!pred.cn.has_value());
            CHECK(!pred.cnc.has_value());
            CHECK(!pred.vartheta.has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("catalog json lists every formula") {
  const std::string js = curling::catalog_json();
  for (int i = 1; i <= 20; ++i) {
    CHECK(js.find("\"F" + std::to_string(i) + "\"") != std::string::npos);
  }
  CHECK(js.find("\"family\"") != std::string::npos);
  CHECK(js.find("\"domain\"") != std::string::npos);
}
