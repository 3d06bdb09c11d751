#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "curling/audit.hpp"
#include "curling/formulas.hpp"
#include "curling/invariants.hpp"
#include "curling/sequence.hpp"

namespace {

using ojson = nlohmann::ordered_json;

int to_int(std::int64_t v, const std::string& what) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw std::invalid_argument(what + " out of range: " + std::to_string(v));
  }
  return static_cast<int>(v);
}

curling::IntSeq parse_sequence(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == ';') c = ' ';
  }
  std::istringstream is(text);
  curling::IntSeq seq;
  std::int64_t v = 0;
  while (is >> v) seq.push_back(v);
  if (!is.eof()) throw std::invalid_argument("could not parse sequence '" + text + "'");
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  return seq;
}

std::string join_sequence(const curling::IntSeq& seq) {
  std::ostringstream os;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) os << ',';
    os << seq[i];
  }
  return os.str();
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  const curling::IntSeq seq = parse_sequence(text);
  return {seq.begin(), seq.end()};
}

curling::Graph make_generator(const std::string& text) {
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  std::vector<std::int64_t> ps;
  if (colon != std::string::npos) ps = parse_int_list(text.substr(colon + 1));
  const auto need = [&](std::size_t k) {
    if (ps.size() != k) {
      throw std::invalid_argument("generator '" + family + "' takes " +
                                  std::to_string(k) + " parameter(s)");
    }
  };
  const auto arg = [&](std::size_t i) { return to_int(ps[i], family + " parameter"); };
  if (family == "path") { need(1); return curling::path(arg(0)); }
  if (family == "cycle") { need(1); return curling::cycle(arg(0)); }
  if (family == "complete") { need(1); return curling::complete(arg(0)); }
  if (family == "kmn") { need(2); return curling::complete_bipartite(arg(0), arg(1)); }
  if (family == "wheel") { need(1); return curling::wheel(arg(0)); }
  if (family == "ladder") { need(1); return curling::ladder(arg(0)); }
  if (family == "tadpole") { need(2); return curling::tadpole(arg(0), arg(1)); }
  if (family == "ktree") { need(2); return curling::complete_kary_tree(arg(0), arg(1)); }
  if (family == "caterpillar") {
    if (ps.empty()) throw std::invalid_argument("generator 'caterpillar' needs leaf counts");
    std::vector<int> l;
    l.reserve(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) l.push_back(arg(i));
    return curling::caterpillar(l);
  }
  throw std::invalid_argument(
      "unknown generator '" + family +
      "' (families: path, cycle, complete, kmn, wheel, ladder, tadpole, ktree, "
      "caterpillar)");
}

std::string degree_string_text(const curling::Graph& g) {
  const curling::IntSeq s = curling::canonical_degree_string(g);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ", ";
    os << s[i];
  }
  os << ')';
  return os.str();
}

ojson report_json(const curling::Graph& g) {
  const curling::CurlingReport rep = curling::curling_report(g);
  ojson runs = ojson::array();
  for (const curling::Run& r : rep.runs) {
    runs.push_back(ojson{{"value", r.value}, {"exponent", r.exponent}});
  }
  return ojson{{"n", g.order()},
               {"edges", g.size()},
               {"degree_string", degree_string_text(g)},
               {"runs", std::move(runs)},
               {"cn", rep.cn},
               {"cnc", curling::to_decimal(rep.cnc)},
               {"ic", rep.ic},
               {"vartheta", curling::to_decimal(rep.vartheta)}};
}

curling::NamedRange parse_range(const std::string& text) {
  const auto eq = text.find('=');
  const auto dots = text.find("..");
  if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
    throw std::invalid_argument("range must look like n=3..30, got '" + text + "'");
  }
  curling::NamedRange r;
  r.name = text.substr(0, eq);
  try {
    r.lo = std::stoll(text.substr(eq + 1, dots - eq - 1));
    r.hi = std::stoll(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("range must look like n=3..30, got '" + text + "'");
  }
  if (r.name.empty()) throw std::invalid_argument("range is missing a name: '" + text + "'");
  return r;
}

curling::ReportFormat parse_format(const std::string& text) {
  if (text == "json") return curling::ReportFormat::json;
  if (text == "csv") return curling::ReportFormat::csv;
  if (text == "md") return curling::ReportFormat::markdown;
  throw std::invalid_argument("unknown format '" + text + "'");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
}

int report_defects(const std::vector<curling::AuditRecord>& records) {
  const auto defects = curling::unexpected_defects(records);
  if (defects.empty()) return 0;
  std::cerr << defects.size()
            << " defect(s) outside the expected-discrepancy ledger:\n";
  for (const curling::AuditRecord* rec : defects) {
    std::cerr << "  " << rec->formula_id << " at ";
    for (std::size_t i = 0; i < rec->params.size(); ++i) {
      if (i) std::cerr << ';';
      std::cerr << rec->params[i].first << '=' << rec->params[i].second;
    }
    std::cerr << " (" << curling::to_string(rec->verdict) << ")\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curling numbers of integer sequences and graph degree strings"};
  app.require_subcommand(1);

  std::string seq_text;
  auto* sc_seq_cn = app.add_subcommand("seq-cn", "curling number of a sequence");
  sc_seq_cn->add_option("sequence", seq_text, "comma-separated integers")->required();
  bool seq_report = false;
  sc_seq_cn->add_flag("--report", seq_report, "print a JSON report instead of the number");

  std::string ext_text;
  std::int64_t ext_steps = 1;
  auto* sc_extend = app.add_subcommand("seq-extend", "append curling numbers");
  sc_extend->add_option("sequence", ext_text, "comma-separated integers")->required();
  sc_extend->add_option("--steps,-k", ext_steps, "how many terms to append")
      ->capture_default_str();

  std::string conj_alphabet = "2,3";
  std::int64_t conj_max_len = 8;
  std::int64_t conj_cap = 1000000;
  bool conj_serial = false;
  auto* sc_conj = app.add_subcommand(
      "conjecture", "check that every start string eventually reaches a 1");
  sc_conj->add_option("--alphabet", conj_alphabet, "values the starts draw from")
      ->capture_default_str();
  sc_conj->add_option("--max-len", conj_max_len, "longest start length")
      ->capture_default_str();
  sc_conj->add_option("--cap", conj_cap, "step budget per start")->capture_default_str();
  sc_conj->add_flag("--serial", conj_serial, "disable the parallel sweep");

  std::string gen_text;
  std::string edges_path;
  auto* sc_graph = app.add_subcommand("graph-cn", "curling report of a graph");
  auto* gen_opt = sc_graph->add_option("--gen", gen_text, "generator, e.g. kmn:2,3");
  auto* edges_opt =
      sc_graph->add_option("--edges", edges_path, "edge-list file (header 'n m')");
  gen_opt->excludes(edges_opt);
  edges_opt->excludes(gen_opt);

  std::string pow_gen;
  std::int64_t pow_r = 1;
  std::string pow_out;
  auto* sc_power = app.add_subcommand("power", "curling report of a graph power");
  sc_power->add_option("--gen", pow_gen, "generator for the base graph")->required();
  sc_power->add_option("-r,--radius", pow_r, "distance threshold")->required();
  sc_power->add_option("--out", pow_out, "write the power's edge list here");

  std::int64_t table_max_n = 10;
  auto* sc_table = app.add_subcommand("table", "closed-form family summary table");
  sc_table->add_option("--max-n", table_max_n, "largest size per family")
      ->capture_default_str();

  std::string audit_formula;
  std::vector<std::string> audit_ranges;
  std::string audit_format = "json";
  std::string audit_out;
  std::uint64_t audit_seed = 0;
  std::uint64_t audit_cap = 10000;
  bool audit_serial = false;
  int audit_leaf_max = 3;
  int audit_random_caterpillars = 100;
  int audit_spine_max = 12;
  int audit_random_leaf_max = 5;
  int audit_union_max = 6;
  auto* sc_audit =
      app.add_subcommand("audit", "sweep a cataloged formula against ground truth");
  sc_audit->add_option("--formula", audit_formula, "catalog id, F1..F20")->required();
  sc_audit->add_option("--range", audit_ranges, "parameter range, e.g. n=3..30");
  sc_audit->add_option("--format", audit_format, "json, csv, or md")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  sc_audit->add_option("--out", audit_out, "write the report here instead of stdout");
  sc_audit->add_option("--seed", audit_seed, "seed for randomized sweeps")
      ->capture_default_str();
  sc_audit->add_option("--cap", audit_cap, "largest allowed point count")
      ->capture_default_str();
  sc_audit->add_flag("--serial", audit_serial, "disable the parallel sweep");
  sc_audit->add_option("--leaf-max", audit_leaf_max,
                       "caterpillar sweeps: exhaustive per-vertex leaf bound")
      ->capture_default_str();
  sc_audit->add_option("--random-caterpillars", audit_random_caterpillars,
                       "caterpillar sweeps: extra seeded instances")
      ->capture_default_str();
  sc_audit->add_option("--spine-max", audit_spine_max,
                       "caterpillar sweeps: longest random spine")
      ->capture_default_str();
  sc_audit->add_option("--random-leaf-max", audit_random_leaf_max,
                       "caterpillar sweeps: per-vertex leaf bound for random instances")
      ->capture_default_str();
  sc_audit->add_option("--union-max", audit_union_max,
                       "union sweeps: largest component order")
      ->capture_default_str();

  auto* sc_formulas = app.add_subcommand("formulas", "print the formula catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(sc_seq_cn)) {
      const curling::IntSeq seq = parse_sequence(seq_text);
      if (!seq_report) {
        std::cout << curling::curling_number(seq) << '\n';
        return 0;
      }
      const curling::RunDecomposition runs = curling::run_decompose(seq);
      ojson runs_js = ojson::array();
      for (const curling::Run& r : runs) {
        runs_js.push_back(ojson{{"value", r.value}, {"exponent", r.exponent}});
      }
      const ojson js{{"sequence", seq},
                     {"cn", curling::curling_number(seq)},
                     {"runs", std::move(runs_js)},
                     {"cnc", curling::to_decimal(curling::compound_curling(runs))}};
      std::cout << js.dump(2) << '\n';
      return 0;
    }

    if (app.got_subcommand(sc_extend)) {
      const curling::IntSeq seq = parse_sequence(ext_text);
      std::cout << join_sequence(curling::extend_by_curling(seq, ext_steps)) << '\n';
      return 0;
    }

    if (app.got_subcommand(sc_conj)) {
      const auto alphabet = parse_int_list(conj_alphabet);
      const curling::ConjectureSweepResult res = curling::conjecture_sweep(
          alphabet, conj_max_len, conj_cap, !conj_serial);
      std::cout << "starts: " << res.starts << '\n';
      std::cout << "max steps: " << res.max_steps << " at "
                << join_sequence(res.max_start) << '\n';
      if (res.exhausted.empty()) {
        std::cout << "every start reached a 1\n";
      } else {
        std::cout << res.exhausted.size() << " start(s) exhausted the cap of "
                  << conj_cap << ":\n";
        for (const curling::IntSeq& s : res.exhausted) {
          std::cout << "  " << join_sequence(s) << '\n';
        }
      }
      return 0;
    }

    if (app.got_subcommand(sc_graph)) {
      curling::Graph g(0);
      std::string source;
      if (!gen_text.empty()) {
        g = make_generator(gen_text);
        source = "gen:" + gen_text;
      } else if (!edges_path.empty()) {
        std::ifstream f(edges_path);
        if (!f) throw std::runtime_error("cannot open '" + edges_path + "'");
        g = curling::read_edge_list(f);
        source = "edges:" + edges_path;
      } else {
        throw std::invalid_argument("graph-cn needs --gen or --edges");
      }
      const ojson js{{"source", source}, {"report", report_json(g)}};
      std::cout << js.dump(2) << '\n';
      return 0;
    }

    if (app.got_subcommand(sc_power)) {
      const curling::Graph g = make_generator(pow_gen);
      const int r = to_int(pow_r, "radius");
      const std::optional<int> d = curling::diameter(g);
      const curling::Graph p = curling::power(g, r);
      if (!pow_out.empty()) {
        std::ofstream f(pow_out);
        if (!f) throw std::runtime_error("cannot open '" + pow_out + "' for writing");
        curling::write_edge_list(p, f);
      }
      ojson base{{"n", g.order()}, {"edges", g.size()}};
      base["diameter"] = d ? ojson(*d) : ojson(nullptr);
      const ojson js{{"generator", pow_gen},
                     {"r", r},
                     {"base", std::move(base)},
                     {"exceeds_diameter", d.has_value() && r > *d},
                     {"report", report_json(p)}};
      std::cout << js.dump(2) << '\n';
      return 0;
    }

    if (app.got_subcommand(sc_table)) {
      const auto rows = curling::default_table_ranges(to_int(table_max_n, "--max-n"));
      const auto records = curling::reproduce_table(rows);
      std::cout << curling::render_table_markdown(records);
      return report_defects(records);
    }

    if (app.got_subcommand(sc_audit)) {
      curling::SweepSpec spec;
      spec.formula_id = audit_formula;
      for (const std::string& r : audit_ranges) spec.ranges.push_back(parse_range(r));
      spec.seed = audit_seed;
      spec.point_cap = audit_cap;
      spec.parallel = !audit_serial;
      spec.leaf_max = audit_leaf_max;
      spec.random_caterpillars = audit_random_caterpillars;
      spec.random_spine_max = audit_spine_max;
      spec.random_leaf_max = audit_random_leaf_max;
      spec.union_max_vertices = audit_union_max;
      const auto records = curling::run_audit(spec);
      const std::string text =
          curling::render(spec, records, parse_format(audit_format));
      if (!audit_out.empty()) {
        write_text(audit_out, text);
      } else {
        std::cout << text;
      }
      return report_defects(records);
    }

    if (app.got_subcommand(sc_formulas)) {
      std::cout << curling::catalog_json();
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
