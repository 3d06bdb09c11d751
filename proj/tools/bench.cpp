// Compares the optimized kernels against their serial reference
// implementations on sizable inputs and checks that both sides agree.

#include <chrono>
#include <iostream>
#include <random>

#include "curling/audit.hpp"
#include "curling/graph.hpp"
#include "curling/invariants.hpp"
#include "curling/sequence.hpp"

namespace {

template <typename F>
double run_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cout << "  MISMATCH: " << what << '\n';
  }
}

void bench_curling_number() {
  std::cout << "curling number, z-array vs naive scan\n";
  curling::IntSeq seq = {2, 2};
  seq = curling::extend_by_curling(seq, 20000 - 2);
  int fast = 0, naive = 0;
  const double t_fast = run_ms([&] { fast = curling::curling_number(seq); });
  const double t_naive = run_ms([&] { naive = curling::curling_number_naive(seq); });
  check(fast == naive, "curling_number vs curling_number_naive");
  std::cout << "  n = " << seq.size() << ": fast " << t_fast << " ms, naive "
            << t_naive << " ms\n";
}

void bench_all_pairs() {
  std::cout << "all-pairs distances, parallel vs serial\n";
  const curling::Graph grid =
      curling::cartesian_product(curling::path(60), curling::path(60));
  curling::DistanceMatrix par{0, {}}, ser{0, {}};
  const double t_par = run_ms([&] { par = curling::all_pairs_distances(grid); });
  const double t_ser = run_ms([&] { ser = curling::all_pairs_distances_serial(grid); });
  check(par.d == ser.d, "all_pairs_distances vs serial");
  std::cout << "  n = " << grid.order() << ": parallel " << t_par << " ms, serial "
            << t_ser << " ms\n";
}

void bench_audit() {
  std::cout << "audit sweep F8, parallel vs serial\n";
  curling::SweepSpec spec;
  spec.formula_id = "F8";
  spec.ranges = {{"n", 3, 60}, {"r", 1, 59}};
  auto serial = spec;
  serial.parallel = false;
  std::vector<curling::AuditRecord> a, b;
  const double t_par = run_ms([&] { a = curling::run_audit(spec); });
  const double t_ser = run_ms([&] { b = curling::run_audit(serial); });
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) {
    same = a[i].params == b[i].params && a[i].verdict == b[i].verdict &&
           a[i].computed_cn == b[i].computed_cn && a[i].computed_cnc == b[i].computed_cnc;
  }
  check(same, "run_audit parallel vs serial");
  std::cout << "  " << a.size() << " points: parallel " << t_par << " ms, serial "
            << t_ser << " ms\n";
}

void bench_conjecture() {
  std::cout << "conjecture sweep over {2,3}, parallel vs serial\n";
  curling::ConjectureSweepResult par, ser;
  const double t_par =
      run_ms([&] { par = curling::conjecture_sweep({2, 3}, 10, 1000, true); });
  const double t_ser =
      run_ms([&] { ser = curling::conjecture_sweep({2, 3}, 10, 1000, false); });
  check(par.starts == ser.starts && par.max_steps == ser.max_steps &&
            par.max_start == ser.max_start && par.exhausted == ser.exhausted,
        "conjecture_sweep parallel vs serial");
  std::cout << "  " << par.starts << " starts: parallel " << t_par << " ms, serial "
            << t_ser << " ms\n";
}

}  // namespace

int main() {
  bench_curling_number();
  bench_all_pairs();
  bench_audit();
  bench_conjecture();
  if (failures) {
    std::cout << failures << " kernel(s) disagree with their reference\n";
    return 1;
  }
  std::cout << "all kernels agree with their references\n";
  return 0;
}
