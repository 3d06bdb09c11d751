#include "curling/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace curling {

namespace {
constexpr const char* kEmptySeqError = "undefined on empty sequence";
}

int curling_number(std::span<const Int> s) {
  if (s.empty()) throw std::invalid_argument(kEmptySeqError);
  const std::size_t n = s.size();
  // A suffix of s that is m copies of a length-p block is, reversed, a
  // prefix of length m*p with period p. A prefix of the reversal has period
  // p exactly when z[p] >= (m-1)*p, so the best exponent for period p is
  // z[p]/p + 1.
  auto rev = [&](std::size_t i) { return s[n - 1 - i]; };
  std::vector<std::size_t> z(n, 0);
  std::size_t best = 1;
  std::size_t l = 0, r = 0;
  for (std::size_t p = 1; p < n; ++p) {
    std::size_t k = 0;
    if (p < r) k = std::min(z[p - l], r - p);
    while (p + k < n && rev(k) == rev(p + k)) ++k;
    z[p] = k;
    if (p + k > r) {
      l = p;
      r = p + k;
    }
    best = std::max(best, z[p] / p + 1);
  }
  return static_cast<int>(best);
}

int curling_number_naive(std::span<const Int> s) {
  if (s.empty()) throw std::invalid_argument(kEmptySeqError);
  const std::size_t n = s.size();
  std::size_t best = 1;
  for (std::size_t p = 1; p <= n; ++p) {
    // grow the exponent while the next block back still equals the last one
    std::size_t m = 1;
    while ((m + 1) * p <= n) {
      const auto tail = s.end() - static_cast<std::ptrdiff_t>(p);
      const auto block = s.end() - static_cast<std::ptrdiff_t>((m + 1) * p);
      if (!std::equal(block, block + static_cast<std::ptrdiff_t>(p), tail)) break;
      ++m;
    }
    best = std::max(best, m);
  }
  return static_cast<int>(best);
}

RunDecomposition run_decompose(std::span<const Int> s) {
  RunDecomposition runs;
  for (Int v : s) {
    if (!runs.empty() && runs.back().value == v) {
      ++runs.back().exponent;
    } else {
      runs.push_back({v, 1});
    }
  }
  return runs;
}

IntSeq expand_runs(const RunDecomposition& runs) {
  IntSeq out;
  for (const Run& r : runs) {
    out.insert(out.end(), static_cast<std::size_t>(r.exponent), r.value);
  }
  return out;
}

BigInt compound_curling(const RunDecomposition& runs) {
  if (runs.empty()) throw std::invalid_argument("undefined on empty decomposition");
  BigInt prod = 1;
  for (const Run& r : runs) prod *= r.exponent;
  return prod;
}

IntSeq extend_by_curling(IntSeq s, std::int64_t steps) {
  if (s.empty()) throw std::invalid_argument(kEmptySeqError);
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  s.reserve(s.size() + static_cast<std::size_t>(steps));
  for (std::int64_t i = 0; i < steps; ++i) {
    s.push_back(curling_number(s));
  }
  return s;
}

std::optional<std::int64_t> steps_until_one(const IntSeq& s, std::int64_t cap) {
  if (s.empty()) throw std::invalid_argument(kEmptySeqError);
  if (cap < 0) throw std::invalid_argument("cap must be >= 0");
  if (std::find(s.begin(), s.end(), Int{1}) != s.end()) return 0;
  IntSeq work = s;
  for (std::int64_t step = 1; step <= cap; ++step) {
    const Int k = curling_number(work);
    work.push_back(k);
    if (k == 1) return step;
  }
  return std::nullopt;
}

ConjectureSweepResult conjecture_sweep(const std::vector<Int>& alphabet,
                                       int max_len, std::int64_t cap,
                                       bool parallel) {
  if (alphabet.empty()) throw std::invalid_argument("alphabet must be nonempty");
  if (max_len < 1) throw std::invalid_argument("max length must be >= 1");
  const std::int64_t a = static_cast<std::int64_t>(alphabet.size());

  ConjectureSweepResult res;
  for (int len = 1; len <= max_len; ++len) {
    std::int64_t count = 1;
    for (int i = 0; i < len; ++i) {
      count *= a;
      if (count > 10'000'000) {
        throw std::invalid_argument("alphabet size ^ length exceeds 1e7 starts");
      }
    }
    auto decode = [&](std::int64_t idx) {
      IntSeq s(static_cast<std::size_t>(len));
      for (int pos = len - 1; pos >= 0; --pos) {
        s[static_cast<std::size_t>(pos)] = alphabet[static_cast<std::size_t>(idx % a)];
        idx /= a;
      }
      return s;
    };

    std::vector<std::int64_t> steps(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::int64_t idx = 0; idx < count; ++idx) {
      auto st = steps_until_one(decode(idx), cap);
      steps[static_cast<std::size_t>(idx)] = st ? *st : -1;
    }
    // serial reduction in enumeration order keeps the result deterministic
    for (std::int64_t idx = 0; idx < count; ++idx) {
      ++res.starts;
      const std::int64_t st = steps[static_cast<std::size_t>(idx)];
      if (st < 0) {
        res.exhausted.push_back(decode(idx));
      } else if (st > res.max_steps) {
        res.max_steps = st;
        res.max_start = decode(idx);
      }
    }
  }
  return res;
}

}  // namespace curling
