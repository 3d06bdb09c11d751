#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "curling/bigint.hpp"

namespace curling {

using Int = std::int64_t;
using IntSeq = std::vector<Int>;

// A maximal block of equal values inside a sequence.
struct Run {
  Int value = 0;
  std::int64_t exponent = 0;
  friend bool operator==(const Run&, const Run&) = default;
};
using RunDecomposition = std::vector<Run>;

// Curling number: the largest k such that the sequence ends in k consecutive
// copies of some block. Linear-time scan based on a Z-array of the reversed
// sequence. Throws std::invalid_argument on an empty sequence.
int curling_number(std::span<const Int> s);

// Reference implementation that tries every (period, exponent) suffix split
// directly. Quadratic; kept as the oracle the fast version is tested against
// and as the serial baseline in the benchmark.
int curling_number_naive(std::span<const Int> s);

// Maximal runs in left-to-right order. Empty input gives an empty result.
RunDecomposition run_decompose(std::span<const Int> s);

// Inverse of run_decompose.
IntSeq expand_runs(const RunDecomposition& runs);

// Product of the run exponents. Throws on an empty decomposition.
BigInt compound_curling(const RunDecomposition& runs);

// Appends curling_number(current sequence) `steps` times.
IntSeq extend_by_curling(IntSeq s, std::int64_t steps);

// First step at which a 1 is appended under extend_by_curling; 0 if the
// input already contains a 1; nullopt if `cap` steps pass without one.
std::optional<std::int64_t> steps_until_one(const IntSeq& s, std::int64_t cap);

struct ConjectureSweepResult {
  std::int64_t starts = 0;
  std::int64_t max_steps = 0;
  IntSeq max_start;                // first start attaining max_steps
  std::vector<IntSeq> exhausted;   // starts that hit the cap without a 1
};

// Runs steps_until_one over every sequence of length 1..max_len whose
// entries come from `alphabet`. Parallel over starts; the reduction is a
// serial scan in enumeration order, so results are deterministic.
ConjectureSweepResult conjecture_sweep(const std::vector<Int>& alphabet,
                                       int max_len, std::int64_t cap,
                                       bool parallel = true);

}  // namespace curling
