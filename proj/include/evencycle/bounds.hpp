#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evencycle/numeric.hpp"

namespace evencycle {

struct BoundValue {
  std::string name;
  double log10_value = 0;
  std::optional<std::string> value;  // 25 significant digits, only when below 1e15
  double relative_gap = 0;           // |value - 10^log10_value| / value, 0 when absent
};

struct BoundReport {
  std::uint64_t n = 0;
  int k = 0;
  std::vector<BoundValue> bounds;

  const BoundValue* find(const std::string& name) const;
};

/// Leading coefficients multiplying n^(1+1/k).
Real100 main_coefficient(int k, bool wide = false);  // 16 sqrt(5 or 10) sqrt(k ln k)
Real100 bondy_simonovits_coefficient(int k);          // 20k
Real100 pikhurko_coefficient(int k);                  // k - 1
Real100 bukh_jiang_coefficient(int k);                // 80 sqrt(k) ln k

/// Names: main, main_wide, main_leading, main_second, bondy_simonovits,
/// pikhurko, bukh_jiang. Values are computed twice: directly with 100 digits
/// and as a sum of logarithms.
BoundReport eval_bounds(std::uint64_t n, int k);

struct Threshold {
  std::string name;
  double log10_value = 0;   // from the closed form
  double log10_exact = 0;   // from the exact big integer
  double relative_gap = 0;
};

/// Delta = sqrt(k) (20k)^(2k), d_floor = (20k)^(4k^2+2k), n_floor = (20k)^(4k^3+2k^2).
/// The exact side uses Delta^2 = k (20k)^(4k).
std::vector<Threshold> thresholds(int k);

struct CrossoverReport {
  int k_max = 0;
  std::optional<int> pikhurko;            // 100 digits
  std::optional<int> pikhurko_double;
  std::optional<int> pikhurko_50;
  std::optional<int> bukh_jiang;
  bool stable = false;                    // all precisions agree
};

/// Smallest k <= k_max where the main coefficient drops below the Pikhurko
/// coefficient, and below the Bukh-Jiang coefficient.
CrossoverReport crossover(int k_max);

/// Bukh-Jiang coefficient over the main coefficient, and sqrt(5 ln k).
std::pair<Real100, Real100> improvement_factor(int k);

}  // namespace evencycle
