#include "evencycle/bounds.hpp"

#include <cmath>
#include <sstream>

#include "evencycle/error.hpp"

namespace evencycle {

namespace mp = boost::multiprecision;

namespace {

// Plain double logarithms: deliberately independent of the 100-digit path.
double log10_sum(double a, double b) {
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log10(1 + std::pow(10.0, lo - hi));
}

BoundValue make_value(std::string name, const Real100& direct, double log10_value) {
  BoundValue b;
  b.name = std::move(name);
  b.log10_value = log10_value;
  if (direct < Real100(1e15)) {
    b.value = direct.str(25);
    const double back = std::pow(10.0, log10_value);
    b.relative_gap = static_cast<double>(mp::abs(direct - Real100(back)) / direct);
  }
  return b;
}

template <class T>
std::optional<int> scan(int k_min, int k_max, bool bukh_jiang) {
  const T root5 = sqrt(T(5));
  for (int k = k_min; k <= k_max; ++k) {
    const T kk(k);
    const T lnk = log(kk);
    const T ours = 16 * root5 * sqrt(kk * lnk);
    const T theirs = bukh_jiang ? 80 * sqrt(kk) * lnk : kk - 1;
    if (ours < theirs) return k;
  }
  return std::nullopt;
}

}  // namespace

const BoundValue* BoundReport::find(const std::string& name) const {
  for (const auto& b : bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

Real100 main_coefficient(int k, bool wide) {
  const Real100 kk(k);
  return 16 * mp::sqrt(Real100(wide ? 10 : 5)) * mp::sqrt(kk * mp::log(kk));
}

Real100 bondy_simonovits_coefficient(int k) { return Real100(20) * k; }

Real100 pikhurko_coefficient(int k) { return Real100(k - 1); }

Real100 bukh_jiang_coefficient(int k) {
  const Real100 kk(k);
  return 80 * mp::sqrt(kk) * mp::log(kk);
}

BoundReport eval_bounds(std::uint64_t n, int k) {
  if (n < 2) throw PreconditionError("bounds need n >= 2");
  if (k < 2) throw PreconditionError("bounds need k >= 2");
  BoundReport r;
  r.n = n;
  r.k = k;
  const Real100 N(n), kk(k);
  const Real100 leading_power = mp::pow(N, 1 + 1 / kk);
  const Real100 second_power = mp::pow(N, 1 + (2 * kk - 1) / (2 * kk * kk));

  const double ln = std::log10(static_cast<double>(n)), dk = k;
  const double lead_exp = (1 + 1 / dk) * ln;
  const double second_log = std::log10(8000.0) + 4 * std::log10(dk) +
                            (1 + (2 * dk - 1) / (2 * dk * dk)) * ln;
  const double half_klnk = 0.5 * std::log10(dk * std::log(dk));
  const double lead_log = std::log10(16.0) + 0.5 * std::log10(5.0) + half_klnk + lead_exp;
  const double wide_log = std::log10(16.0) + 0.5 * std::log10(10.0) + half_klnk + lead_exp;

  const Real100 leading = main_coefficient(k) * leading_power;
  const Real100 wide = main_coefficient(k, true) * leading_power;
  const Real100 second = 8000 * mp::pow(kk, 4) * second_power;
  r.bounds.push_back(make_value("main", leading + second, log10_sum(lead_log, second_log)));
  r.bounds.push_back(make_value("main_wide", wide + second, log10_sum(wide_log, second_log)));
  r.bounds.push_back(make_value("main_leading", leading, lead_log));
  r.bounds.push_back(make_value("main_second", second, second_log));
  r.bounds.push_back(make_value("bondy_simonovits", bondy_simonovits_coefficient(k) * leading_power,
                                std::log10(20 * dk) + lead_exp));
  r.bounds.push_back(make_value("pikhurko", pikhurko_coefficient(k) * leading_power,
                                std::log10(dk - 1) + lead_exp));
  r.bounds.push_back(make_value("bukh_jiang", bukh_jiang_coefficient(k) * leading_power,
                                std::log10(80.0) + 0.5 * std::log10(dk) +
                                    std::log10(std::log(dk)) + lead_exp));
  return r;
}

std::vector<Threshold> thresholds(int k) {
  if (k < 2) throw PreconditionError("thresholds need k >= 2");
  const double dk = k, l20k = std::log10(20 * dk);
  const BigInt base = BigInt(20) * k;
  const auto K = static_cast<unsigned>(k);
  auto make = [](std::string name, double closed, double exact) {
    return Threshold{std::move(name), closed, exact, std::abs(closed - exact) / std::abs(exact)};
  };
  std::vector<Threshold> out;
  out.push_back(make("delta", 0.5 * std::log10(dk) + 2 * dk * l20k,
                     0.5 * log10_of(BigInt(k) * mp::pow(base, 4 * K))));
  out.push_back(make("d_floor", (4 * dk * dk + 2 * dk) * l20k, log10_of(mp::pow(base, 4 * K * K + 2 * K))));
  out.push_back(make("n_floor", (4 * dk * dk * dk + 2 * dk * dk) * l20k,
                     log10_of(mp::pow(base, 4 * K * K * K + 2 * K * K))));
  return out;
}

CrossoverReport crossover(int k_max) {
  if (k_max < 3) throw PreconditionError("crossover needs k_max >= 3");
  CrossoverReport r;
  r.k_max = k_max;
  r.pikhurko = scan<Real100>(3, k_max, false);
  r.pikhurko_50 = scan<Real>(3, k_max, false);
  r.pikhurko_double = scan<double>(3, k_max, false);
  r.bukh_jiang = scan<Real100>(2, k_max, true);
  r.stable = r.pikhurko == r.pikhurko_50 && r.pikhurko == r.pikhurko_double;
  return r;
}

std::pair<Real100, Real100> improvement_factor(int k) {
  if (k < 2) throw PreconditionError("improvement factor needs k >= 2");
  return {bukh_jiang_coefficient(k) / main_coefficient(k), mp::sqrt(5 * mp::log(Real100(k)))};
}

}  // namespace evencycle
