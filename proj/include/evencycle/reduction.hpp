#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/numeric.hpp"

namespace evencycle {

struct ReductionParams {
  Rational alpha;
  Rational c;
  Real gamma;                         // (20/alpha)^(-2/alpha)
  std::optional<Rational> gamma_exact;  // set when 2/alpha is an integer

  /// Validates alpha in (0,1) and c > 0, and derives gamma.
  static ReductionParams make(const Rational& alpha, const Rational& c);
};

/// One inequality evaluated on the output, with both sides for display.
struct Check {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

struct ReductionStep {
  int branch = 0;  // 1: shrink to S u T, 2: strip S and peel
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t s_size = 0;
  std::size_t t_size = 0;
  std::size_t s_incident = 0;
  double ratio_before = 0;
  double ratio_after = 0;
  bool ratio_increased = false;
};

struct ReductionResult {
  InducedSubgraph subgraph;  // labels lift to the input graph
  std::vector<Check> checks;
  std::vector<ReductionStep> transcript;
  std::size_t branch_one_steps = 0;

  const Check* check(std::string_view name) const;
};

/// Peeling emptied the graph. Carries what happened up to that point.
class ReductionCollapse : public std::runtime_error {
 public:
  ReductionCollapse(const std::string& what, std::vector<ReductionStep> transcript)
      : std::runtime_error(what), transcript_(std::move(transcript)) {}
  const std::vector<ReductionStep>& transcript() const noexcept { return transcript_; }

 private:
  std::vector<ReductionStep> transcript_;
};

/// e(h) / v(h)^(1+beta).
Real ratio(const Graph& h, const Rational& beta);

/// Local-improvement reduction to a subgraph with controlled degrees. Throws
/// PreconditionError when e(g) < c n^(1+alpha).
ReductionResult reduce(const Graph& g, const ReductionParams& p);

}  // namespace evencycle
