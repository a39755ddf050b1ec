#pragma once

#include <optional>
#include <string>

#include "adeq/twist.hpp"

namespace adeq {

// Volume of the regular ideal octahedron, 8 * Lobachevsky(pi/4).
inline constexpr double kVolOct = 3.663862376708876;

enum class ECStatus { CertifiedZero, Unknown };

// Certifies that the exceptional annuli count vanishes: with a prime diagram
// and an adequate homogeneous state, the two-edge-loop condition forces it
// to zero. Throws PreconditionMissing if any hypothesis is absent.
ECStatus certify_ec_zero(bool prime, bool adequate, bool homogeneous,
                         const LoopConditionVerdict& loop);

// chi_neg of the guts once the exceptional count is certified zero, in which
// case it equals chi_neg of the reduced state graph.
std::optional<int> guts_chi(ECStatus ec, int chi_neg);

struct BoundReport {
  bool prime = false;
  bool adequate = false;
  bool homogeneous = false;
  int chi_neg = 0;
  LoopConditionVerdict loop;
  ECStatus ec = ECStatus::Unknown;
  std::optional<int> guts;
  // v_oct * chi_neg, a hyperbolic volume lower bound when certified.
  std::optional<double> volume_bound;
  // 2 * chi_neg, the Gromov-norm lower bound reported alongside.
  std::optional<double> gromov_bound;
  bool hyperbolic_assumed = false;
  int precision = 4;
};

// Requires all three verdicts to hold (PreconditionMissing otherwise); emits
// the certified bounds only when the loop condition closes the certificate.
BoundReport volume_lower_bound(bool prime, bool adequate, bool homogeneous,
                               int chi_neg, const LoopConditionVerdict& loop,
                               bool hyperbolic_assumed, int precision = 4);

// Fixed-point decimal rendering used by every bound-printing path.
std::string format_decimal(double value, int precision);

}  // namespace adeq
