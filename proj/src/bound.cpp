#include "adeq/bound.hpp"

#include <cstdio>

namespace adeq {

ECStatus certify_ec_zero(bool prime, bool adequate, bool homogeneous,
                         const LoopConditionVerdict& loop) {
  if (!prime)
    fail(ErrorCode::PreconditionMissing, "certificate requires a prime diagram");
  if (!adequate)
    fail(ErrorCode::PreconditionMissing, "certificate requires an adequate state");
  if (!homogeneous)
    fail(ErrorCode::PreconditionMissing, "certificate requires a homogeneous state");
  return loop.holds ? ECStatus::CertifiedZero : ECStatus::Unknown;
}

std::optional<int> guts_chi(ECStatus ec, int chi_neg) {
  if (ec != ECStatus::CertifiedZero) return std::nullopt;
  return chi_neg;
}

BoundReport volume_lower_bound(bool prime, bool adequate, bool homogeneous,
                               int chi_neg, const LoopConditionVerdict& loop,
                               bool hyperbolic_assumed, int precision) {
  BoundReport r;
  r.prime = prime;
  r.adequate = adequate;
  r.homogeneous = homogeneous;
  r.chi_neg = chi_neg;
  r.loop = loop;
  r.ec = certify_ec_zero(prime, adequate, homogeneous, loop);
  r.guts = guts_chi(r.ec, chi_neg);
  if (r.ec == ECStatus::CertifiedZero) {
    r.volume_bound = kVolOct * chi_neg;
    r.gromov_bound = 2.0 * chi_neg;
  }
  r.hyperbolic_assumed = hyperbolic_assumed;
  r.precision = precision;
  return r;
}

std::string format_decimal(double value, int precision) {
  // Truncates toward zero: the printed digits are a prefix of the exact
  // decimal expansion, so lower bounds are never overstated by rounding.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17f", value);
  std::string s(buf);
  auto dot = s.find('.');
  if (precision <= 0) return s.substr(0, dot);
  return s.substr(0, dot + 1 + static_cast<size_t>(precision));
}

}  // namespace adeq
