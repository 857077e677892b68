#pragma once

#include <cstddef>
#include <vector>

#include "padic/core.hpp"
#include "padic/presentation.hpp"

namespace padic {

/// Raised when B_m is not divisible by p^floor(log_p m), which witnesses
/// that the function is not 1-Lipschitz.
class NotIntegral : public Error {
 public:
  NotIntegral(Integer m_, RationalPadic B_m);
  Integer m;
  RationalPadic coefficient;
};

/// Van der Put coefficients for every m < p^depth.
struct VdpSeries {
  Base base;
  std::size_t depth;
  std::vector<RationalPadic> B;  ///< raw coefficients B_m
  std::vector<RationalPadic> b;  ///< normalized b_m = B_m / p^floor(log_p m)

  friend bool operator==(const VdpSeries&, const VdpSeries&) = default;
};

/// 1 iff x ≡ m (mod p^(floor(log_p m)+1)).
int chi(const Integer& m, const Integer& x, Base base);
int chi(const Integer& m, const RationalPadic& x);

/// B_m = f(m) - f(m - m_{n-1} p^{n-1}) for m >= p, else f(m). Exact for
/// every presentation kind.
RationalPadic coeff_B(const FunctionPresentation& f, const Integer& m);

/// b_m = B_m / p^floor(log_p m); throws NotIntegral.
RationalPadic coeff_b(const FunctionPresentation& f, const Integer& m);

/// All coefficients below p^depth. Independent per m, so extraction is
/// split across `threads` workers with identical results.
VdpSeries extract(const FunctionPresentation& f, std::size_t depth, unsigned threads = 1);

/// sum_{m < p^K} B_m chi(m, x) reduced mod p^K, for x < p^K and K <= depth.
Integer eval_from_vdp(const VdpSeries& s, const Integer& x, std::size_t K);

/// Rebuilds a presentation from a series; raw coefficients carry over.
FunctionPresentation to_presentation(const VdpSeries& s, VdpTail tail = VdpTail::Truncated);

/// Series from raw coefficients, normalizing each one (throws NotIntegral).
VdpSeries series_from_raw(Base base, std::size_t depth, std::vector<RationalPadic> B);

}  // namespace padic
