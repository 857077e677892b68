#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "padic/core.hpp"
#include "padic/transducer.hpp"

namespace padic {

/// f(x) = sum_j coeffs[j] x^j, coefficients in Q ∩ Z_p, low degree first.
struct Polynomial {
  std::vector<RationalPadic> coeffs;
};

/// f(x) = constant + slope * x.
struct Affine {
  RationalPadic constant;
  RationalPadic slope;
};

struct AutomatonBacked {
  Transducer machine;
};

enum class VdpTail {
  /// B_m = 0 for m >= p^depth; the table describes a total function.
  Zero,
  /// Coefficients beyond the table are unknown; only depth <= table depth
  /// is answerable.
  Truncated,
};

/// Function given by its raw van der Put coefficients B_m for m < p^depth.
///
/// Raw coefficients are stored (rather than b_m = B_m / p^floor(log m)) so
/// that tables of functions that are not 1-Lipschitz remain expressible;
/// the integrality check lives in the vdp module.
struct VdpTable {
  std::size_t depth = 0;
  std::vector<RationalPadic> coeffs_B;
  VdpTail tail = VdpTail::Zero;
};

class FunctionPresentation {
 public:
  using Variant = std::variant<Polynomial, Affine, AutomatonBacked, VdpTable>;

  static FunctionPresentation polynomial(Base base, std::vector<RationalPadic> coeffs);
  static FunctionPresentation affine(RationalPadic constant, RationalPadic slope);
  static FunctionPresentation automaton(Transducer machine);
  static FunctionPresentation vdp_table(Base base, std::size_t depth,
                                        std::vector<RationalPadic> coeffs_B,
                                        VdpTail tail = VdpTail::Zero);

  Base base() const { return base_; }
  const Variant& variant() const { return repr_; }
  /// "poly", "affine", "automaton" or "vdp".
  std::string kind() const;

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&repr_);
  }

 private:
  FunctionPresentation(Base base, Variant repr) : base_(base), repr_(std::move(repr)) {}

  Base base_;
  Variant repr_;
};

/// Exact value f(x) for an integer x >= 0. Truncated vdp tables answer only
/// for x < p^depth.
RationalPadic evaluate(const FunctionPresentation& f, const Integer& x);

/// f(x) mod p^n for 0 <= x < p^n.
Integer evaluate_mod(const FunctionPresentation& f, const Integer& x, std::size_t n);

struct LipschitzViolation {
  Integer x;
  Integer y;
  std::size_t n;
};

/// Depth-D check of the 1-Lipschitz property through coordinate functions:
/// for all n < D and x < p^D, f(x) ≡ f(x mod p^n) (mod p^n). Returns the
/// first violation in (n, x) order with x < y.
std::optional<LipschitzViolation> check_lipschitz_depth(const FunctionPresentation& f,
                                                        std::size_t depth, unsigned threads = 1);

/// p^n as a machine size for exhaustive enumeration; throws past 2^28.
std::size_t enumeration_size(Base base, std::size_t n);

/// Thrown by operations whose precondition is a passing Lipschitz check.
class NotLipschitz : public Error {
 public:
  NotLipschitz(LipschitzViolation v, const std::string& what) : Error(what), violation(std::move(v)) {}
  LipschitzViolation violation;
};

}  // namespace padic
