#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "padic/core.hpp"

namespace padic {

/// GF(p^l) built as F_p[t] / (modulus).
///
/// Elements are integers in [0, q) whose base-p digits are the
/// coefficients of a polynomial in t, constant term first. The modulus is
/// a monic primitive polynomial taken from a fixed table of Conway
/// polynomials when available, otherwise the first primitive polynomial in
/// lexicographic order of its lower coefficients.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  GaloisField(Base base, std::size_t degree);

  Base base() const { return base_; }
  std::size_t degree() const { return degree_; }
  Elem order() const { return q_; }
  /// Coefficients c_0..c_l of the modulus, c_l = 1.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  /// Schoolbook polynomial product reduced by the modulus; independent of
  /// the log tables used by mul.
  Elem mul_direct(Elem a, Elem b) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.base_ == b.base_ && a.modulus_ == b.modulus_;
  }

 private:
  Base base_;
  std::size_t degree_;
  Elem q_;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;  ///< exp_[i] = t^i, doubled to skip a modulo
  std::vector<std::uint32_t> log_;
};

/// Conway polynomial for (p, l) if tabulated, else empty.
std::vector<int> conway_polynomial(int p, std::size_t l);

/// Whether the monic polynomial generates the multiplicative group of
/// F_p[t]/(poly), i.e. is irreducible and primitive.
bool is_primitive(int p, const std::vector<int>& poly);

}  // namespace padic
