#include "padic/vdp.hpp"

#include <algorithm>

#include "padic/parallel.hpp"

namespace padic {

NotIntegral::NotIntegral(Integer m_, RationalPadic B_m)
    : Error("b_" + m_.get_str() + " is not integral: B_m = " + B_m.to_string() +
            " is not divisible by p^floor(log_p m)"),
      m(std::move(m_)),
      coefficient(std::move(B_m)) {}

int chi(const Integer& m, const Integer& x, Base base) {
  if (sgn(m) < 0) throw Error("chi needs m >= 0");
  const std::size_t n = floor_log(m, base) + 1;
  return reduce_mod(base, x, n) == m ? 1 : 0;
}

int chi(const Integer& m, const RationalPadic& x) {
  if (sgn(m) < 0) throw Error("chi needs m >= 0");
  const std::size_t n = floor_log(m, x.base()) + 1;
  return reduce_mod(x, n) == m ? 1 : 0;
}

RationalPadic coeff_B(const FunctionPresentation& f, const Integer& m) {
  if (sgn(m) < 0) throw Error("van der Put index must be non-negative");
  const Base base = f.base();
  if (const auto* t = f.get_if<VdpTable>()) {
    if (m < base.pow(t->depth)) return t->coeffs_B[m.get_ui()];
    if (t->tail == VdpTail::Zero) return RationalPadic(base, 0L);
    throw DepthOverflow("B_" + m.get_str() + " lies beyond truncated vdp table depth " +
                        std::to_string(t->depth));
  }
  if (m < base.value()) return evaluate(f, m);
  const std::size_t top = floor_log(m, base);
  const Integer lead = base.pow(top);
  Integer stripped;
  mpz_fdiv_r(stripped.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
  return evaluate(f, m) - evaluate(f, stripped);
}

RationalPadic coeff_b(const FunctionPresentation& f, const Integer& m) {
  RationalPadic B = coeff_B(f, m);
  const std::size_t k = floor_log(m, f.base());
  const Integer pk = f.base().pow(k);
  if (!mpz_divisible_p(B.value().get_num_mpz_t(), pk.get_mpz_t())) throw NotIntegral(m, B);
  return B.divide_by_power(k);
}

VdpSeries series_from_raw(Base base, std::size_t depth, std::vector<RationalPadic> B) {
  VdpSeries s{base, depth, std::move(B), {}};
  s.b.reserve(s.B.size());
  for (std::size_t m = 0; m < s.B.size(); ++m) {
    const Integer mi(static_cast<unsigned long>(m));
    const std::size_t k = floor_log(mi, base);
    const Integer pk = base.pow(k);
    if (!mpz_divisible_p(s.B[m].value().get_num_mpz_t(), pk.get_mpz_t()))
      throw NotIntegral(mi, s.B[m]);
    s.b.push_back(s.B[m].divide_by_power(k));
  }
  return s;
}

VdpSeries extract(const FunctionPresentation& f, std::size_t depth, unsigned threads) {
  const Base base = f.base();
  const std::size_t size = enumeration_size(base, depth);
  std::vector<std::optional<RationalPadic>> raw(size);
  parallel_for(size, threads, [&](std::size_t m) {
    raw[m] = coeff_B(f, Integer(static_cast<unsigned long>(m)));
  });
  std::vector<RationalPadic> B;
  B.reserve(size);
  for (auto& c : raw) B.push_back(std::move(*c));
  return series_from_raw(base, depth, std::move(B));
}

Integer eval_from_vdp(const VdpSeries& s, const Integer& x, std::size_t K) {
  if (K > s.depth)
    throw DepthOverflow("reconstruction depth " + std::to_string(K) + " beyond series depth " +
                        std::to_string(s.depth));
  if (sgn(x) < 0 || x >= s.base.pow(K))
    throw Error("input " + x.get_str() + " outside [0, p^" + std::to_string(K) + ")");
  // chi(m, x) = 1 exactly for m = x mod p^(j+1) whose digit j is the
  // leading one, plus the level-0 ball.
  Rational acc = 0;
  Integer prev = -1;
  for (std::size_t j = 0; j < std::max<std::size_t>(K, 1); ++j) {
    Integer m = reduce_mod(s.base, x, j + 1);
    if (m != prev) acc += s.B[m.get_ui()].value();
    prev = m;
  }
  return reduce_mod(RationalPadic(s.base, acc), K);
}

FunctionPresentation to_presentation(const VdpSeries& s, VdpTail tail) {
  return FunctionPresentation::vdp_table(s.base, s.depth, s.B, tail);
}

}  // namespace padic
