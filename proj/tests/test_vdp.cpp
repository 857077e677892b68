#include <doctest.h>

#include <random>

#include "padic/corpus.hpp"
#include "padic/vdp.hpp"

using namespace padic;

namespace {

RationalPadic q(int p, const char* text) { return RationalPadic::parse(Base(p), text); }

FunctionPresentation square(Base b) {
  return FunctionPresentation::polynomial(b, {RationalPadic(b, 0L), RationalPadic(b, 0L), RationalPadic(b, 1L)});
}

}  // namespace

TEST_CASE("chi examples") {
  const Base b(2);
  CHECK(chi(0, 0, b) == 1);
  CHECK(chi(0, 2, b) == 1);
  CHECK(chi(0, 1, b) == 0);
  CHECK(chi(1, 3, b) == 1);
  CHECK(chi(5, 13, b) == 1);
  CHECK(chi(5, 9, b) == 0);
  CHECK(chi(1, q(2, "1/3")) == 1);
  CHECK(chi(3, q(2, "1/3")) == 1);
  CHECK(chi(2, q(2, "1/3")) == 0);
}

TEST_CASE("chi is the indicator of a ball of the expected size") {
  for (int p : {2, 3}) {
    const Base b(p);
    const std::size_t D = p == 2 ? 6 : 4;
    const Integer total = b.pow(D);
    for (Integer m = 1; m < b.pow(D - 1); ++m) {
      Integer hits = 0;
      for (Integer x = 0; x < total; ++x) hits += chi(m, x, b);
      CHECK(hits == b.pow(D - floor_log(m, b) - 1));
    }
  }
}

TEST_CASE("square has b_m = 2m - 2^floor(log m)") {
  const Base b(2);
  const VdpSeries s = extract(square(b), 8);
  CHECK(s.b[0] == q(2, "0"));
  for (long m = 1; m < 256; ++m) {
    const long top = 1L << floor_log(m, b);
    CHECK(s.b[m] == RationalPadic(b, 2 * m - top));
    CHECK(s.B[m] == RationalPadic(b, m * m - (m - top) * (m - top)));
  }
}

TEST_CASE("coefficients of simple machines") {
  const Base b(3);
  const auto id = FunctionPresentation::automaton(corpus::identity(b));
  // b_m is the leading digit of m
  CHECK(coeff_b(id, 0) == q(3, "0"));
  CHECK(coeff_b(id, 7) == q(3, "2"));
  CHECK(coeff_B(id, 7) == q(3, "6"));
  CHECK(coeff_b(id, 19) == q(3, "2"));
}

TEST_CASE("series reproduce the function") {
  std::mt19937_64 rng(3);
  for (int p : {2, 3, 5}) {
    const Base b(p);
    const std::size_t K = p == 2 ? 7 : 3;
    for (int i = 0; i < 6; ++i) {
      const auto f = i % 2 ? FunctionPresentation::automaton(corpus::random_transducer(rng, b, 6))
                           : corpus::random_polynomial(rng, b, 3);
      const VdpSeries s = extract(f, K);
      for (std::size_t k = 1; k <= K; ++k)
        for (Integer x = 0; x < b.pow(k); ++x) CHECK(eval_from_vdp(s, x, k) == evaluate_mod(f, x, k));
      CHECK(extract(to_presentation(s), K) == s);
      CHECK(series_from_raw(b, K, s.B) == s);
    }
  }
}

TEST_CASE("non integral coefficient") {
  const Base b(2);
  try {
    coeff_b(corpus::second_digit(b), 2);
    FAIL("expected NotIntegral");
  } catch (const NotIntegral& e) {
    CHECK(e.m == 2);
    CHECK(e.coefficient == q(2, "1"));
  }
  CHECK_THROWS_AS(extract(corpus::second_digit(b), 2), NotIntegral);
}

TEST_CASE("extraction is thread independent") {
  const Base b(3);
  std::mt19937_64 rng(1);
  const auto f = corpus::random_polynomial(rng, b, 3);
  CHECK(extract(f, 5, 1) == extract(f, 5, 4));
}
