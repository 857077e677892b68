#include <doctest.h>

#include <random>

#include "padic/corpus.hpp"
#include "padic/presentation.hpp"

using namespace padic;

namespace {

RationalPadic q(int p, const char* text) { return RationalPadic::parse(Base(p), text); }

}  // namespace

TEST_CASE("evaluate each kind") {
  const Base b(2);
  const auto poly = FunctionPresentation::polynomial(b, {q(2, "1"), q(2, "0"), q(2, "1/3")});
  CHECK(poly.kind() == "poly");
  CHECK(evaluate(poly, 3) == q(2, "4"));
  CHECK(evaluate(poly, 2) == q(2, "7/3"));

  const auto aff = FunctionPresentation::affine(q(2, "1"), q(2, "3"));
  CHECK(aff.kind() == "affine");
  CHECK(evaluate(aff, 5) == q(2, "16"));
  CHECK(evaluate_mod(aff, 5, 3) == 0);

  const auto inc = FunctionPresentation::automaton(corpus::increment(b));
  CHECK(inc.kind() == "automaton");
  CHECK(evaluate(inc, 6) == q(2, "7"));
  CHECK(evaluate_mod(inc, 7, 3) == 0);

  const auto delta = corpus::second_digit(b);
  CHECK(delta.kind() == "vdp");
  for (int x = 0; x < 4; ++x) CHECK(evaluate(delta, x) == RationalPadic(b, long((x >> 1) & 1)));
}

TEST_CASE("truncated tables refuse deep questions") {
  const Base b(2);
  const auto t = FunctionPresentation::vdp_table(b, 2, {q(2, "0"), q(2, "1"), q(2, "2"), q(2, "2")},
                                                 VdpTail::Truncated);
  CHECK(evaluate(t, 3) == q(2, "3"));
  CHECK_THROWS_AS(evaluate(t, 4), DepthOverflow);
  CHECK_THROWS_AS(FunctionPresentation::vdp_table(b, 2, {q(2, "0")}), Error);
}

TEST_CASE("affine and polynomial must share a base") {
  CHECK_THROWS_AS(FunctionPresentation::affine(q(2, "1"), q(3, "1")), Error);
  CHECK_THROWS_AS(FunctionPresentation::polynomial(Base(2), {q(3, "1")}), Error);
}

TEST_CASE("digit flipping equals -1 - x") {
  for (int p : {2, 3, 5}) {
    const Base b(p);
    const auto flip = FunctionPresentation::automaton(corpus::complement(b));
    const auto poly = FunctionPresentation::polynomial(b, {RationalPadic(b, -1L), RationalPadic(b, -1L)});
    for (int x = 0; x < 200; ++x) CHECK(evaluate(flip, x) == evaluate(poly, x));
  }
}

TEST_CASE("lipschitz check") {
  const Base b(2);
  CHECK_FALSE(check_lipschitz_depth(FunctionPresentation::automaton(corpus::increment(b)), 8));
  const auto v = check_lipschitz_depth(corpus::second_digit(b), 2);
  REQUIRE(v);
  CHECK(v->n == 1);
  // x and y agree mod p^n but f(x), f(y) do not
  CHECK(v->x < v->y);
  CHECK(v->x % 2 == v->y % 2);
  CHECK((evaluate_mod(corpus::second_digit(b), v->x, 2) - evaluate_mod(corpus::second_digit(b), v->y, 2)) % 2 != 0);
}

TEST_CASE("random polynomials with p-integral coefficients are 1-Lipschitz") {
  std::mt19937_64 rng(17);
  for (int p : {2, 3, 5}) {
    for (int i = 0; i < 10; ++i) {
      const auto f = corpus::random_polynomial(rng, Base(p), 3);
      CHECK_FALSE(check_lipschitz_depth(f, p == 2 ? 8 : 4));
    }
  }
}

TEST_CASE("lipschitz check is thread independent") {
  const auto f = corpus::second_digit(Base(3));
  CHECK(check_lipschitz_depth(f, 2, 1)->x == check_lipschitz_depth(f, 2, 4)->x);
}
