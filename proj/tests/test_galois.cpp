#include <doctest.h>

#include <utility>
#include <vector>

#include "padic/galois.hpp"

using namespace padic;

namespace {

const std::vector<std::pair<int, std::size_t>> kSmall = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1},
                                                         {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 2}};

// Multiplicative order of the class of t, through the schoolbook product only.
std::uint64_t order_of_root(const GaloisField& f) {
  const int p = f.base().value();
  GaloisField::Elem t = f.degree() == 1 ? static_cast<GaloisField::Elem>((p - f.modulus()[0]) % p)
                                        : static_cast<GaloisField::Elem>(p);
  if (t == 0) return 0;
  GaloisField::Elem x = t;
  std::uint64_t k = 1;
  while (x != 1) {
    x = f.mul_direct(x, t);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("field axioms") {
  for (auto [p, l] : kSmall) {
    CAPTURE(p);
    CAPTURE(l);
    const GaloisField f(Base(p), l);
    const auto q = f.order();
    for (GaloisField::Elem a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (GaloisField::Elem b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.mul(a, b) == f.mul_direct(a, b));
        CHECK(f.sub(f.add(a, b), b) == a);
      }
    }
    const GaloisField::Elem step = q > 30 ? 3 : 1;
    for (GaloisField::Elem a = 0; a < q; a += step)
      for (GaloisField::Elem b = 0; b < q; b += step)
        for (GaloisField::Elem c = 0; c < q; ++c) {
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        }
    CHECK_THROWS_AS(f.inv(0), Error);
  }
}

TEST_CASE("characteristic") {
  for (auto [p, l] : kSmall) {
    const GaloisField f(Base(p), l);
    for (GaloisField::Elem a = 0; a < f.order(); ++a) {
      GaloisField::Elem s = 0;
      for (int i = 0; i < p; ++i) s = f.add(s, a);
      CHECK(s == 0);
    }
  }
}

TEST_CASE("modulus is primitive") {
  for (auto [p, l] : kSmall) {
    const GaloisField f(Base(p), l);
    CHECK(f.modulus().size() == l + 1);
    CHECK(f.modulus().back() == 1);
    CHECK(order_of_root(f) == f.order() - 1);
  }
  // beyond the table
  const GaloisField big(Base(13), 3);
  CHECK(order_of_root(big) == big.order() - 1);
}

TEST_CASE("tabulated polynomials are primitive") {
  CHECK(conway_polynomial(2, 2) == std::vector<int>{1, 1, 1});
  CHECK(conway_polynomial(3, 2) == std::vector<int>{2, 2, 1});
  for (int p : {2, 3, 5, 7, 11, 13})
    for (std::size_t l = 1; l <= 8; ++l) {
      const auto poly = conway_polynomial(p, l);
      if (poly.empty()) continue;
      CAPTURE(p);
      CAPTURE(l);
      CHECK(is_primitive(p, poly));
    }
  CHECK_FALSE(is_primitive(2, {1, 0, 1}));     // (t+1)^2
  CHECK_FALSE(is_primitive(2, {1, 1, 1, 1, 1}));  // irreducible, order 5
}

TEST_CASE("invalid fields") {
  CHECK_THROWS_AS(GaloisField(Base(4), 1), Error);
  CHECK_THROWS_AS(GaloisField(Base(2), 0), Error);
  CHECK_THROWS_AS(GaloisField(Base(2), 30), Error);
}
