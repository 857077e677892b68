#include "padic/corpus.hpp"

#include <numeric>

namespace padic::corpus {

Transducer identity(Base base) {
  const int p = base.value();
  std::vector<int> out(static_cast<std::size_t>(p));
  std::iota(out.begin(), out.end(), 0);
  return Transducer(base, 1, 0, std::vector<std::size_t>(static_cast<std::size_t>(p), 0), out, {"id"});
}

Transducer complement(Base base) {
  const int p = base.value();
  std::vector<int> out;
  for (int r = 0; r < p; ++r) out.push_back(p - 1 - r);
  return Transducer(base, 1, 0, std::vector<std::size_t>(static_cast<std::size_t>(p), 0), out, {"not"});
}

Transducer increment(Base base) {
  const int p = base.value();
  std::vector<std::size_t> next;
  std::vector<int> out;
  for (int r = 0; r < p; ++r) {
    next.push_back(r == p - 1 ? 0 : 1);
    out.push_back((r + 1) % p);
  }
  for (int r = 0; r < p; ++r) {
    next.push_back(1);
    out.push_back(r);
  }
  return Transducer(base, 2, 0, next, out, {"carry", "copy"});
}

FunctionPresentation second_digit(Base base) {
  const int p = base.value();
  std::vector<RationalPadic> B;
  for (int m = 0; m < p * p; ++m) B.emplace_back(base, static_cast<long>(m >= p ? m / p : 0));
  return FunctionPresentation::vdp_table(base, 2, std::move(B), VdpTail::Zero);
}

Dfao thue_morse() {
  return Dfao{Base(2), 2, 0, {0, 1, 1, 0}, {0, 1}, {"0", "1"}};
}

Dfao constant(Base base, int symbol) {
  return Dfao{base, 1, 0, std::vector<std::size_t>(static_cast<std::size_t>(base.value()), 0), {symbol}, {}};
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Transducer random_transducer(std::mt19937_64& rng, Base base, std::size_t max_states) {
  const std::size_t p = static_cast<std::size_t>(base.value());
  const std::size_t n = 1 + draw(rng, max_states);
  std::vector<std::size_t> next(n * p);
  std::vector<int> out(n * p);
  for (std::size_t i = 0; i < n * p; ++i) {
    next[i] = draw(rng, n);
    out[i] = static_cast<int>(draw(rng, p));
  }
  // Chain every state to its predecessor on a random digit so that most
  // draws are reachable before trimming.
  for (std::size_t s = 1; s < n; ++s) next[draw(rng, s) * p + draw(rng, p)] = s;
  return trim_reachable(Transducer(base, n, 0, next, out));
}

FunctionPresentation random_polynomial(std::mt19937_64& rng, Base base, std::size_t max_degree) {
  const long p = base.value();
  const std::size_t degree = draw(rng, max_degree + 1);
  std::vector<RationalPadic> coeffs;
  for (std::size_t i = 0; i <= degree; ++i) {
    const long num = static_cast<long>(draw(rng, 19)) - 9;
    long den = 1 + static_cast<long>(draw(rng, 9));
    while (std::gcd(den, p) != 1) --den;
    coeffs.emplace_back(base, Rational(num, den));
  }
  return FunctionPresentation::polynomial(base, std::move(coeffs));
}

std::vector<Named> lipschitz_corpus(Base base, std::uint64_t seed, std::size_t random_count) {
  std::vector<Named> out{
      {"identity", FunctionPresentation::automaton(identity(base))},
      {"not", FunctionPresentation::automaton(complement(base))},
      {"increment", FunctionPresentation::automaton(increment(base))},
      {"affine 1+3x", FunctionPresentation::affine(RationalPadic(base, 1L), RationalPadic(base, 3L))},
      {"x^2", FunctionPresentation::polynomial(base, {RationalPadic(base, 0L), RationalPadic(base, 0L),
                                                      RationalPadic(base, 1L)})},
  };
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i)
    out.push_back({"random poly " + std::to_string(i), random_polynomial(rng, base, 3)});
  return out;
}

}  // namespace padic::corpus
