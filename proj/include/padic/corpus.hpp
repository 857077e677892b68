#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "padic/kernel.hpp"
#include "padic/presentation.hpp"
#include "padic/transducer.hpp"

namespace padic::corpus {

/// One state, O(r) = r.
Transducer identity(Base base);
/// One state, O(r) = p-1-r, i.e. f(x) = -1 - x.
Transducer complement(Base base);
/// Adds 1: state 0 carries, state 1 copies.
Transducer increment(Base base);

/// f(x) = δ_1(x) as a zero-tailed table of raw coefficients; not 1-Lipschitz.
FunctionPresentation second_digit(Base base);

/// Parity of the number of ones in the binary expansion.
Dfao thue_morse();
Dfao constant(Base base, int symbol);

/// Uniform draw from [0, n) reduced by modulo, stable across standard
/// library implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n);

/// Random total machine with at most max_states states, trimmed to the
/// part reachable from state 0.
Transducer random_transducer(std::mt19937_64& rng, Base base, std::size_t max_states);

/// Degree <= max_degree, coefficients a/b with |a| <= 9 and b in 1..9
/// coprime to p.
FunctionPresentation random_polynomial(std::mt19937_64& rng, Base base, std::size_t max_degree);

struct Named {
  std::string name;
  FunctionPresentation function;
};

/// identity, complement, increment, 1+3x, x^2, and `random_count` random
/// polynomials of degree <= 3 drawn from `seed`.
std::vector<Named> lipschitz_corpus(Base base, std::uint64_t seed, std::size_t random_count);

}  // namespace padic::corpus
