#include <doctest.h>

#include <random>

#include "padic/christol.hpp"
#include "padic/corpus.hpp"
#include "padic/finiteness.hpp"
#include "padic/synthesis.hpp"
#include "padic/vdp.hpp"

using namespace padic;

TEST_CASE("results do not depend on the thread count") {
  std::mt19937_64 rng(77);
  for (int p : {2, 3}) {
    const Base b(p);
    const std::size_t K = p == 2 ? 9 : 5;
    for (int t = 0; t < 4; ++t) {
      const auto f = t % 2 ? FunctionPresentation::automaton(corpus::random_transducer(rng, b, 8))
                           : corpus::random_polynomial(rng, b, 2);
      CHECK(extract(f, K, 1) == extract(f, K, 4));
      CHECK(naive_automaton(f, 5, 1) == naive_automaton(f, 5, 4));
      CHECK(synthesize_minimal(f, {.max_states = 64, .threads = 1}) ==
            synthesize_minimal(f, {.max_states = 64, .threads = 4}));
      CHECK(check_finiteness(f, {.depth = K, .threads = 1}) == check_finiteness(f, {.depth = K, .threads = 4}));
      const auto s = extract(f, K);
      CHECK(p_kernel(CoefficientStream{s}, {.max_elems = 64, .threads = 1}) ==
            p_kernel(CoefficientStream{s}, {.max_elems = 64, .threads = 4}));
    }
  }
  const GaloisField f2(Base(2), 1);
  const auto s = SeriesOverFq::from_dfao(f2, corpus::thue_morse(), {0, 1}, required_precision({}));
  CHECK(find_relation(s, {.threads = 1}) == find_relation(s, {.threads = 4}));
}
