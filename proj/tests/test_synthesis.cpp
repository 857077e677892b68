#include <doctest.h>

#include <random>

#include "padic/corpus.hpp"
#include "padic/synthesis.hpp"
#include "padic/vdp.hpp"

using namespace padic;

namespace {

RationalPadic q(int p, const char* text) { return RationalPadic::parse(Base(p), text); }

FunctionPresentation affine(int p, const char* a, const char* s) {
  return FunctionPresentation::affine(q(p, a), q(p, s));
}

}  // namespace

TEST_CASE("word code") {
  const WordCode c{Base(2)};
  CHECK(c.nu(DigitWord(Base(2))) == 0);
  CHECK(c.nu(DigitWord(Base(2), {0})) == 1);
  CHECK(c.nu(DigitWord(Base(2), {1})) == 2);
  CHECK(c.nu(DigitWord(Base(2), {0, 0})) == 3);
  CHECK(c.nu(DigitWord(Base(2), {1, 1})) == 6);
  CHECK(c.count_shorter(3) == 7);
  for (int p : {2, 3, 5}) {
    const WordCode w{Base(p)};
    for (Integer i = 0; i < 200; ++i) CHECK(w.nu(w.omega(i)) == i);
  }
}

TEST_CASE("naive automaton agrees with f on short inputs") {
  const Base b(2);
  const auto f = affine(2, "1", "3");
  const std::size_t depth = 5;
  const Transducer m = naive_automaton(f, depth);
  CHECK(m.num_states() == 31);
  for (std::size_t n = 1; n <= depth; ++n)
    for (Integer x = 0; x < b.pow(n); ++x) CHECK(eval_mod(m, x, n) == evaluate_mod(f, x, n));
  CHECK_THROWS_AS(naive_automaton(corpus::second_digit(b), 2), NotLipschitz);
}

TEST_CASE("naive automaton minimizes to the residual machine on its core") {
  const Base b(2);
  const auto f = affine(2, "1", "3");
  CHECK(count_bounded_behaviors(naive_automaton(f, 10), 5, 5) == 3);
  CHECK(count_bounded_behaviors(naive_automaton(FunctionPresentation::automaton(corpus::increment(b)), 8), 4, 4) == 2);
}

TEST_CASE("residual examples") {
  const auto f = affine(2, "1", "3");
  // (1 + 3(1 + 2z) - 0) / 2 = 2 + 3z
  const Residual r = residual(f, 1, 1);
  for (int z = 0; z < 20; ++z) CHECK(evaluate(r.function, z) == RationalPadic(Base(2), 2L + 3L * z));
  CHECK_THROWS_AS(residual(f, 4, 1), Error);
  // the residual by (0, 1) of the identity is the identity
  const auto id = FunctionPresentation::polynomial(Base(3), {q(3, "0"), q(3, "1")});
  CHECK(residual(id, 0, 1).key == residual(id, 2, 1).key);
}

TEST_CASE("residual identity on random polynomials") {
  std::mt19937_64 rng(12);
  for (int p : {2, 3}) {
    const Base b(p);
    for (int t = 0; t < 8; ++t) {
      const auto f = corpus::random_polynomial(rng, b, 3);
      for (std::size_t k = 1; k <= 3; ++k)
        for (Integer n = 0; n < b.pow(k); n += 1 + rng() % 3) {
          const Residual r = residual(f, n, k);
          const Integer low = reduce_mod(evaluate(f, n), k);
          for (int z = 0; z < 6; ++z) {
            const RationalPadic lhs = evaluate(f, n + b.pow(k) * z) - RationalPadic(b, low);
            CHECK(lhs.divide_by_power(k) == evaluate(r.function, z));
          }
        }
    }
  }
}

TEST_CASE("automaton residual is the subautomaton at the reached state") {
  std::mt19937_64 rng(6);
  for (int p : {2, 3}) {
    const Base b(p);
    for (int t = 0; t < 10; ++t) {
      const Transducer m = corpus::random_transducer(rng, b, 7);
      const auto f = FunctionPresentation::automaton(m);
      for (std::size_t k = 1; k <= 3; ++k)
        for (Integer n = 0; n < b.pow(k); ++n) {
          const Residual r = residual(f, n, k);
          const auto* a = r.function.get_if<AutomatonBacked>();
          REQUIRE(a);
          const std::size_t s = run(m, m.initial(), DigitWord::from_integer(b, n, k));
          CHECK(behaviorally_equal(a->machine, subautomaton(m, s)));
        }
    }
  }
}

TEST_CASE("normalized coefficients follow the reached state") {
  std::mt19937_64 rng(14);
  for (int p : {2, 3}) {
    const Base b(p);
    for (int t = 0; t < 10; ++t) {
      const Transducer m = corpus::random_transducer(rng, b, 7);
      const auto f = FunctionPresentation::automaton(m);
      for (int s = 0; s < p; ++s) CHECK(coeff_b(f, s) == eval_exact(m, m.initial(), s));
      for (std::size_t k = 1; k <= 3; ++k)
        for (Integer n = 0; n < b.pow(k); ++n) {
          const std::size_t st = run(m, m.initial(), DigitWord::from_integer(b, n, k));
          for (int s = 1; s < p; ++s) {
            const RationalPadic expect = eval_exact(m, st, s) - eval_exact(m, st, 0);
            CHECK(coeff_b(f, n + b.pow(k) * s) == expect);
          }
        }
    }
  }
}

TEST_CASE("minimal synthesis examples") {
  const Base b(2);
  auto states = [](const FunctionPresentation& f) {
    const SynthesisResult r = synthesize_minimal(f, {.max_states = 64});
    return r.status == SynthesisResult::Status::Finite ? r.machine->num_states() : 0;
  };
  CHECK(states(FunctionPresentation::automaton(corpus::identity(b))) == 1);
  CHECK(states(FunctionPresentation::automaton(corpus::increment(b))) == 2);
  CHECK(states(affine(2, "1", "3")) == 3);
  CHECK(states(affine(2, "1/3", "1")) > 0);

  const auto sq = FunctionPresentation::polynomial(b, {q(2, "0"), q(2, "0"), q(2, "1")});
  const SynthesisResult r = synthesize_minimal(sq, {.max_states = 64});
  CHECK(r.status == SynthesisResult::Status::BoundExceeded);
  CHECK_FALSE(r.machine);
  REQUIRE(r.certificate);
  CHECK(r.certificate->degree == 2);
  CHECK(r.certificate->heuristic);
}

TEST_CASE("synthesized machine computes f and is minimal") {
  std::mt19937_64 rng(30);
  for (int p : {2, 3, 5}) {
    const Base b(p);
    for (int t = 0; t < 10; ++t) {
      const Transducer m = corpus::random_transducer(rng, b, 9);
      const SynthesisResult r = synthesize_minimal(FunctionPresentation::automaton(m));
      REQUIRE(r.status == SynthesisResult::Status::Finite);
      CHECK(behaviorally_equal(*r.machine, m));
      CHECK(r.machine->num_states() == minimize(m).num_states());
    }
  }
}

TEST_CASE("affine functions with rational coefficients synthesize") {
  const Base b(3);
  const auto f = affine(3, "1/2", "5");
  const SynthesisResult r = synthesize_minimal(f);
  REQUIRE(r.status == SynthesisResult::Status::Finite);
  for (Integer x = 0; x < 243; ++x) CHECK(eval_mod(*r.machine, x, 5) == evaluate_mod(f, x, 5));
}

TEST_CASE("truncated tables report a certified depth") {
  const Base b(2);
  const VdpSeries s = extract(affine(2, "1", "3"), 10);
  const SynthesisResult r = synthesize_minimal(to_presentation(s, VdpTail::Truncated));
  REQUIRE(r.status == SynthesisResult::Status::Finite);
  REQUIRE(r.certified_depth);
  CHECK(r.machine->num_states() == 3);
  for (Integer x = 0; x < b.pow(*r.certified_depth); ++x)
    CHECK(eval_mod(*r.machine, x, *r.certified_depth) == evaluate_mod(affine(2, "1", "3"), x, *r.certified_depth));
}
