#include <doctest.h>

#include <random>

#include "padic/corpus.hpp"
#include "padic/transducer.hpp"

using namespace padic;

namespace {

DigitWord word(Base b, std::vector<int> d) { return DigitWord(b, std::move(d)); }

DigitWord random_word(std::mt19937_64& rng, Base b, std::size_t len) {
  DigitWord w(b);
  for (std::size_t i = 0; i < len; ++i) w.digits.push_back(static_cast<int>(rng() % b.value()));
  return w;
}

// Increment machine with a redundant copy of the copy state.
Transducer padded_increment() {
  return Transducer(Base(2), 3, 0, {1, 0, 2, 1, 2, 2}, {1, 0, 0, 1, 0, 1});
}

}  // namespace

TEST_CASE("eval_word examples") {
  const Base b(2);
  CHECK(eval_word(corpus::identity(b), word(b, {1, 0, 1})).digits == std::vector<int>{1, 0, 1});
  CHECK(eval_word(corpus::complement(b), word(b, {1, 1, 0})).digits == std::vector<int>{0, 0, 1});
  CHECK(eval_word(corpus::increment(b), word(b, {1, 1, 1})).digits == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(eval_word(corpus::identity(b), word(Base(3), {2})), Error);
}

TEST_CASE("eval_mod examples") {
  const Base b(2);
  CHECK(eval_mod(corpus::identity(b), 5, 3) == 5);
  CHECK(eval_mod(corpus::complement(b), 0, 4) == 15);
  CHECK(eval_mod(corpus::increment(b), 3, 2) == 0);
  CHECK_THROWS_AS(eval_mod(corpus::identity(b), 8, 3), Error);
}

TEST_CASE("complement computes -1 - x") {
  const Base b(3);
  for (int x = 0; x < 27; ++x) CHECK(eval_mod(corpus::complement(b), x, 3) == (27 - 1 - x));
}

TEST_CASE("construction validates tables") {
  const Base b(2);
  CHECK_THROWS_AS(Transducer(b, 1, 0, {0}, {0, 1}), Error);
  CHECK_THROWS_AS(Transducer(b, 1, 0, {0, 1}, {0, 1}), Error);
  CHECK_THROWS_AS(Transducer(b, 1, 0, {0, 0}, {0, 2}), Error);
  CHECK_THROWS_AS(Transducer(b, 1, 1, {0, 0}, {0, 1}), Error);
}

TEST_CASE("trim_reachable") {
  const Base b(2);
  const Transducer with_orphan(b, 2, 0, {0, 0, 1, 1}, {0, 1, 1, 0});
  CHECK_FALSE(with_orphan.all_reachable());
  const Transducer t = trim_reachable(with_orphan);
  CHECK(t.num_states() == 1);
  CHECK(trim_reachable(corpus::increment(b)) == corpus::increment(b));

  // 5 states, 2 reachable.
  const Transducer five(b, 5, 0, {1, 1, 0, 0, 3, 4, 2, 2, 0, 1}, {1, 0, 0, 1, 1, 1, 0, 0, 1, 0});
  const Transducer trimmed = trim_reachable(five);
  CHECK(trimmed.num_states() == 2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const DigitWord w = random_word(rng, b, 1 + rng() % 12);
    CHECK(eval_word(trimmed, w) == eval_word(five, w));
  }
}

TEST_CASE("minimize examples") {
  const Base b(2);
  const Transducer triple_id(b, 3, 0, {1, 2, 2, 0, 0, 1}, {0, 1, 0, 1, 0, 1});
  CHECK(minimize(triple_id).num_states() == 1);
  CHECK(minimize(corpus::increment(b)).num_states() == 2);
  const Transducer m = minimize(padded_increment());
  CHECK(m.num_states() == 2);
  CHECK(behaviorally_equal(m, corpus::increment(b)));
}

TEST_CASE("minimize is idempotent and preserves behavior on random machines") {
  std::mt19937_64 rng(21);
  for (int p : {2, 3, 5}) {
    const Base b(p);
    for (int i = 0; i < 20; ++i) {
      const Transducer m = corpus::random_transducer(rng, b, 12);
      const Transducer mm = minimize(m);
      CHECK(minimize(mm) == mm);
      CHECK(mm.num_states() <= m.num_states());
      for (int k = 0; k < 50; ++k) {
        const DigitWord w = random_word(rng, b, 1 + rng() % (2 * m.num_states()));
        CHECK(eval_word(mm, w) == eval_word(m, w));
      }
      // No two states of the result are equivalent.
      for (std::size_t s = 0; s < mm.num_states(); ++s)
        for (std::size_t t = s + 1; t < mm.num_states(); ++t)
          CHECK_FALSE(behaviorally_equal(subautomaton(mm, s), subautomaton(mm, t)));
    }
  }
}

TEST_CASE("prefix coherence") {
  std::mt19937_64 rng(8);
  const Base b(3);
  for (int i = 0; i < 20; ++i) {
    const Transducer m = corpus::random_transducer(rng, b, 8);
    const DigitWord w = random_word(rng, b, 10);
    const DigitWord out = eval_word(m, w);
    for (std::size_t k = 0; k <= 10; ++k) {
      DigitWord v(b, std::vector<int>(w.digits.begin(), w.digits.begin() + static_cast<std::ptrdiff_t>(k)));
      const DigitWord o = eval_word(m, v);
      CHECK(o.digits == std::vector<int>(out.digits.begin(), out.digits.begin() + static_cast<std::ptrdiff_t>(k)));
    }
    for (int x = 0; x < 81; ++x)
      for (std::size_t k = 1; k <= 4; ++k) {
        const Integer mod = b.pow(k);
        CHECK(eval_mod(m, x, 4) % mod == eval_mod(m, Integer(x) % mod, k));
      }
  }
}

TEST_CASE("subautomaton") {
  const Base b(2);
  CHECK(subautomaton(corpus::increment(b), 0) == trim_reachable(corpus::increment(b)));
  const Transducer copy = subautomaton(corpus::increment(b), 1);
  CHECK(copy.num_states() == 1);
  CHECK(behaviorally_equal(copy, corpus::identity(b)));
  CHECK(subautomaton(corpus::identity(b), 0) == corpus::identity(b));
  CHECK_THROWS_AS(subautomaton(corpus::identity(b), 1), Error);
}

TEST_CASE("distinguishing word is shortest") {
  const Base b(2);
  const auto w = distinguishing_word(corpus::identity(b), corpus::increment(b));
  REQUIRE(w);
  CHECK(w->size() == 1);
  CHECK_FALSE(distinguishing_word(padded_increment(), corpus::increment(b)));
}

TEST_CASE("exact evaluation") {
  const Base b(2);
  // complement: f(x) = -1 - x
  CHECK(eval_exact(corpus::complement(b), 0, 5) == RationalPadic(b, -6L));
  CHECK(eval_exact(corpus::increment(b), 0, 7) == RationalPadic(b, 8L));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const Transducer m = corpus::random_transducer(rng, Base(3), 6);
    for (int x = 0; x < 30; ++x) CHECK(reduce_mod(eval_exact(m, 0, x), 6) == eval_mod(m, x, 6));
  }
}
