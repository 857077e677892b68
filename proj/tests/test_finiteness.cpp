#include <doctest.h>

#include <algorithm>
#include <random>
#include <variant>

#include "padic/corpus.hpp"
#include "padic/finiteness.hpp"
#include "padic/vdp.hpp"

using namespace padic;

namespace {

RationalPadic q(int p, const char* text) { return RationalPadic::parse(Base(p), text); }

std::vector<RationalPadic> ints(Base b, std::vector<long> v) {
  std::vector<RationalPadic> out;
  for (long x : v) out.emplace_back(b, x);
  return out;
}

}  // namespace

TEST_CASE("verdicts on the standard examples") {
  const Base b(2);
  auto sat = [&](const FunctionPresentation& f) {
    const auto v = check_finiteness(f);
    REQUIRE(std::holds_alternative<SatisfiesCriterion>(v));
    return std::get<SatisfiesCriterion>(v);
  };
  CHECK(sat(FunctionPresentation::automaton(corpus::identity(b))).values == ints(b, {0, 1}));
  CHECK(sat(FunctionPresentation::automaton(corpus::complement(b))).values == ints(b, {-2, -1}));
  CHECK(sat(FunctionPresentation::affine(q(2, "1"), q(2, "3"))).values == ints(b, {1, 3, 4}));

  const auto sq = FunctionPresentation::polynomial(b, ints(b, {0, 0, 1}));
  const auto v = check_finiteness(sq);
  REQUIRE(std::holds_alternative<ValueBoundExceeded>(v));
  CHECK(std::get<ValueBoundExceeded>(v).distinct_count > 64);
  CHECK_FALSE(is_certificate(v));

  const auto d = check_finiteness(corpus::second_digit(b), {.depth = 2});
  REQUIRE(std::holds_alternative<FailsIntegrality>(d));
  CHECK(std::get<FailsIntegrality>(d).m == 2);
  CHECK(verdict_name(d) == "FailsIntegrality");
  CHECK(is_certificate(d));
}

TEST_CASE("coefficient automaton matches extraction") {
  std::mt19937_64 rng(40);
  for (int p : {2, 3, 5}) {
    const Base b(p);
    const std::size_t K = p == 2 ? 10 : (p == 3 ? 6 : 4);
    for (int t = 0; t < 10; ++t) {
      const Transducer m = corpus::random_transducer(rng, b, 8);
      const CoefficientAutomaton ca = coefficient_automaton(m);
      const VdpSeries s = extract(FunctionPresentation::automaton(m), K);
      CHECK(std::is_sorted(ca.values.begin(), ca.values.end()));
      for (std::size_t i = 0; i < s.b.size(); ++i)
        REQUIRE(ca.values.at(static_cast<std::size_t>(automatic_eval(ca.dfao, i))) == s.b[i]);
    }
  }
}

TEST_CASE("soundness on random automata") {
  std::mt19937_64 rng(41);
  for (int p : {2, 3}) {
    const Base b(p);
    const std::size_t K = p == 2 ? 10 : 6;
    for (int t = 0; t < 12; ++t) {
      const Transducer m = corpus::random_transducer(rng, b, 8);
      const auto f = FunctionPresentation::automaton(m);
      const auto v = check_finiteness(f, {.depth = K});
      REQUIRE(std::holds_alternative<SatisfiesCriterion>(v));
      const auto& sc = std::get<SatisfiesCriterion>(v);
      // the DFAO names each b_m through `values`
      const VdpSeries s = extract(f, K);
      for (std::size_t i = 0; i < s.b.size(); ++i)
        CHECK(sc.values.at(static_cast<std::size_t>(automatic_eval(sc.dfao, i))) == s.b[i]);
      const auto report = cross_check(f, {.depth = K}, {});
      CHECK(report.agreement == Agreement::Agree);
    }
  }
}

TEST_CASE("completeness: finite machines have small coefficient kernels") {
  std::mt19937_64 rng(42);
  const Base b(2);
  for (int t = 0; t < 10; ++t) {
    const Transducer m = minimize(corpus::random_transducer(rng, b, 6));
    const std::size_t n = m.num_states();
    const auto v = check_finiteness(FunctionPresentation::automaton(m),
                                    {.kernel_bound = 2 * n * n + 2});
    REQUIRE(std::holds_alternative<SatisfiesCriterion>(v));
    CHECK(std::get<SatisfiesCriterion>(v).kernel.elements.size() <= 2 * n * n + 2);
  }
}

TEST_CASE("cross check outcomes") {
  const Base b(2);
  const auto aff = cross_check(FunctionPresentation::affine(q(2, "1"), q(2, "3")), {}, {});
  CHECK(aff.agreement == Agreement::Agree);
  REQUIRE(aff.synthesis);
  CHECK(aff.synthesis->machine->num_states() == 3);

  const auto sq = cross_check(FunctionPresentation::polynomial(b, ints(b, {0, 0, 1})), {}, {.max_states = 64});
  CHECK(sq.agreement == Agreement::InconclusiveConsistent);

  const auto d = cross_check(corpus::second_digit(b), {.depth = 2}, {});
  CHECK(d.agreement == Agreement::Agree);
  CHECK_FALSE(d.synthesis);
  CHECK(agreement_name(Agreement::InconclusiveConsistent) == "inconclusive-consistent");
}

TEST_CASE("tables use the depth limited kernel") {
  const Base b(3);
  const VdpSeries s = extract(FunctionPresentation::affine(q(3, "2"), q(3, "4")), 6);
  const auto v = check_finiteness(to_presentation(s, VdpTail::Truncated), {.depth = 6});
  REQUIRE(std::holds_alternative<SatisfiesCriterion>(v));
  CHECK(std::get<SatisfiesCriterion>(v).kernel.certified_depth == 6u);
}
