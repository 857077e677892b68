#include <doctest.h>

#include <random>
#include <variant>

#include "padic/corpus.hpp"
#include "padic/serialize.hpp"

using namespace padic;

namespace {

RationalPadic q(int p, const char* text) { return RationalPadic::parse(Base(p), text); }

template <class T, class Load>
void round_trip(const T& value, Load load) {
  const Json j = to_json(value);
  CHECK(load(j) == value);
  CHECK(load(Json::parse(j.dump())) == value);
}

}  // namespace

TEST_CASE("transducer") {
  std::mt19937_64 rng(1);
  for (int p : {2, 3, 7}) {
    for (int t = 0; t < 5; ++t) round_trip(corpus::random_transducer(rng, Base(p), 9), transducer_from_json);
  }
  const Transducer labelled(Base(2), 2, 0, {1, 0, 1, 1}, {1, 0, 0, 1}, {"carry", "copy"});
  round_trip(labelled, transducer_from_json);
  const Json j = to_json(corpus::increment(Base(2)));
  CHECK(j["digit_order"] == "lsb");
  CHECK(j["p"] == 2);

  Json bad = j;
  bad["transition"][0][0] = 9;
  CHECK_THROWS_AS(transducer_from_json(bad), Error);
  bad = j;
  bad.erase("output");
  CHECK_THROWS_AS(transducer_from_json(bad), Error);
}

TEST_CASE("dfao and digit order") {
  round_trip(corpus::thue_morse(), dfao_from_json);
  Dfao named = corpus::thue_morse();
  named.alphabet = {"a", "b"};
  round_trip(named, dfao_from_json);
  Json j = to_json(corpus::thue_morse());
  j["digit_order"] = "msb";
  CHECK_THROWS_AS(dfao_from_json(j), Error);
  j.erase("digit_order");
  CHECK_THROWS_AS(dfao_from_json(j), Error);
}

TEST_CASE("vdp series") {
  const auto f = FunctionPresentation::affine(q(3, "1/2"), q(3, "5"));
  const VdpSeries s = extract(f, 3);
  round_trip(s, vdp_series_from_json);
  Json j = to_json(s);
  j["b"][4][0] = "123";
  CHECK_THROWS_AS(vdp_series_from_json(j), Error);
}

TEST_CASE("kernel") {
  const auto k = p_kernel(DfaoSequence{corpus::thue_morse()});
  round_trip(std::get<Kernel>(k), kernel_from_json);
}

TEST_CASE("synthesis result") {
  const Base b(2);
  for (const auto& f : {FunctionPresentation::affine(q(2, "1"), q(2, "3")),
                        FunctionPresentation::polynomial(b, {q(2, "0"), q(2, "0"), q(2, "1")})}) {
    const SynthesisResult r = synthesize_minimal(f, {.max_states = 32});
    CHECK(synthesis_from_json(to_json(r, b)) == r);
  }
}

TEST_CASE("relation document") {
  const GaloisField f4(Base(2), 2);
  AlgebraicRelation rel{2, {{1, 2}, {0, 3, 1}, {2}}, 2, 77};
  const RelationDocument doc = relation_from_json(to_json(f4, rel));
  CHECK(doc.field == f4);
  CHECK(doc.relation == rel);
  Json j = to_json(f4, rel);
  j["u"][0][0] = 4;
  CHECK_THROWS_AS(relation_from_json(j), Error);
}

TEST_CASE("verdicts and reports") {
  const Base b(2);
  for (const auto& f : {FunctionPresentation::affine(q(2, "1"), q(2, "3")),
                        FunctionPresentation::polynomial(b, {q(2, "0"), q(2, "0"), q(2, "1")}),
                        corpus::second_digit(b)}) {
    const FinitenessOptions opts{.depth = f.kind() == "vdp" ? 2u : 8u};
    const auto v = check_finiteness(f, opts);
    CHECK(verdict_from_json(to_json(v)) == v);
    const auto r = cross_check(f, opts, {.max_states = 32});
    CHECK(cross_check_from_json(to_json(r, b)) == r);
  }
  const FinitenessVerdict kb = KernelBoundExceeded{5, 8};
  CHECK(verdict_from_json(to_json(kb)) == kb);
}

TEST_CASE("dot output") {
  const std::string dot = to_dot(corpus::increment(Base(2)));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("__start") != std::string::npos);
  CHECK(dot.find("\"1/0\"") != std::string::npos);
  CHECK(dot.find("\"0/1\"") != std::string::npos);
  const std::string tm = to_dot(corpus::thue_morse());
  CHECK(tm.find("__start") != std::string::npos);
}
