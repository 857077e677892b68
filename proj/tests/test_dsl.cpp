#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "padic/corpus.hpp"
#include "padic/dsl.hpp"
#include "padic/serialize.hpp"

using namespace padic;

namespace {

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "padic_dsl_test";
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& path, const Json& j) { std::ofstream(path) << j.dump(2); }

}  // namespace

TEST_CASE("poly and affine") {
  const auto f = parse_presentation("poly p=2 [1, 3]");
  CHECK(f.kind() == "poly");
  CHECK(evaluate(f, 5) == RationalPadic(Base(2), 16L));
  const auto g = parse_presentation("  affine p=3 a=1/2 b=-4 ");
  CHECK(g.kind() == "affine");
  CHECK(evaluate(g, 1) == RationalPadic(Base(3), Rational(-7, 2)));
  CHECK(parse_presentation("poly p=5 [1/2]").get_if<Polynomial>()->coeffs.size() == 1);
}

TEST_CASE("files") {
  const auto dir = scratch();
  write(dir / "inc.json", to_json(corpus::increment(Base(2))));
  const auto a = parse_presentation("automaton inc.json", dir);
  REQUIRE(a.get_if<AutomatonBacked>());
  CHECK(a.get_if<AutomatonBacked>()->machine == corpus::increment(Base(2)));

  const VdpSeries s = extract(FunctionPresentation::affine(RationalPadic(Base(2), 1L), RationalPadic(Base(2), 3L)), 4);
  Json js = to_json(s);
  write(dir / "series.json", js);
  const auto v = parse_presentation("vdp series.json", dir);
  REQUIRE(v.get_if<VdpTable>());
  CHECK(v.get_if<VdpTable>()->tail == VdpTail::Zero);

  js["tail"] = "truncated";
  write(dir / "trunc.json", js);
  CHECK(load_presentation_file(dir / "trunc.json").get_if<VdpTable>()->tail == VdpTail::Truncated);
  CHECK(load_presentation_file(dir / "inc.json").kind() == "automaton");
  js["tail"] = "periodic";
  write(dir / "bad.json", js);
  CHECK_THROWS_AS(load_presentation_file(dir / "bad.json"), Error);
  CHECK_THROWS_AS(parse_presentation("automaton missing.json", dir), Error);
}

TEST_CASE("errors carry positions") {
  auto position = [](const char* text) {
    try {
      parse_presentation(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line, e.column);
    }
    FAIL("no error for " << text);
    return std::make_pair(std::size_t{0}, std::size_t{0});
  };
  CHECK(position("quadratic p=2") == std::make_pair(std::size_t{1}, std::size_t{1}));
  CHECK(position("poly p=2 [1, x]") == std::make_pair(std::size_t{1}, std::size_t{14}));
  CHECK(position("poly p=2 [1, 3") .second == 15);
  CHECK(position("poly p=1 [1]").second == 8);
  CHECK(position("poly p=2 [1/2]").second == 11);
  CHECK(position("affine p=2 a=1").second == 15);
  CHECK(position("\npoly p=2 [1] extra").first == 2);
  try {
    parse_presentation("poly q=2 [1]");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("1:6:", 0) == 0);
  }
}
