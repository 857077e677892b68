#include "padic/dsl.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <vector>

#include "padic/serialize.hpp"

namespace padic {

ParseError::ParseError(std::size_t l, std::size_t c, const std::string& message)
    : Error(std::to_string(l) + ":" + std::to_string(c) + ": " + message), line(l), column(c) {}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, col_, message); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  // Identifier, number, rational or path: a run of non-space characters
  // that are not structural punctuation.
  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != ',' && text_[pos_] != '[' && text_[pos_] != ']' && text_[pos_] != '=')
      advance();
    if (start == pos_) fail("unexpected " + describe());
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string rest() {
    skip_space();
    std::string s(text_.substr(pos_));
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    while (pos_ < text_.size()) advance();
    return s;
  }

  std::size_t line() const { return line_; }
  std::size_t column() {
    skip_space();
    return col_;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  std::string describe() const {
    if (pos_ >= text_.size()) return "end of input";
    return std::string("'") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct Located {
  std::string text;
  std::size_t line;
  std::size_t column;
};

Located located_word(Scanner& s) {
  const std::size_t col = s.column();
  const std::size_t line = s.line();
  return {s.word(), line, col};
}

Base parse_base(const Located& v) {
  int p = 0;
  for (char c : v.text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || p > 1000000)
      throw ParseError(v.line, v.column, "p must be an integer >= 2");
    p = p * 10 + (c - '0');
  }
  if (p < 2) throw ParseError(v.line, v.column, "p must be an integer >= 2");
  return Base(p);
}

RationalPadic parse_coeff(Base base, const Located& v) {
  try {
    return RationalPadic::parse(base, v.text);
  } catch (const Error& e) {
    throw ParseError(v.line, v.column, e.what());
  }
}

// key=value, with the key checked against `name`.
Located keyed(Scanner& s, const char* name) {
  const Located key = located_word(s);
  if (key.text != name) throw ParseError(key.line, key.column, std::string("expected '") + name + "='");
  s.expect('=');
  return located_word(s);
}

}  // namespace

FunctionPresentation load_presentation_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path.string() + ": invalid JSON: " + e.what());
  }
  if (j.contains("K")) {
    VdpTail tail = VdpTail::Zero;
    if (j.contains("tail")) {
      const auto t = j.at("tail").get<std::string>();
      if (t == "truncated")
        tail = VdpTail::Truncated;
      else if (t != "zero")
        throw Error(path.string() + ": tail must be \"zero\" or \"truncated\"");
    }
    // Without "b" the raw table is taken as is, so functions that are not
    // 1-Lipschitz stay loadable.
    if (!j.contains("b")) {
      try {
        const Base base(j.at("p").get<int>());
        std::vector<RationalPadic> B;
        for (const auto& t : j.at("B")) B.push_back(RationalPadic::parse(base, t.get<std::string>()));
        return FunctionPresentation::vdp_table(base, j.at("K").get<std::size_t>(), std::move(B), tail);
      } catch (const nlohmann::json::exception& e) {
        throw Error(path.string() + ": malformed series: " + e.what());
      }
    }
    const VdpSeries s = vdp_series_from_json(j);
    return FunctionPresentation::vdp_table(s.base, s.depth, s.B, tail);
  }
  return FunctionPresentation::automaton(transducer_from_json(j));
}

FunctionPresentation parse_presentation(std::string_view text, const std::filesystem::path& dir) {
  Scanner s(text);
  if (s.done()) s.fail("empty presentation");
  const Located kind = located_word(s);
  std::optional<FunctionPresentation> result;

  if (kind.text == "poly") {
    const Base base = parse_base(keyed(s, "p"));
    s.expect('[');
    std::vector<RationalPadic> coeffs;
    if (s.peek() != ']') {
      for (;;) {
        coeffs.push_back(parse_coeff(base, located_word(s)));
        if (s.peek() == ']') break;
        s.expect(',');
      }
    }
    s.expect(']');
    result = FunctionPresentation::polynomial(base, std::move(coeffs));
  } else if (kind.text == "affine") {
    const Base base = parse_base(keyed(s, "p"));
    const RationalPadic a = parse_coeff(base, keyed(s, "a"));
    const RationalPadic b = parse_coeff(base, keyed(s, "b"));
    result = FunctionPresentation::affine(a, b);
  } else if (kind.text == "automaton" || kind.text == "vdp") {
    const std::size_t line = s.line(), col = s.column();
    const std::string file = s.rest();
    if (file.empty()) throw ParseError(line, col, "expected a file name");
    std::filesystem::path path(file);
    if (path.is_relative() && !dir.empty()) path = dir / path;
    FunctionPresentation f = load_presentation_file(path);
    if ((kind.text == "vdp") != (f.kind() == "vdp"))
      throw ParseError(line, col, file + " does not hold a " + kind.text + " description");
    return f;
  } else {
    throw ParseError(kind.line, kind.column, "unknown presentation kind '" + kind.text +
                                                 "' (expected poly, affine, automaton or vdp)");
  }
  if (!s.done()) s.fail("trailing input");
  return *result;
}

}  // namespace padic
