// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <cstdio>
#include <string>

#include "selfcheck.hpp"

int main() {
  using namespace padic;
  bool all = true;
  auto line = [&](int id, const std::string& name, bool pass, const std::string& detail) {
    all = all && pass;
    std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  };
  try {
    const auto one = selfcheck::run_all(1);
    for (const auto& o : one) line(o.id, o.name, o.pass, o.detail);
    const auto many = selfcheck::run_all(8);
    const std::string a = selfcheck::report(one).dump(2);
    const std::string b = selfcheck::report(many).dump(2);
    line(8, "thread-count determinism", a == b,
         a == b ? "reports identical at 1 and 8 threads (" + std::to_string(a.size()) + " bytes)"
                : "reports differ between 1 and 8 threads");
  } catch (const std::exception& e) {
    line(0, "harness", false, e.what());
  }
  return all ? 0 : 1;
}
