#pragma once

#include <string>
#include <vector>

#include "padic/serialize.hpp"

namespace padic::selfcheck {

struct Outcome {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  /// Deterministic artifact; must not depend on the thread count.
  Json artifact;
};

Outcome random_machine_roundtrip(unsigned threads);
Outcome vdp_roundtrip(unsigned threads);
Outcome integrality(unsigned threads);
Outcome finiteness_cross_check(unsigned threads);
Outcome thue_morse_kernel(unsigned threads);
Outcome thue_morse_relation(unsigned threads);
Outcome lipschitz_checker(unsigned threads);

/// Checks 1 through 7 in order.
std::vector<Outcome> run_all(unsigned threads);

/// {"checks": [...], "all_pass": bool}
Json report(const std::vector<Outcome>& outcomes);

}  // namespace padic::selfcheck
