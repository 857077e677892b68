#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "padic/core.hpp"
#include "padic/kernel.hpp"
#include "padic/presentation.hpp"
#include "padic/synthesis.hpp"

namespace padic {

/// Both conditions hold at depth K: the b_m for m < p^K take the listed
/// values, and the kernel of (b_m) closed into `dfao`.
struct SatisfiesCriterion {
  std::vector<RationalPadic> values;
  Kernel kernel;
  Dfao dfao;
  std::size_t certified_depth;

  friend bool operator==(const SatisfiesCriterion&, const SatisfiesCriterion&) = default;
};

/// Some b_m is not in Z_p, so f is not 1-Lipschitz.
struct FailsIntegrality {
  Integer m;
  RationalPadic coefficient;

  friend bool operator==(const FailsIntegrality&, const FailsIntegrality&) = default;
};

/// Too many distinct b_m, or their count was still growing between depth
/// K-2 and K.
struct ValueBoundExceeded {
  std::size_t distinct_count;
  std::size_t depth;
  /// Distinct count at depth K-2 (or K when K < 3).
  std::size_t earlier_count;
  bool stable;

  friend bool operator==(const ValueBoundExceeded&, const ValueBoundExceeded&) = default;
};

using FinitenessVerdict =
    std::variant<SatisfiesCriterion, FailsIntegrality, ValueBoundExceeded, KernelBoundExceeded>;

struct FinitenessOptions {
  std::size_t depth = 10;
  std::size_t value_bound = 64;
  std::size_t kernel_bound = 1024;
  /// Kernel comparison window in levels (0 = half the depth).
  std::size_t window = 0;
  unsigned threads = 1;
};

/// Exact DFAO for the sequence (b_m) of an automaton function. With q the
/// state reached on the low k digits of m and s its top digit,
/// b_m = F_q(s) - F_q(0) for k >= 1, where F_q is the function computed
/// from q; single-digit m give b_m = f(m).
struct CoefficientAutomaton {
  Dfao dfao;
  /// The values taken by (b_m), ascending; symbol i of the DFAO is values[i].
  std::vector<RationalPadic> values;
};

CoefficientAutomaton coefficient_automaton(const Transducer& m);

/// Condition (i) on the b_m below p^K and condition (ii) on the kernel of
/// (b_m). For automaton-backed f both are decided exactly from
/// coefficient_automaton, which is cross-checked against the extracted
/// table; other presentations use the depth-limited table kernel.
FinitenessVerdict check_finiteness(const FunctionPresentation& f, const FinitenessOptions& opts = {});

/// True for the verdicts that are certificates rather than bound reports.
bool is_certificate(const FinitenessVerdict& v);
std::string verdict_name(const FinitenessVerdict& v);

enum class Agreement {
  /// Both sides give certificates and they match.
  Agree,
  /// At least one side hit a bound; nothing contradicts the other side.
  InconclusiveConsistent,
  /// Certified results contradict each other.
  Inconsistent,
};

std::string agreement_name(Agreement a);

struct CrossCheckReport {
  FinitenessVerdict verdict;
  /// Absent when synthesis was not run (f failed integrality).
  std::optional<SynthesisResult> synthesis;
  Agreement agreement;

  friend bool operator==(const CrossCheckReport&, const CrossCheckReport&) = default;
};

CrossCheckReport cross_check(const FunctionPresentation& f, const FinitenessOptions& opts,
                             const SynthesisOptions& synth);

}  // namespace padic
