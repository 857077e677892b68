#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "padic/core.hpp"
#include "padic/presentation.hpp"
#include "padic/transducer.hpp"

namespace padic {

/// Shortlex numbering of words: the empty word is 0, and the nonempty words
/// of length n occupy [(p^n-1)/(p-1), (p^(n+1)-1)/(p-1)) ordered by value
/// with the most significant letter compared first.
class WordCode {
 public:
  explicit WordCode(Base base) : base_(base) {}

  Integer nu(const DigitWord& w) const;
  DigitWord omega(const Integer& i) const;
  /// Tuple view (chi_0, ..., chi_{n-1}) of a word.
  std::vector<int> theta(const DigitWord& w) const { return w.digits; }

  /// Number of words of length < n, i.e. (p^n - 1)/(p - 1).
  Integer count_shorter(std::size_t n) const;

 private:
  Base base_;
};

/// Word-indexed construction: states are the words of length < depth,
/// S(r, i) = nu(r ∘ omega(i)) and O(r, i) is digit |omega(i)| of f on the
/// extended word. Words of length depth-1 wrap back to the empty word, so
/// the machine agrees with f on inputs of length <= depth only.
/// Throws NotLipschitz when f fails the depth check.
Transducer naive_automaton(const FunctionPresentation& f, std::size_t depth, unsigned threads = 1);

/// f_{n,k}(z) = (f(n + p^k z) - (f(n) mod p^k)) / p^k as a presentation of
/// the same kind, with a canonical key: equal keys mean equal functions
/// (for truncated vdp tables, equal on the available depth).
struct Residual {
  FunctionPresentation function;
  std::string key;
  std::string description;
};

/// Requires k >= floor(log_p n) + 1.
Residual residual(const FunctionPresentation& f, const Integer& n, std::size_t k);

struct GrowthCertificate {
  std::size_t degree;
  /// Leading coefficients of the residuals at successive depths are
  /// pairwise distinct. Reported as evidence only for degree >= 2.
  bool heuristic;

  friend bool operator==(const GrowthCertificate&, const GrowthCertificate&) = default;
};

struct SynthesisResult {
  enum class Status { Finite, BoundExceeded };

  Status status;
  std::optional<Transducer> machine;
  std::size_t states_found = 0;
  /// Why exploration stopped: "max_states" or "depth".
  std::string stop_reason;
  /// A few pairwise distinct residuals, for inspection.
  std::vector<std::string> residual_sample;
  /// Present for truncated vdp tables: the machine is certified to agree
  /// with f mod p^certified_depth, residuals compared on `window` levels.
  std::optional<std::size_t> certified_depth;
  std::optional<std::size_t> window;
  std::optional<GrowthCertificate> certificate;

  friend bool operator==(const SynthesisResult&, const SynthesisResult&) = default;
};

struct SynthesisOptions {
  std::size_t max_states = 1024;
  /// Comparison window for truncated vdp tables (0 = half the depth).
  std::size_t window = 0;
  unsigned threads = 1;
};

/// Breadth-first exploration of the residuals of f. Each distinct residual
/// is a state; digit r leads from g to g_{r,1} with output g(r) mod p.
SynthesisResult synthesize_minimal(const FunctionPresentation& f, const SynthesisOptions& opts = {});

}  // namespace padic
