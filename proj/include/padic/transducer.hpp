#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "padic/core.hpp"

namespace padic {

/// Initial letter-to-letter Mealy machine over {0..p-1}.
///
/// Tables are indexed by `state * p + digit`. Construction checks that
/// both tables are total and in range; reachability from the initial
/// state is not enforced here (see trim_reachable).
class Transducer {
 public:
  Transducer(Base base, std::size_t num_states, std::size_t initial,
             std::vector<std::size_t> transition, std::vector<int> output,
             std::vector<std::string> labels = {});

  Base base() const { return base_; }
  std::size_t num_states() const { return num_states_; }
  std::size_t initial() const { return initial_; }

  std::size_t next(std::size_t state, int digit) const {
    return transition_[state * static_cast<std::size_t>(base_.value()) +
                       static_cast<std::size_t>(digit)];
  }
  int output(std::size_t state, int digit) const {
    return output_[state * static_cast<std::size_t>(base_.value()) +
                   static_cast<std::size_t>(digit)];
  }

  const std::vector<std::size_t>& transition_table() const { return transition_; }
  const std::vector<int>& output_table() const { return output_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool all_reachable() const;

  friend bool operator==(const Transducer&, const Transducer&) = default;

 private:
  Base base_;
  std::size_t num_states_;
  std::size_t initial_;
  std::vector<std::size_t> transition_;
  std::vector<int> output_;
  std::vector<std::string> labels_;
};

/// Output word for w, digit i being O(w_i, s_i) with s_{i+1} = S(w_i, s_i).
DigitWord eval_word(const Transducer& m, const DigitWord& w);

/// The map induced on Z/p^nZ; x must lie in [0, p^n).
Integer eval_mod(const Transducer& m, const Integer& x, std::size_t n);

/// State reached from `from` after reading w.
std::size_t run(const Transducer& m, std::size_t from, const DigitWord& w);

/// Exact automaton-function value on a non-negative integer: the input is
/// x followed by infinitely many zeros, so the output stream is eventually
/// periodic and names an element of Q ∩ Z_p.
RationalPadic eval_exact(const Transducer& m, std::size_t from, const Integer& x);

/// Keeps the states reachable from the initial one, renumbered in BFS order
/// (digits ascending).
Transducer trim_reachable(const Transducer& m);

/// Mealy minimization by partition refinement, initial partition by output
/// row. States of the result are numbered in BFS order from the initial
/// state.
Transducer minimize(const Transducer& m);

/// The machine restarted at state s and trimmed to what s reaches.
Transducer subautomaton(const Transducer& m, std::size_t s);

/// Exact behavioral equality by product exploration of reachable state pairs.
/// On inequality returns a shortest distinguishing word.
std::optional<DigitWord> distinguishing_word(const Transducer& a, const Transducer& b);
bool behaviorally_equal(const Transducer& a, const Transducer& b);

/// Number of behaviors among states at depth <= core_depth, where two states
/// are identified when they agree on every word of length <= horizon.
/// Suitable for machines whose tables are only meaningful up to a bounded
/// input length (core_depth + horizon).
std::size_t count_bounded_behaviors(const Transducer& m, std::size_t core_depth,
                                    std::size_t horizon);

}  // namespace padic
