#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "padic/core.hpp"
#include "padic/vdp.hpp"

namespace padic {

/// Deterministic finite automaton with output, reading the base-p digits
/// of an index least significant first.
struct Dfao {
  Base base;
  std::size_t num_states;
  std::size_t initial;
  std::vector<std::size_t> delta;  ///< state * p + digit
  std::vector<int> output;         ///< symbol code per state
  /// Optional display names of the symbol codes.
  std::vector<std::string> alphabet;

  void validate() const;
  std::size_t next(std::size_t s, int d) const {
    return delta[s * static_cast<std::size_t>(base.value()) + static_cast<std::size_t>(d)];
  }

  friend bool operator==(const Dfao&, const Dfao&) = default;
};

/// Output after feeding the minimal digit word of n (empty for n = 0).
int automatic_eval(const Dfao& dfao, const Integer& n);

struct DfaoSequence {
  Dfao dfao;

  friend bool operator==(const DfaoSequence&, const DfaoSequence&) = default;
};

/// Values at indices 0..p^depth-1.
struct TableSequence {
  Base base;
  std::size_t depth;
  std::vector<int> values;
  std::vector<std::string> alphabet;

  friend bool operator==(const TableSequence&, const TableSequence&) = default;
};

/// The normalized coefficients (b_m) of a series, over the finite set of
/// values they take.
struct CoefficientStream {
  VdpSeries series;
};

using SequencePresentation = std::variant<DfaoSequence, TableSequence, CoefficientStream>;

/// b-values mapped to dense codes in ascending numeric order.
TableSequence coefficient_table(const VdpSeries& series);

struct KernelElement {
  /// Subsequence (a_{j p^level + offset})_j.
  std::size_t level;
  Integer offset;

  friend bool operator==(const KernelElement&, const KernelElement&) = default;
};

/// Two elements reported distinct differ at position j, i.e. at the
/// absolute indices j p^level + offset of each.
struct DistinctnessWitness {
  std::size_t first;
  std::size_t second;
  Integer index_first;
  Integer index_second;

  friend bool operator==(const DistinctnessWitness&, const DistinctnessWitness&) = default;
};

struct Kernel {
  Base base;
  std::vector<KernelElement> elements;
  std::vector<std::size_t> next;  ///< element * p + t -> element of (a_{p j + t})
  std::vector<int> head;          ///< first term of each element
  std::vector<std::string> alphabet;
  bool closed = false;
  /// Present for table-backed sequences, whose equality is depth-limited.
  std::optional<std::size_t> certified_depth;
  std::optional<std::size_t> window;
  std::vector<DistinctnessWitness> witnesses;

  friend bool operator==(const Kernel&, const Kernel&) = default;
};

struct KernelBoundExceeded {
  std::size_t elements_found;
  std::size_t depth;

  friend bool operator==(const KernelBoundExceeded&, const KernelBoundExceeded&) = default;
};

struct KernelOptions {
  std::size_t max_elems = 1024;
  /// Table depth to use (0 = everything available).
  std::size_t depth = 0;
  /// Comparison window in levels for tables (0 = half the depth).
  std::size_t window = 0;
  unsigned threads = 1;
};

/// Closure of the sequence under a -> (a_{p j + t})_j. DFAO-backed
/// sequences are exact; table-backed ones compare elements on their first
/// p^window terms and are accepted only if the resulting automaton
/// reproduces the whole table. An incomplete closure is returned with
/// closed = false.
std::variant<Kernel, KernelBoundExceeded> p_kernel(const SequencePresentation& seq,
                                                   const KernelOptions& opts = {});

/// States are kernel elements, digit t maps a to (a_{p j + t}), output a_0.
Dfao dfao_from_kernel(const Kernel& kernel);

/// Moore minimization; states renumbered in BFS order.
Dfao minimize(const Dfao& dfao);

}  // namespace padic
