#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "padic/core.hpp"
#include "padic/galois.hpp"
#include "padic/kernel.hpp"

namespace padic {

/// Power series sum a_i X^i over GF(p^l), known up to X^precision.
struct SeriesOverFq {
  GaloisField field;
  std::vector<GaloisField::Elem> coeffs;

  std::size_t precision() const { return coeffs.size(); }

  /// a_i = tau[dfao(i)] for i < precision.
  static SeriesOverFq from_dfao(const GaloisField& field, const Dfao& dfao,
                                const std::vector<GaloisField::Elem>& tau, std::size_t precision);
  static SeriesOverFq from_table(const GaloisField& field, std::vector<GaloisField::Elem> coeffs);
};

/// u_0 + u_1 F + ... + u_d F^d = 0, each u_i a coefficient list over the
/// field (constant term first).
struct AlgebraicRelation {
  std::size_t degree = 0;
  std::vector<std::vector<GaloisField::Elem>> u;
  /// Degree bound the search used for every u_i.
  std::size_t height = 0;
  /// Precision at which the relation was last checked (0 if never).
  std::size_t verified_precision = 0;

  friend bool operator==(const AlgebraicRelation&, const AlgebraicRelation&) = default;
};

struct Holds {
  std::size_t precision;

  friend bool operator==(const Holds&, const Holds&) = default;
};
struct FailsAt {
  std::size_t index;

  friend bool operator==(const FailsAt&, const FailsAt&) = default;
};
using RelationCheck = std::variant<Holds, FailsAt>;

/// Evaluates sum u_i F^i mod X^N. Throws on the all-zero relation or when N
/// exceeds the series precision.
RelationCheck verify_relation(const SeriesOverFq& f, const AlgebraicRelation& rel, std::size_t n);

struct NotFoundWithinBounds {
  std::size_t max_degree;
  std::size_t max_height;
  std::size_t precision;

  friend bool operator==(const NotFoundWithinBounds&, const NotFoundWithinBounds&) = default;
};

struct RelationSearch {
  std::size_t max_degree = 2;
  std::size_t max_height = 3;
  std::size_t margin = 32;
  unsigned threads = 1;
};

/// Linear-algebra search over d = 1..max_degree, then H = 0..max_height. The
/// system for (d, H) is solved at N = (d+1)(H+1) + margin; the first kernel
/// vector of the reduced row echelon form is returned once it also holds at
/// 2N. The series must be known to the largest 2N the search may need.
std::variant<AlgebraicRelation, NotFoundWithinBounds> find_relation(const SeriesOverFq& f,
                                                                    const RelationSearch& opts = {});

/// Precision find_relation needs at the given bounds.
std::size_t required_precision(const RelationSearch& opts);

/// Injection of a finite set of values into GF(p^l): values in ascending
/// order are sent to 0, 1, 2, ...
struct TauEmbedding {
  std::size_t degree;
  std::map<RationalPadic, GaloisField::Elem> tau;
};

/// Chooses the least l with p^l >= |values| unless `degree` is given.
TauEmbedding tau_embed(Base base, const std::vector<RationalPadic>& values,
                       std::optional<std::size_t> degree = std::nullopt);

}  // namespace padic
