#pragma once

#include <string>

#include <json.hpp>

#include "padic/christol.hpp"
#include "padic/finiteness.hpp"
#include "padic/kernel.hpp"
#include "padic/presentation.hpp"
#include "padic/synthesis.hpp"
#include "padic/transducer.hpp"
#include "padic/vdp.hpp"

namespace padic {

using Json = nlohmann::ordered_json;

// Every loader validates its input and throws padic::Error on malformed
// documents. Rationals are written as "num/den" strings, big integers as
// decimal strings.

Json to_json(const Transducer& m);
Transducer transducer_from_json(const Json& j);

Json to_json(const Dfao& d);
/// Refuses documents whose digit_order is not "lsb".
Dfao dfao_from_json(const Json& j);

Json to_json(const VdpSeries& s);
VdpSeries vdp_series_from_json(const Json& j);

Json to_json(const Kernel& k);
Kernel kernel_from_json(const Json& j);
Json to_json(const KernelBoundExceeded& k);

Json to_json(const SynthesisResult& r, Base base);
SynthesisResult synthesis_from_json(const Json& j);

/// A relation is only meaningful with its field, so both travel together.
struct RelationDocument {
  GaloisField field;
  AlgebraicRelation relation;

  friend bool operator==(const RelationDocument&, const RelationDocument&) = default;
};
Json to_json(const GaloisField& field, const AlgebraicRelation& rel);
RelationDocument relation_from_json(const Json& j);
Json to_json(const NotFoundWithinBounds& n);
Json to_json(const RelationCheck& c);

Json to_json(const FinitenessVerdict& v);
FinitenessVerdict verdict_from_json(const Json& j);

Json to_json(const CrossCheckReport& r, Base base);
CrossCheckReport cross_check_from_json(const Json& j);

Json to_json(const LipschitzViolation& v);

/// Graphviz rendering: one node per state, edges labeled "in/out", the
/// initial state marked by an arrow from an invisible start node.
std::string to_dot(const Transducer& m);
std::string to_dot(const Dfao& d);

}  // namespace padic
