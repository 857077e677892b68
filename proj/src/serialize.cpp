#include "padic/serialize.hpp"

#include <sstream>

namespace padic {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(std::string("field \"") + key + "\" has the wrong type");
  }
}

Base base_of(const Json& j) {
  const int p = field<int>(j, "p");
  if (p < 2) throw Error("p must be at least 2");
  return Base(p);
}

void require_lsb(const Json& j) {
  if (j.contains("digit_order") && field<std::string>(j, "digit_order") != "lsb")
    throw Error("digit_order must be \"lsb\"; other orders are not supported");
}

Integer parse_integer(const std::string& s) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw Error("malformed integer \"" + s + "\"");
  return v;
}

template <class T>
Json rows(const std::vector<T>& flat, std::size_t width) {
  Json out = Json::array();
  for (std::size_t i = 0; i < flat.size(); i += width)
    out.push_back(std::vector<T>(flat.begin() + static_cast<std::ptrdiff_t>(i),
                                 flat.begin() + static_cast<std::ptrdiff_t>(i + width)));
  return out;
}

template <class T>
std::vector<T> flatten(const Json& j, const char* key, std::size_t n, std::size_t width) {
  const auto table = field<std::vector<std::vector<T>>>(j, key);
  if (table.size() != n) throw Error(std::string("\"") + key + "\" needs one row per state");
  std::vector<T> flat;
  for (const auto& row : table) {
    if (row.size() != width) throw Error(std::string("\"") + key + "\" rows need one entry per digit");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key);
}

std::vector<std::string> strings(const std::vector<RationalPadic>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::vector<RationalPadic> rationals(Base base, const std::vector<std::string>& v) {
  std::vector<RationalPadic> out;
  for (const auto& s : v) out.push_back(RationalPadic::parse(base, s));
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Transducer& m) {
  const std::size_t p = static_cast<std::size_t>(m.base().value());
  Json j;
  j["p"] = m.base().value();
  j["digit_order"] = "lsb";
  j["states"] = m.num_states();
  j["initial"] = m.initial();
  j["transition"] = rows(m.transition_table(), p);
  j["output"] = rows(m.output_table(), p);
  if (!m.labels().empty()) j["labels"] = m.labels();
  return j;
}

Transducer transducer_from_json(const Json& j) {
  const Base base = base_of(j);
  require_lsb(j);
  const auto n = field<std::size_t>(j, "states");
  const std::size_t p = static_cast<std::size_t>(base.value());
  auto labels = j.contains("labels") ? field<std::vector<std::string>>(j, "labels")
                                     : std::vector<std::string>{};
  return Transducer(base, n, field<std::size_t>(j, "initial"), flatten<std::size_t>(j, "transition", n, p),
                    flatten<int>(j, "output", n, p), std::move(labels));
}

Json to_json(const Dfao& d) {
  Json j;
  j["p"] = d.base.value();
  j["digit_order"] = "lsb";
  j["states"] = d.num_states;
  j["initial"] = d.initial;
  j["delta"] = rows(d.delta, static_cast<std::size_t>(d.base.value()));
  j["output"] = d.output;
  if (!d.alphabet.empty()) j["alphabet"] = d.alphabet;
  return j;
}

Dfao dfao_from_json(const Json& j) {
  const Base base = base_of(j);
  if (field<std::string>(j, "digit_order") != "lsb")
    throw Error("DFAO digit_order must be \"lsb\"; refusing to load");
  const auto n = field<std::size_t>(j, "states");
  Dfao d{base,
         n,
         field<std::size_t>(j, "initial"),
         flatten<std::size_t>(j, "delta", n, static_cast<std::size_t>(base.value())),
         field<std::vector<int>>(j, "output"),
         j.contains("alphabet") ? field<std::vector<std::string>>(j, "alphabet")
                                : std::vector<std::string>{}};
  d.validate();
  return d;
}

Json to_json(const VdpSeries& s) {
  Json j;
  j["p"] = s.base.value();
  j["K"] = s.depth;
  j["B"] = strings(s.B);
  Json b = Json::array();
  for (const auto& x : s.b) b.push_back({x.numerator().get_str(), x.denominator().get_str()});
  j["b"] = b;
  return j;
}

VdpSeries vdp_series_from_json(const Json& j) {
  const Base base = base_of(j);
  const auto K = field<std::size_t>(j, "K");
  auto B = rationals(base, field<std::vector<std::string>>(j, "B"));
  if (B.size() != enumeration_size(base, K)) throw Error("\"B\" must list p^K coefficients");
  VdpSeries s = series_from_raw(base, K, std::move(B));
  if (j.contains("b")) {
    const auto b = field<std::vector<std::vector<std::string>>>(j, "b");
    if (b.size() != s.b.size()) throw Error("\"b\" must list p^K coefficients");
    for (std::size_t m = 0; m < b.size(); ++m) {
      if (b[m].size() != 2) throw Error("\"b\" entries are [numerator, denominator]");
      if (RationalPadic::parse(base, b[m][0] + "/" + b[m][1]) != s.b[m])
        throw Error("\"b\" disagrees with \"B\" at m=" + std::to_string(m));
    }
  }
  return s;
}

Json to_json(const Kernel& k) {
  Json j;
  j["p"] = k.base.value();
  j["digit_order"] = "lsb";
  j["closed"] = k.closed;
  j["certified_depth"] = optional_json(k.certified_depth);
  j["window"] = optional_json(k.window);
  Json elems = Json::array();
  for (const auto& e : k.elements) elems.push_back({{"level", e.level}, {"offset", e.offset.get_str()}});
  j["elements"] = elems;
  j["next"] = rows(k.next, static_cast<std::size_t>(k.base.value()));
  j["head"] = k.head;
  j["alphabet"] = k.alphabet;
  Json w = Json::array();
  for (const auto& x : k.witnesses)
    w.push_back({{"first", x.first},
                 {"second", x.second},
                 {"index_first", x.index_first.get_str()},
                 {"index_second", x.index_second.get_str()}});
  j["witnesses"] = w;
  return j;
}

Kernel kernel_from_json(const Json& j) {
  const Base base = base_of(j);
  require_lsb(j);
  Kernel k{base, {}, {}, {}, {}, field<bool>(j, "closed"), optional_field<std::size_t>(j, "certified_depth"),
           optional_field<std::size_t>(j, "window"), {}};
  for (const auto& e : field<Json>(j, "elements"))
    k.elements.push_back({field<std::size_t>(e, "level"), parse_integer(field<std::string>(e, "offset"))});
  const std::size_t p = static_cast<std::size_t>(base.value());
  // An unclosed kernel may have unexpanded elements, so rows are taken as is.
  for (const auto& row : field<std::vector<std::vector<std::size_t>>>(j, "next")) {
    if (row.size() != p) throw Error("\"next\" rows need one entry per digit");
    k.next.insert(k.next.end(), row.begin(), row.end());
  }
  k.head = field<std::vector<int>>(j, "head");
  k.alphabet = field<std::vector<std::string>>(j, "alphabet");
  for (const auto& w : field<Json>(j, "witnesses"))
    k.witnesses.push_back({field<std::size_t>(w, "first"), field<std::size_t>(w, "second"),
                           parse_integer(field<std::string>(w, "index_first")),
                           parse_integer(field<std::string>(w, "index_second"))});
  return k;
}

Json to_json(const KernelBoundExceeded& k) {
  return Json{{"result", "KernelBoundExceeded"}, {"elements_found", k.elements_found}, {"depth", k.depth}};
}

Json to_json(const SynthesisResult& r, Base base) {
  Json j;
  j["p"] = base.value();
  j["status"] = r.status == SynthesisResult::Status::Finite ? "Finite" : "BoundExceeded";
  j["states_found"] = r.states_found;
  j["stop_reason"] = r.stop_reason;
  j["residual_sample"] = r.residual_sample;
  j["certified_depth"] = optional_json(r.certified_depth);
  j["window"] = optional_json(r.window);
  j["certificate"] = r.certificate ? Json{{"degree", r.certificate->degree}, {"heuristic", r.certificate->heuristic}}
                                   : Json(nullptr);
  j["machine"] = r.machine ? to_json(*r.machine) : Json(nullptr);
  return j;
}

SynthesisResult synthesis_from_json(const Json& j) {
  const auto status = field<std::string>(j, "status");
  if (status != "Finite" && status != "BoundExceeded") throw Error("unknown synthesis status \"" + status + "\"");
  SynthesisResult r{status == "Finite" ? SynthesisResult::Status::Finite : SynthesisResult::Status::BoundExceeded,
                    std::nullopt,
                    field<std::size_t>(j, "states_found"),
                    field<std::string>(j, "stop_reason"),
                    field<std::vector<std::string>>(j, "residual_sample"),
                    optional_field<std::size_t>(j, "certified_depth"),
                    optional_field<std::size_t>(j, "window"),
                    std::nullopt};
  if (j.contains("certificate") && !j.at("certificate").is_null()) {
    const Json& c = j.at("certificate");
    r.certificate = GrowthCertificate{field<std::size_t>(c, "degree"), field<bool>(c, "heuristic")};
  }
  if (j.contains("machine") && !j.at("machine").is_null()) r.machine = transducer_from_json(j.at("machine"));
  return r;
}

Json to_json(const GaloisField& f, const AlgebraicRelation& rel) {
  Json j;
  j["p"] = f.base().value();
  j["l"] = f.degree();
  j["modulus"] = f.modulus();
  j["d"] = rel.degree;
  j["H"] = rel.height;
  j["u"] = rel.u;
  j["verified_precision"] = rel.verified_precision;
  return j;
}

RelationDocument relation_from_json(const Json& j) {
  const Base base = base_of(j);
  GaloisField f(base, field<std::size_t>(j, "l"));
  if (j.contains("modulus") && field<std::vector<int>>(j, "modulus") != f.modulus())
    throw Error("relation was written for a different field modulus");
  AlgebraicRelation rel;
  rel.degree = field<std::size_t>(j, "d");
  rel.u = field<std::vector<std::vector<GaloisField::Elem>>>(j, "u");
  if (rel.u.size() != rel.degree + 1) throw Error("\"u\" must hold d+1 polynomials");
  for (const auto& ui : rel.u)
    for (auto c : ui)
      if (c >= f.order()) throw Error("relation coefficient outside the field");
  rel.height = j.contains("H") ? field<std::size_t>(j, "H") : 0;
  rel.verified_precision = j.contains("verified_precision") ? field<std::size_t>(j, "verified_precision") : 0;
  return RelationDocument{f, rel};
}

Json to_json(const NotFoundWithinBounds& n) {
  return Json{{"result", "NotFoundWithinBounds"},
              {"max_d", n.max_degree},
              {"max_H", n.max_height},
              {"precision", n.precision}};
}

Json to_json(const RelationCheck& c) {
  if (const auto* h = std::get_if<Holds>(&c)) return Json{{"result", "Holds"}, {"precision", h->precision}};
  return Json{{"result", "FailsAt"}, {"index", std::get<FailsAt>(c).index}};
}

Json to_json(const FinitenessVerdict& v) {
  Json j;
  j["verdict"] = verdict_name(v);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SatisfiesCriterion>) {
          j["p"] = x.kernel.base.value();
          j["B_f"] = strings(x.values);
          j["certified_depth"] = x.certified_depth;
          j["kernel"] = to_json(x.kernel);
          j["kernel_dfao"] = to_json(x.dfao);
        } else if constexpr (std::is_same_v<T, FailsIntegrality>) {
          j["p"] = x.coefficient.base().value();
          j["m"] = x.m.get_str();
          j["B_m"] = x.coefficient.to_string();
        } else if constexpr (std::is_same_v<T, ValueBoundExceeded>) {
          j["distinct_count"] = x.distinct_count;
          j["depth"] = x.depth;
          j["earlier_count"] = x.earlier_count;
          j["stable"] = x.stable;
        } else {
          j["elements_found"] = x.elements_found;
          j["depth"] = x.depth;
        }
      },
      v);
  return j;
}

FinitenessVerdict verdict_from_json(const Json& j) {
  const auto name = field<std::string>(j, "verdict");
  if (name == "SatisfiesCriterion") {
    const Base base = base_of(j);
    return SatisfiesCriterion{rationals(base, field<std::vector<std::string>>(j, "B_f")),
                              kernel_from_json(field<Json>(j, "kernel")), dfao_from_json(field<Json>(j, "kernel_dfao")),
                              field<std::size_t>(j, "certified_depth")};
  }
  if (name == "FailsIntegrality") {
    const Base base = base_of(j);
    return FailsIntegrality{parse_integer(field<std::string>(j, "m")),
                            RationalPadic::parse(base, field<std::string>(j, "B_m"))};
  }
  if (name == "ValueBoundExceeded")
    return ValueBoundExceeded{field<std::size_t>(j, "distinct_count"), field<std::size_t>(j, "depth"),
                              field<std::size_t>(j, "earlier_count"), field<bool>(j, "stable")};
  if (name == "KernelBoundExceeded")
    return KernelBoundExceeded{field<std::size_t>(j, "elements_found"), field<std::size_t>(j, "depth")};
  throw Error("unknown verdict \"" + name + "\"");
}

Json to_json(const CrossCheckReport& r, Base base) {
  Json j;
  j["finiteness"] = to_json(r.verdict);
  j["synthesis"] = r.synthesis ? to_json(*r.synthesis, base) : Json(nullptr);
  j["agreement"] = agreement_name(r.agreement);
  return j;
}

CrossCheckReport cross_check_from_json(const Json& j) {
  CrossCheckReport r{verdict_from_json(field<Json>(j, "finiteness")), std::nullopt, Agreement::Agree};
  if (j.contains("synthesis") && !j.at("synthesis").is_null()) r.synthesis = synthesis_from_json(j.at("synthesis"));
  const auto a = field<std::string>(j, "agreement");
  if (a == "agree")
    r.agreement = Agreement::Agree;
  else if (a == "inconclusive-consistent")
    r.agreement = Agreement::InconclusiveConsistent;
  else if (a == "inconsistent")
    r.agreement = Agreement::Inconsistent;
  else
    throw Error("unknown agreement \"" + a + "\"");
  return r;
}

Json to_json(const LipschitzViolation& v) {
  return Json{{"result", "Violation"}, {"x", v.x.get_str()}, {"y", v.y.get_str()}, {"n", v.n}};
}

std::string to_dot(const Transducer& m) {
  std::ostringstream os;
  os << "digraph transducer {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    os << "  s" << s << " [shape=circle, label="
       << quote(s < m.labels().size() ? m.labels()[s] : std::to_string(s)) << "];\n";
  }
  os << "  __start -> s" << m.initial() << ";\n";
  for (std::size_t s = 0; s < m.num_states(); ++s)
    for (int r = 0; r < m.base().value(); ++r)
      os << "  s" << s << " -> s" << m.next(s, r) << " [label=\"" << r << "/" << m.output(s, r) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const Dfao& d) {
  std::ostringstream os;
  os << "digraph dfao {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (std::size_t s = 0; s < d.num_states; ++s) {
    const int o = d.output[s];
    const std::string sym =
        static_cast<std::size_t>(o) < d.alphabet.size() ? d.alphabet[static_cast<std::size_t>(o)] : std::to_string(o);
    os << "  s" << s << " [shape=circle, label=" << quote(std::to_string(s) + " / " + sym) << "];\n";
  }
  os << "  __start -> s" << d.initial << ";\n";
  for (std::size_t s = 0; s < d.num_states; ++s)
    for (int r = 0; r < d.base.value(); ++r)
      os << "  s" << s << " -> s" << d.next(s, r) << " [label=\"" << r << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace padic
