// Thin bindings: documents cross the boundary as JSON text, big integers
// as decimal strings. The package __init__ wraps these in Python types.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "padic/christol.hpp"
#include "padic/dsl.hpp"
#include "padic/serialize.hpp"
#include "selfcheck.hpp"

namespace py = pybind11;
using namespace padic;

namespace {

// `source` is presentation text, or a transducer / series document when
// `is_json` is set.
FunctionPresentation load(const std::string& source, bool is_json) {
  if (!is_json) return parse_presentation(source);
  const Json j = Json::parse(source);
  if (j.contains("K")) {
    const VdpSeries s = vdp_series_from_json(j);
    return FunctionPresentation::vdp_table(s.base, s.depth, s.B,
                                           j.value("tail", "zero") == "truncated" ? VdpTail::Truncated
                                                                                  : VdpTail::Zero);
  }
  return FunctionPresentation::automaton(transducer_from_json(j));
}

std::string eval(const std::string& source, bool is_json, const std::string& x, std::size_t n) {
  const Integer value(x);
  return evaluate_mod(load(source, is_json), value, n).get_str();
}

std::string lipschitz(const std::string& source, bool is_json, std::size_t depth, unsigned threads) {
  const auto v = check_lipschitz_depth(load(source, is_json), depth, threads);
  if (!v) return Json{{"result", "Ok"}, {"depth", depth}}.dump();
  return to_json(*v).dump();
}

std::string vdp(const std::string& source, bool is_json, std::size_t depth, unsigned threads) {
  return to_json(extract(load(source, is_json), depth, threads)).dump();
}

std::string synth_minimal(const std::string& source, bool is_json, std::size_t max_states, unsigned threads) {
  const auto f = load(source, is_json);
  return to_json(synthesize_minimal(f, {.max_states = max_states, .threads = threads}), f.base()).dump();
}

std::string synth_naive(const std::string& source, bool is_json, std::size_t depth, unsigned threads) {
  return to_json(naive_automaton(load(source, is_json), depth, threads)).dump();
}

std::string minimize_machine(const std::string& machine) {
  return to_json(minimize(transducer_from_json(Json::parse(machine)))).dump();
}

std::string kernel(const std::string& dfao, std::size_t max_elems, unsigned threads) {
  const auto k = p_kernel(DfaoSequence{dfao_from_json(Json::parse(dfao))},
                          {.max_elems = max_elems, .threads = threads});
  return std::visit([](const auto& r) { return to_json(r).dump(); }, k);
}

int dfao_eval(const std::string& dfao, const std::string& n) {
  return automatic_eval(dfao_from_json(Json::parse(dfao)), Integer(n));
}

std::string finiteness(const std::string& source, bool is_json, std::size_t depth, std::size_t value_bound,
                       std::size_t kernel_bound, unsigned threads) {
  return to_json(check_finiteness(load(source, is_json), {.depth = depth,
                                                        .value_bound = value_bound,
                                                        .kernel_bound = kernel_bound,
                                                        .threads = threads}))
      .dump();
}

std::string cross(const std::string& source, bool is_json, std::size_t depth, std::size_t max_states,
                  unsigned threads) {
  const auto f = load(source, is_json);
  return to_json(cross_check(f, {.depth = depth, .threads = threads},
                             {.max_states = max_states, .threads = threads}),
                 f.base())
      .dump();
}

std::string christol_find(const std::string& dfao_text, std::optional<std::vector<GaloisField::Elem>> tau,
                          std::optional<std::size_t> degree, std::size_t max_d, std::size_t max_h,
                          std::size_t margin, unsigned threads) {
  const Dfao dfao = dfao_from_json(Json::parse(dfao_text));
  std::size_t symbols = 0;
  for (int o : dfao.output) symbols = std::max(symbols, static_cast<std::size_t>(o) + 1);
  std::size_t l = degree.value_or(1);
  if (!degree)
    while (dfao.base.pow(l) < symbols) ++l;
  const GaloisField field(dfao.base, l);
  std::vector<GaloisField::Elem> t;
  if (tau) {
    t = *tau;
  } else {
    for (std::size_t i = 0; i < symbols; ++i) t.push_back(static_cast<GaloisField::Elem>(i));
  }
  const RelationSearch opts{max_d, max_h, margin, threads};
  const auto series = SeriesOverFq::from_dfao(field, dfao, t, required_precision(opts));
  const auto r = find_relation(series, opts);
  if (const auto* rel = std::get_if<AlgebraicRelation>(&r)) return to_json(field, *rel).dump();
  return to_json(std::get<NotFoundWithinBounds>(r)).dump();
}

std::string dot(const std::string& doc) {
  const Json j = Json::parse(doc);
  if (j.contains("delta")) return to_dot(dfao_from_json(j));
  return to_dot(transducer_from_json(j));
}

std::string verify(unsigned threads) { return selfcheck::report(selfcheck::run_all(threads)).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "p-adic automata core (JSON text interface)";
  py::register_exception<Error>(m, "PadicError", PyExc_ValueError);

  m.def("eval", &eval, py::arg("source"), py::arg("is_json"), py::arg("x"), py::arg("n"));
  m.def("lipschitz_check", &lipschitz, py::arg("source"), py::arg("is_json"), py::arg("depth"),
        py::arg("threads") = 1);
  m.def("vdp", &vdp, py::arg("source"), py::arg("is_json"), py::arg("depth"), py::arg("threads") = 1);
  m.def("synth_minimal", &synth_minimal, py::arg("source"), py::arg("is_json"), py::arg("max_states") = 1024,
        py::arg("threads") = 1);
  m.def("synth_naive", &synth_naive, py::arg("source"), py::arg("is_json"), py::arg("depth"),
        py::arg("threads") = 1);
  m.def("minimize", &minimize_machine, py::arg("machine"));
  m.def("kernel", &kernel, py::arg("dfao"), py::arg("max_elems") = 1024, py::arg("threads") = 1);
  m.def("dfao_eval", &dfao_eval, py::arg("dfao"), py::arg("n"));
  m.def("finiteness", &finiteness, py::arg("source"), py::arg("is_json"), py::arg("depth") = 10,
        py::arg("value_bound") = 64, py::arg("kernel_bound") = 1024, py::arg("threads") = 1);
  m.def("cross_check", &cross, py::arg("source"), py::arg("is_json"), py::arg("depth") = 10,
        py::arg("max_states") = 1024, py::arg("threads") = 1);
  m.def("christol_find", &christol_find, py::arg("dfao"), py::arg("tau") = py::none(),
        py::arg("degree") = py::none(), py::arg("max_d") = 2, py::arg("max_h") = 3, py::arg("margin") = 32,
        py::arg("threads") = 1);
  m.def("to_dot", &dot, py::arg("document"));
  m.def("acceptance_report", &verify, py::arg("threads") = 1);
}
