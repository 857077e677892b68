#include "padic/finiteness.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "padic/vdp.hpp"

namespace padic {

namespace {

std::size_t distinct_below(const std::vector<RationalPadic>& b, std::size_t n) {
  return std::set<RationalPadic>(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n)).size();
}

}  // namespace

CoefficientAutomaton coefficient_automaton(const Transducer& machine) {
  const Transducer m = minimize(machine);
  const Base base = m.base();
  const std::size_t p = static_cast<std::size_t>(base.value());
  const std::size_t n = m.num_states();
  // State 0 reads nothing; (q, s, first) has read a word ending in s, q
  // being the machine state before s. Layout: 1 + (first ? 0 : n p) + q p + s.
  const std::size_t size = 1 + 2 * n * p;
  auto id = [&](std::size_t q, std::size_t s, bool first) { return 1 + (first ? 0 : n * p) + q * p + s; };

  std::vector<std::optional<RationalPadic>> value(size);
  value[0] = eval_exact(m, m.initial(), 0);
  for (std::size_t q = 0; q < n; ++q) {
    const RationalPadic at_zero = eval_exact(m, q, 0);
    for (std::size_t s = 0; s < p; ++s) {
      const RationalPadic at_s = eval_exact(m, q, Integer(static_cast<unsigned long>(s)));
      if (q == m.initial() && s != 0) value[id(q, s, true)] = at_s;
      // A minimal word never ends in 0, so those states carry no value.
      if (s != 0) value[id(q, s, false)] = at_s - at_zero;
    }
  }

  std::vector<std::size_t> delta(size * p);
  for (std::size_t s = 0; s < p; ++s) delta[s] = id(m.initial(), s, true);
  for (int first = 1; first >= 0; --first)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < p; ++s)
        for (std::size_t r = 0; r < p; ++r)
          delta[id(q, s, first) * p + r] = id(m.next(q, static_cast<int>(s)), r, false);

  // Values on states reachable by some minimal word (last letter nonzero).
  std::vector<bool> seen(size, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  std::set<RationalPadic> values;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::size_t u = queue[h];
    if (value[u]) values.insert(*value[u]);
    for (std::size_t r = 0; r < p; ++r)
      if (!seen[delta[u * p + r]]) {
        seen[delta[u * p + r]] = true;
        queue.push_back(delta[u * p + r]);
      }
  }
  CoefficientAutomaton out{Dfao{base, size, 0, std::move(delta), std::vector<int>(size, 0), {}},
                           {values.begin(), values.end()}};
  for (const auto& v : out.values) out.dfao.alphabet.push_back(v.to_string());
  for (std::size_t u = 0; u < size; ++u)
    if (value[u] && seen[u])
      out.dfao.output[u] = static_cast<int>(
          std::lower_bound(out.values.begin(), out.values.end(), *value[u]) - out.values.begin());
  out.dfao = minimize(out.dfao);
  return out;
}

FinitenessVerdict check_finiteness(const FunctionPresentation& f, const FinitenessOptions& opts) {
  const Base base = f.base();
  const std::size_t K = opts.depth;
  if (K == 0) throw Error("finiteness depth must be at least 1");

  // Integrality of every b_m below p^K is the 1-Lipschitz property at depth
  // K, so a failing coefficient doubles as the Lipschitz witness.
  VdpSeries series{base, K, {}, {}};
  try {
    series = extract(f, K, opts.threads);
  } catch (const NotIntegral& e) {
    return FailsIntegrality{e.m, e.coefficient};
  }

  KernelOptions ko;
  ko.max_elems = opts.kernel_bound;
  ko.depth = K;
  ko.window = opts.window;
  ko.threads = opts.threads;

  if (const auto* a = f.get_if<AutomatonBacked>()) {
    CoefficientAutomaton ca = coefficient_automaton(a->machine);
    for (std::size_t m = 0; m < series.b.size(); ++m)
      if (ca.values[static_cast<std::size_t>(automatic_eval(ca.dfao, Integer(static_cast<unsigned long>(m))))] !=
          series.b[m])
        throw Error("coefficient automaton disagrees with extracted b_" + std::to_string(m));
    const std::size_t count = ca.values.size();
    if (count > opts.value_bound) return ValueBoundExceeded{count, K, count, true};
    auto kernel = p_kernel(DfaoSequence{ca.dfao}, ko);
    if (auto* exceeded = std::get_if<KernelBoundExceeded>(&kernel)) {
      exceeded->depth = K;
      return *exceeded;
    }
    Kernel& k = std::get<Kernel>(kernel);
    Dfao dfao = dfao_from_kernel(k);
    return SatisfiesCriterion{std::move(ca.values), std::move(k), std::move(dfao), K};
  }

  const std::size_t total = series.b.size();
  const std::size_t count = distinct_below(series.b, total);
  const std::size_t earlier = K >= 3 ? distinct_below(series.b, enumeration_size(base, K - 2)) : count;
  const bool stable = earlier == count;
  if (count > opts.value_bound || !stable) return ValueBoundExceeded{count, K, earlier, stable};

  auto kernel = p_kernel(CoefficientStream{series}, ko);
  if (auto* exceeded = std::get_if<KernelBoundExceeded>(&kernel)) return *exceeded;
  Kernel& k = std::get<Kernel>(kernel);
  if (!k.closed) return KernelBoundExceeded{k.elements.size(), K};

  std::set<RationalPadic> values(series.b.begin(), series.b.end());
  Dfao dfao = dfao_from_kernel(k);
  return SatisfiesCriterion{{values.begin(), values.end()}, std::move(k), std::move(dfao), K};
}

bool is_certificate(const FinitenessVerdict& v) {
  return std::holds_alternative<SatisfiesCriterion>(v) || std::holds_alternative<FailsIntegrality>(v);
}

std::string verdict_name(const FinitenessVerdict& v) {
  static const char* names[] = {"SatisfiesCriterion", "FailsIntegrality", "ValueBoundExceeded",
                                "KernelBoundExceeded"};
  return names[v.index()];
}

std::string agreement_name(Agreement a) {
  switch (a) {
    case Agreement::Agree:
      return "agree";
    case Agreement::InconclusiveConsistent:
      return "inconclusive-consistent";
    case Agreement::Inconsistent:
      return "inconsistent";
  }
  return "";
}

CrossCheckReport cross_check(const FunctionPresentation& f, const FinitenessOptions& opts,
                             const SynthesisOptions& synth) {
  CrossCheckReport report{check_finiteness(f, opts), std::nullopt, Agreement::InconclusiveConsistent};
  if (std::holds_alternative<FailsIntegrality>(report.verdict)) {
    // Not 1-Lipschitz: there is no automaton function to synthesize.
    report.agreement = Agreement::Agree;
    return report;
  }
  report.synthesis = synthesize_minimal(f, synth);
  const bool finite = report.synthesis->status == SynthesisResult::Status::Finite;
  const bool satisfied = std::holds_alternative<SatisfiesCriterion>(report.verdict);
  if (finite) {
    // A machine that does not compute f contradicts the finiteness claim.
    const std::size_t size = enumeration_size(f.base(), opts.depth);
    for (std::size_t x = 0; x < size; ++x) {
      const Integer xi(static_cast<unsigned long>(x));
      if (eval_mod(*report.synthesis->machine, xi, opts.depth) != evaluate_mod(f, xi, opts.depth)) {
        report.agreement = Agreement::Inconsistent;
        return report;
      }
    }
  }
  report.agreement = satisfied && finite ? Agreement::Agree : Agreement::InconclusiveConsistent;
  return report;
}

}  // namespace padic
