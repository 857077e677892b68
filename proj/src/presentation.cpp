#include "padic/presentation.hpp"

#include "padic/parallel.hpp"

namespace padic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_base(Base base, const RationalPadic& c) {
  if (!(c.base() == base)) throw Error("coefficient base differs from presentation base");
}

}  // namespace

FunctionPresentation FunctionPresentation::polynomial(Base base, std::vector<RationalPadic> coeffs) {
  for (const auto& c : coeffs) require_base(base, c);
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return FunctionPresentation(base, Polynomial{std::move(coeffs)});
}

FunctionPresentation FunctionPresentation::affine(RationalPadic constant, RationalPadic slope) {
  require_base(constant.base(), slope);
  Base base = constant.base();
  return FunctionPresentation(base, Affine{std::move(constant), std::move(slope)});
}

FunctionPresentation FunctionPresentation::automaton(Transducer machine) {
  Base base = machine.base();
  return FunctionPresentation(base, AutomatonBacked{std::move(machine)});
}

FunctionPresentation FunctionPresentation::vdp_table(Base base, std::size_t depth,
                                                     std::vector<RationalPadic> coeffs_B,
                                                     VdpTail tail) {
  if (depth == 0) throw Error("vdp table needs depth >= 1");
  if (Integer(static_cast<unsigned long>(coeffs_B.size())) != base.pow(depth))
    throw Error("vdp table of depth " + std::to_string(depth) + " needs p^depth coefficients");
  for (const auto& c : coeffs_B) require_base(base, c);
  return FunctionPresentation(base, VdpTable{depth, std::move(coeffs_B), tail});
}

std::string FunctionPresentation::kind() const {
  return std::visit(overloaded{[](const Polynomial&) { return std::string("poly"); },
                               [](const Affine&) { return std::string("affine"); },
                               [](const AutomatonBacked&) { return std::string("automaton"); },
                               [](const VdpTable&) { return std::string("vdp"); }},
                    repr_);
}

std::size_t enumeration_size(Base base, std::size_t n) {
  Integer size = base.pow(n);
  if (size > Integer(1UL << 28))
    throw Error(std::to_string(base.value()) + "^" + std::to_string(n) +
                " is too large to enumerate");
  return static_cast<std::size_t>(size.get_ui());
}

RationalPadic evaluate(const FunctionPresentation& f, const Integer& x) {
  if (sgn(x) < 0) throw Error("presentations are evaluated on non-negative integers");
  const Base base = f.base();
  return std::visit(
      overloaded{
          [&](const Polynomial& poly) {
            Rational acc = 0;
            for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it)
              acc = acc * x + it->value();
            return RationalPadic(base, acc);
          },
          [&](const Affine& a) {
            return RationalPadic(base, Rational(a.constant.value() + a.slope.value() * x));
          },
          [&](const AutomatonBacked& a) { return eval_exact(a.machine, a.machine.initial(), x); },
          [&](const VdpTable& t) {
            if (t.tail == VdpTail::Truncated && x >= base.pow(t.depth))
              throw DepthOverflow("input " + x.get_str() + " beyond truncated vdp table depth " +
                                  std::to_string(t.depth));
            // Only the balls around x mod p^(j+1) contain x, one per level.
            const std::size_t levels = std::min(t.depth, DigitWord::minimal(base, x).size());
            Integer m = reduce_mod(base, x, 1);
            Rational acc = t.coeffs_B[m.get_ui()].value();
            for (std::size_t j = 1; j < levels; ++j) {
              Integer next = reduce_mod(base, x, j + 1);
              if (next != m) acc += t.coeffs_B[next.get_ui()].value();
              m = next;
            }
            return RationalPadic(base, acc);
          }},
      f.variant());
}

Integer evaluate_mod(const FunctionPresentation& f, const Integer& x, std::size_t n) {
  const Base base = f.base();
  if (sgn(x) < 0 || x >= base.pow(n))
    throw Error("input " + x.get_str() + " outside [0, p^" + std::to_string(n) + ")");
  if (const auto* a = f.get_if<AutomatonBacked>()) return eval_mod(a->machine, x, n);
  if (const auto* t = f.get_if<VdpTable>(); t && t->tail == VdpTail::Truncated && n > t->depth)
    throw DepthOverflow("depth " + std::to_string(n) + " beyond truncated vdp table depth " +
                        std::to_string(t->depth));
  return reduce_mod(evaluate(f, x), n);
}

std::optional<LipschitzViolation> check_lipschitz_depth(const FunctionPresentation& f,
                                                        std::size_t depth, unsigned threads) {
  if (depth == 0) throw Error("Lipschitz check depth must be at least 1");
  const Base base = f.base();
  const std::size_t size = enumeration_size(base, depth);
  std::vector<Integer> values(size);
  parallel_for(size, threads, [&](std::size_t x) {
    values[x] = evaluate_mod(f, Integer(static_cast<unsigned long>(x)), depth);
  });
  std::size_t modulus = 1;
  for (std::size_t n = 1; n < depth; ++n) {
    modulus *= static_cast<std::size_t>(base.value());
    const Integer pn = base.pow(n);
    for (std::size_t x = modulus; x < size; ++x) {
      const std::size_t y = x % modulus;
      Integer diff = values[x] - values[y];
      if (!mpz_divisible_p(diff.get_mpz_t(), pn.get_mpz_t()))
        return LipschitzViolation{Integer(static_cast<unsigned long>(y)),
                                  Integer(static_cast<unsigned long>(x)), n};
    }
  }
  return std::nullopt;
}

}  // namespace padic
