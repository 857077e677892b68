#include "padic/synthesis.hpp"

#include <sstream>

#include "padic/closure.hpp"
#include "padic/parallel.hpp"
#include "padic/vdp.hpp"

namespace padic {

Integer WordCode::count_shorter(std::size_t n) const {
  return (base_.pow(n) - 1) / (base_.value() - 1);
}

Integer WordCode::nu(const DigitWord& w) const {
  if (!(w.base == base_)) throw Error("word base differs from the code base");
  return count_shorter(w.size()) + w.to_integer();
}

DigitWord WordCode::omega(const Integer& i) const {
  if (sgn(i) < 0) throw Error("word codes are non-negative");
  std::size_t n = 0;
  while (count_shorter(n + 1) <= i) ++n;
  return DigitWord::from_integer(base_, i - count_shorter(n), n);
}

namespace {

using Coeffs = std::vector<Rational>;

std::string join(const Coeffs& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += rational_to_string(c[i]);
  }
  return s;
}

void trim(Coeffs& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

std::string describe_poly(const Coeffs& c) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << rational_to_string(c[i]);
    if (i >= 1) os << "*z";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Rational horner(const Coeffs& c, const Integer& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Coefficients of (g(n + p^k z) - (g(n) mod p^k)) / p^k.
Coeffs poly_residual(Base base, const Coeffs& c, const Integer& n, std::size_t k) {
  const Integer pk = base.pow(k);
  Coeffs d(c.size());
  Integer scale = 1;  // p^(k*i)
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rational sum = 0;
    Integer npow = 1;  // n^(j-i)
    for (std::size_t j = i; j < c.size(); ++j) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), j, i);
      sum += c[j] * Rational(binom * npow);
      npow *= n;
    }
    d[i] = sum * Rational(scale);
    scale *= pk;
  }
  if (!d.empty()) {
    d[0] -= Rational(reduce_mod(RationalPadic(base, d[0]), k));
  }
  for (auto& x : d) {
    x /= Rational(pk);
    x.canonicalize();
  }
  trim(d);
  return d;
}

struct TableNode {
  std::size_t depth = 0;
  Coeffs B;
};

Rational table_value(Base base, const TableNode& t, const Integer& x) {
  Rational acc = t.B[reduce_mod(base, x, 1).get_ui()];
  Integer prev = reduce_mod(base, x, 1);
  for (std::size_t j = 1; j < t.depth; ++j) {
    Integer m = reduce_mod(base, x, j + 1);
    if (m != prev) acc += t.B[m.get_ui()];
    prev = m;
  }
  return acc;
}

// Raw coefficients of f_{n,k} for a table with n < p^k.
TableNode table_residual(Base base, const TableNode& t, VdpTail tail, const Integer& n,
                         std::size_t k) {
  if (tail == VdpTail::Truncated && k >= t.depth)
    throw DepthOverflow("residual at depth " + std::to_string(k) +
                        " needs more than the truncated table depth " + std::to_string(t.depth));
  const std::size_t depth = k < t.depth ? t.depth - k : 1;
  const std::size_t size = enumeration_size(base, depth);
  const std::size_t table_size = t.B.size();
  const Integer pk = base.pow(k);
  const Rational fn = table_value(base, t, n);
  const Rational C = (fn - Rational(reduce_mod(RationalPadic(base, fn), k))) / Rational(pk);
  TableNode r{depth, Coeffs(size)};
  for (std::size_t s = 0; s < size; ++s) {
    Rational term = 0;
    if (s > 0) {
      Integer M = n + pk * static_cast<unsigned long>(s);
      if (M < Integer(static_cast<unsigned long>(table_size))) {
        const RationalPadic BM(base, t.B[M.get_ui()]);
        if (!mpz_divisible_p(BM.value().get_num_mpz_t(), pk.get_mpz_t())) throw NotIntegral(M, BM);
        term = BM.value() / Rational(pk);
      }
    }
    if (s < static_cast<std::size_t>(base.value())) term += C;
    term.canonicalize();
    r.B[s] = term;
  }
  return r;
}

std::string table_key(const TableNode& t, std::size_t prefix) {
  Coeffs c(t.B.begin(), t.B.begin() + static_cast<std::ptrdiff_t>(std::min(prefix, t.B.size())));
  if (prefix == SIZE_MAX) trim(c);
  return join(c);
}

std::string describe_table(const TableNode& t) {
  std::string s = "B=[";
  const std::size_t shown = std::min<std::size_t>(t.B.size(), 16);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) s += ",";
    s += rational_to_string(t.B[i]);
  }
  if (shown < t.B.size()) s += ",...";
  return s + "]";
}

Coeffs poly_coeffs(const FunctionPresentation& f) {
  if (const auto* p = f.get_if<Polynomial>()) {
    Coeffs c;
    for (const auto& x : p->coeffs) c.push_back(x.value());
    return c;
  }
  const auto& a = *f.get_if<Affine>();
  Coeffs c{a.constant.value(), a.slope.value()};
  trim(c);
  return c;
}

FunctionPresentation poly_presentation(const FunctionPresentation& like, const Coeffs& c) {
  const Base base = like.base();
  if (like.get_if<Affine>()) {
    return FunctionPresentation::affine(RationalPadic(base, c.empty() ? Rational(0) : c[0]),
                                        RationalPadic(base, c.size() > 1 ? c[1] : Rational(0)));
  }
  std::vector<RationalPadic> rc;
  for (const auto& x : c) rc.emplace_back(base, x);
  return FunctionPresentation::polynomial(base, std::move(rc));
}

TableNode table_node(const VdpTable& t) {
  TableNode n{t.depth, {}};
  for (const auto& x : t.coeffs_B) n.B.push_back(x.value());
  return n;
}

FunctionPresentation table_presentation(Base base, const TableNode& n, VdpTail tail) {
  std::vector<RationalPadic> B;
  for (const auto& x : n.B) B.emplace_back(base, x);
  return FunctionPresentation::vdp_table(base, n.depth, std::move(B), tail);
}

}  // namespace

Transducer naive_automaton(const FunctionPresentation& f, std::size_t depth, unsigned threads) {
  if (depth == 0) throw Error("naive automaton depth must be at least 1");
  if (auto v = check_lipschitz_depth(f, depth, threads))
    throw NotLipschitz(*v, "function is not 1-Lipschitz at depth " + std::to_string(depth) +
                               ": x=" + v->x.get_str() + ", y=" + v->y.get_str() +
                               ", n=" + std::to_string(v->n));
  const Base base = f.base();
  const WordCode code(base);
  const std::size_t p = static_cast<std::size_t>(base.value());
  const std::size_t states = code.count_shorter(depth).get_ui();
  std::vector<std::size_t> next(states * p);
  std::vector<int> out(states * p);
  std::vector<std::string> labels(states);
  parallel_for(states, threads, [&](std::size_t i) {
    const DigitWord w = code.omega(Integer(static_cast<unsigned long>(i)));
    const std::size_t len = w.size();
    const Integer pl = base.pow(len);
    for (std::size_t r = 0; r < p; ++r) {
      DigitWord extended = w;
      extended.digits.push_back(static_cast<int>(r));
      const Integer value = extended.to_integer();
      Integer digit = evaluate_mod(f, value, len + 1) / pl;
      out[i * p + r] = static_cast<int>(digit.get_si());
      next[i * p + r] = len + 1 < depth ? code.nu(extended).get_ui() : 0;
    }
    std::string label;
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it) label += std::to_string(*it);
    labels[i] = label.empty() ? "e" : label;
  });
  return Transducer(base, states, 0, std::move(next), std::move(out), std::move(labels));
}

Residual residual(const FunctionPresentation& f, const Integer& n, std::size_t k) {
  const Base base = f.base();
  if (sgn(n) < 0) throw Error("residual offset must be non-negative");
  if (k < floor_log(n, base) + 1)
    throw Error("residual f_{n,k} needs k >= floor(log_p n) + 1 (n=" + n.get_str() +
                ", k=" + std::to_string(k) + ")");
  if (const auto* a = f.get_if<AutomatonBacked>()) {
    const Transducer minimal = minimize(a->machine);
    const std::size_t q = run(minimal, minimal.initial(), DigitWord::from_integer(base, n, k));
    return Residual{FunctionPresentation::automaton(subautomaton(minimal, q)),
                    "state:" + std::to_string(q), "state " + std::to_string(q)};
  }
  if (const auto* t = f.get_if<VdpTable>()) {
    TableNode r = table_residual(base, table_node(*t), t->tail, n, k);
    return Residual{table_presentation(base, r, t->tail),
                    table_key(r, t->tail == VdpTail::Zero ? SIZE_MAX : r.B.size()),
                    describe_table(r)};
  }
  Coeffs c = poly_residual(base, poly_coeffs(f), n, k);
  return Residual{poly_presentation(f, c), join(c), describe_poly(c)};
}

SynthesisResult synthesize_minimal(const FunctionPresentation& f, const SynthesisOptions& opts) {
  using detail::ClosureStatus;
  const Base base = f.base();
  SynthesisResult result{SynthesisResult::Status::BoundExceeded, std::nullopt, 0, "", {},
                         std::nullopt, std::nullopt, std::nullopt};

  auto finish = [&](const auto& closure, auto describe) {
    result.states_found = closure.nodes.size();
    for (std::size_t i = 0; i < closure.nodes.size() && i < 8; ++i)
      result.residual_sample.push_back(describe(closure.nodes[i]));
    if (closure.status == ClosureStatus::Closed) {
      result.status = SynthesisResult::Status::Finite;
      result.machine = Transducer(base, closure.nodes.size(), 0, closure.next, closure.out);
    } else {
      result.stop_reason = closure.status == ClosureStatus::TooDeep ? "depth" : "max_states";
    }
  };

  if (const auto* a = f.get_if<AutomatonBacked>()) {
    const Transducer minimal = minimize(a->machine);
    auto expand = [&](std::size_t s, int r) {
      const std::size_t t = minimal.next(s, r);
      return detail::Child<std::size_t>{t, "state:" + std::to_string(t), minimal.output(s, r)};
    };
    auto closure = detail::explore_closure<std::size_t>(
        base, minimal.initial(), "state:" + std::to_string(minimal.initial()), expand,
        opts.max_states, SIZE_MAX, opts.threads);
    finish(closure, [](std::size_t s) { return "state " + std::to_string(s); });
    return result;
  }

  if (const auto* t = f.get_if<VdpTable>()) {
    const VdpTail tail = t->tail;
    std::size_t prefix = SIZE_MAX;
    std::size_t max_level = SIZE_MAX;
    if (tail == VdpTail::Truncated) {
      const std::size_t window =
          std::min(t->depth, opts.window ? opts.window : std::max<std::size_t>(t->depth / 2, 1));
      prefix = enumeration_size(base, window);
      max_level = t->depth - window;
      result.certified_depth = t->depth;
      result.window = window;
    }
    // Residuals too shallow to fill the window cannot be compared; they get
    // a unique key so that reaching one stops the exploration as TooDeep.
    auto expand = [&](const TableNode& g, int r) {
      detail::Child<TableNode> child;
      child.output = static_cast<int>(
          reduce_mod(RationalPadic(base, g.B[static_cast<std::size_t>(r)]), 1).get_si());
      if (tail == VdpTail::Truncated && (g.depth <= 1 || g.B.size() / base.value() < prefix)) {
        child.key = "shallow:" + join(g.B) + ":" + std::to_string(r);
        return child;
      }
      child.node = table_residual(base, g, tail, Integer(r), 1);
      child.key = table_key(child.node, prefix);
      return child;
    };
    TableNode root = table_node(*t);
    std::string root_key = table_key(root, prefix);
    auto closure = detail::explore_closure<TableNode>(base, std::move(root), root_key, expand,
                                                      opts.max_states, max_level, opts.threads);
    finish(closure, describe_table);
    if (result.status == SynthesisResult::Status::Finite && tail == VdpTail::Truncated) {
      // Windowed comparison can merge residuals that differ deeper down;
      // accept only a machine reproducing f on the whole table.
      const std::size_t size = enumeration_size(base, t->depth);
      bool agrees = true;
      for (std::size_t x = 0; x < size && agrees; ++x) {
        const Integer xi(static_cast<unsigned long>(x));
        agrees = eval_mod(*result.machine, xi, t->depth) == evaluate_mod(f, xi, t->depth);
      }
      if (!agrees) {
        result.status = SynthesisResult::Status::BoundExceeded;
        result.machine.reset();
        result.stop_reason = "depth";
      }
    }
    return result;
  }

  const Coeffs root = poly_coeffs(f);
  auto expand = [&](const Coeffs& g, int r) {
    const Integer ri(r);
    detail::Child<Coeffs> child;
    child.output = static_cast<int>(reduce_mod(RationalPadic(base, horner(g, ri)), 1).get_si());
    child.node = poly_residual(base, g, ri, 1);
    child.key = join(child.node);
    return child;
  };
  auto closure = detail::explore_closure<Coeffs>(base, root, join(root), expand, opts.max_states,
                                                 SIZE_MAX, opts.threads);
  finish(closure, describe_poly);
  if (result.status == SynthesisResult::Status::BoundExceeded && root.size() >= 3)
    result.certificate = GrowthCertificate{root.size() - 1, true};
  return result;
}

}  // namespace padic
