#include "padic/christol.hpp"

#include <algorithm>
#include <set>

#include "padic/parallel.hpp"

namespace padic {

namespace {

using Elem = GaloisField::Elem;
using Poly = std::vector<Elem>;

Poly mul_trunc(const GaloisField& k, const Poly& a, const Poly& b, std::size_t n) {
  Poly c(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
      if (b[j] != 0) c[i + j] = k.add(c[i + j], k.mul(a[i], b[j]));
  }
  return c;
}

bool all_zero(const AlgebraicRelation& rel) {
  for (const auto& u : rel.u)
    for (Elem c : u)
      if (c != 0) return false;
  return true;
}

struct CellResult {
  std::optional<AlgebraicRelation> relation;
};

// Kernel vectors of the (d, H) system at precision n, one per free column
// of the reduced row echelon form, in column order.
std::vector<std::vector<Elem>> nullspace(const GaloisField& k, const std::vector<Poly>& powers,
                                         std::size_t d, std::size_t h, std::size_t n) {
  const std::size_t cols = (d + 1) * (h + 1);
  std::vector<std::vector<Elem>> a(n, std::vector<Elem>(cols, 0));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t e = 0; e <= h && e <= row; ++e) a[row][i * (h + 1) + e] = powers[i][row - e];

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    const Elem s = k.inv(a[r][c]);
    for (auto& v : a[r]) v = k.mul(v, s);
    for (std::size_t o = 0; o < n; ++o) {
      if (o == r || a[o][c] == 0) continue;
      const Elem f = a[o][c];
      for (std::size_t j = c; j < cols; ++j) a[o][j] = k.sub(a[o][j], k.mul(f, a[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols, 0);
    v[free] = 1;
    for (std::size_t row = 0; row < pivot_col.size(); ++row) v[pivot_col[row]] = k.neg(a[row][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

SeriesOverFq SeriesOverFq::from_dfao(const GaloisField& field, const Dfao& dfao,
                                     const std::vector<Elem>& tau, std::size_t precision) {
  dfao.validate();
  std::set<Elem> image(tau.begin(), tau.end());
  if (image.size() != tau.size()) throw Error("tau must be injective");
  for (Elem e : tau)
    if (e >= field.order()) throw Error("tau value outside the field");
  SeriesOverFq s{field, {}};
  s.coeffs.reserve(precision);
  for (std::size_t i = 0; i < precision; ++i) {
    const int sym = automatic_eval(dfao, Integer(static_cast<unsigned long>(i)));
    if (static_cast<std::size_t>(sym) >= tau.size()) throw Error("tau does not cover every DFAO symbol");
    s.coeffs.push_back(tau[static_cast<std::size_t>(sym)]);
  }
  return s;
}

SeriesOverFq SeriesOverFq::from_table(const GaloisField& field, std::vector<Elem> coeffs) {
  for (Elem e : coeffs)
    if (e >= field.order()) throw Error("coefficient outside the field");
  return SeriesOverFq{field, std::move(coeffs)};
}

RelationCheck verify_relation(const SeriesOverFq& f, const AlgebraicRelation& rel, std::size_t n) {
  if (rel.u.empty() || all_zero(rel)) throw Error("relation has all coefficients zero");
  if (n > f.precision()) throw DepthOverflow("verification precision exceeds the series precision");
  for (const auto& u : rel.u)
    for (Elem c : u)
      if (c >= f.field.order()) throw Error("relation coefficient outside the field");
  const GaloisField& k = f.field;
  const Poly series(f.coeffs.begin(), f.coeffs.begin() + static_cast<std::ptrdiff_t>(n));
  Poly acc(n, 0);
  for (std::size_t i = rel.u.size(); i-- > 0;) {
    acc = mul_trunc(k, acc, series, n);
    for (std::size_t j = 0; j < rel.u[i].size() && j < n; ++j) acc[j] = k.add(acc[j], rel.u[i][j]);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (acc[j] != 0) return FailsAt{j};
  return Holds{n};
}

std::size_t required_precision(const RelationSearch& opts) {
  return 2 * ((opts.max_degree + 1) * (opts.max_height + 1) + opts.margin);
}

std::variant<AlgebraicRelation, NotFoundWithinBounds> find_relation(const SeriesOverFq& f,
                                                                    const RelationSearch& opts) {
  const std::size_t need = required_precision(opts);
  if (f.precision() < need) throw DepthOverflow("series precision below what the search needs");
  const GaloisField& k = f.field;

  std::vector<Poly> powers{Poly(need, 0)};
  powers[0][0] = 1;
  for (std::size_t i = 1; i <= opts.max_degree; ++i)
    powers.push_back(mul_trunc(k, powers.back(), f.coeffs, need));

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t d = 1; d <= opts.max_degree; ++d)
    for (std::size_t h = 0; h <= opts.max_height; ++h) cells.emplace_back(d, h);

  std::vector<CellResult> results(cells.size());
  parallel_for(cells.size(), opts.threads, [&](std::size_t c) {
    const auto [d, h] = cells[c];
    const std::size_t n = (d + 1) * (h + 1) + opts.margin;
    for (const auto& v : nullspace(k, powers, d, h, n)) {
      AlgebraicRelation rel;
      rel.degree = d;
      rel.height = h;
      for (std::size_t i = 0; i <= d; ++i) {
        Poly u(v.begin() + static_cast<std::ptrdiff_t>(i * (h + 1)),
               v.begin() + static_cast<std::ptrdiff_t>((i + 1) * (h + 1)));
        while (!u.empty() && u.back() == 0) u.pop_back();
        rel.u.push_back(std::move(u));
      }
      if (std::holds_alternative<Holds>(verify_relation(f, rel, 2 * n))) {
        rel.verified_precision = 2 * n;
        results[c].relation = std::move(rel);
        return;
      }
    }
  });
  for (auto& r : results)
    if (r.relation) return std::move(*r.relation);
  return NotFoundWithinBounds{opts.max_degree, opts.max_height, need / 2};
}

TauEmbedding tau_embed(Base base, const std::vector<RationalPadic>& values,
                       std::optional<std::size_t> degree) {
  std::set<RationalPadic> distinct(values.begin(), values.end());
  std::size_t l = 1;
  if (degree) {
    l = *degree;
    if (l == 0) throw Error("field degree must be at least 1");
  } else {
    while (base.pow(l) < static_cast<unsigned long>(distinct.size())) ++l;
  }
  if (base.pow(l) < static_cast<unsigned long>(distinct.size()))
    throw Error("value set larger than the field");
  TauEmbedding t{l, {}};
  Elem code = 0;
  for (const auto& v : distinct) t.tau.emplace(v, code++);
  return t;
}

}  // namespace padic
