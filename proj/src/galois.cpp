#include "padic/galois.hpp"

#include <map>
#include <utility>

namespace padic {

namespace {

using Elem = GaloisField::Elem;

std::vector<int> to_digits(Elem a, int p, std::size_t l) {
  std::vector<int> d(l);
  for (std::size_t i = 0; i < l; ++i) {
    d[i] = static_cast<int>(a % static_cast<Elem>(p));
    a /= static_cast<Elem>(p);
  }
  return d;
}

Elem from_digits(const std::vector<int>& d, int p) {
  Elem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * static_cast<Elem>(p) + static_cast<Elem>(d[i]);
  return a;
}

// a * t mod poly, digits in place.
void times_t(std::vector<int>& a, const std::vector<int>& poly, int p) {
  const std::size_t l = a.size();
  const int top = a[l - 1];
  for (std::size_t i = l - 1; i > 0; --i) a[i] = a[i - 1];
  a[0] = 0;
  for (std::size_t i = 0; i < l; ++i) a[i] = ((a[i] - top * poly[i]) % p + p) % p;
}

// Order of t in F_p[t]/(poly) is p^l - 1 exactly when poly is primitive.
bool generates(int p, const std::vector<int>& poly) {
  const std::size_t l = poly.size() - 1;
  Elem q = 1;
  for (std::size_t i = 0; i < l; ++i) q *= static_cast<Elem>(p);
  std::vector<int> x(l, 0);
  x[0] = 1;
  for (Elem k = 1; k < q; ++k) {
    times_t(x, poly, p);
    bool one = x[0] == 1;
    for (std::size_t i = 1; i < l && one; ++i) one = x[i] == 0;
    if (one) return k == q - 1;
  }
  return false;
}

const std::map<std::pair<int, std::size_t>, std::vector<int>>& conway_table() {
  static const std::map<std::pair<int, std::size_t>, std::vector<int>> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
  };
  return table;
}

}  // namespace

std::vector<int> conway_polynomial(int p, std::size_t l) {
  auto it = conway_table().find({p, l});
  return it == conway_table().end() ? std::vector<int>{} : it->second;
}

bool is_primitive(int p, const std::vector<int>& poly) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  if (poly.size() == 2) {
    // t = -c_0 must generate F_p^*.
    return generates(p, poly);
  }
  return poly[0] != 0 && generates(p, poly);
}

GaloisField::GaloisField(Base base, std::size_t degree) : base_(base), degree_(degree), q_(1) {
  base.require_prime("finite field construction");
  if (degree == 0) throw Error("field degree must be at least 1");
  const int p = base.value();
  for (std::size_t i = 0; i < degree; ++i) {
    if (q_ > (1u << 24) / static_cast<Elem>(p)) throw Error("field order too large");
    q_ *= static_cast<Elem>(p);
  }
  modulus_ = conway_polynomial(p, degree);
  if (modulus_.empty()) {
    for (Elem low = 0; low < q_ && modulus_.empty(); ++low) {
      std::vector<int> cand = to_digits(low, p, degree);
      cand.push_back(1);
      if (is_primitive(p, cand)) modulus_ = cand;
    }
    if (modulus_.empty()) throw Error("no primitive polynomial found");
  }
  exp_.resize(2 * static_cast<std::size_t>(q_));
  log_.assign(q_, 0);
  std::vector<int> x(degree, 0);
  x[0] = 1;
  for (Elem k = 0; k + 1 < q_; ++k) {
    const Elem e = from_digits(x, p);
    exp_[k] = e;
    exp_[k + q_ - 1] = e;
    log_[e] = k;
    times_t(x, modulus_, p);
  }
}

Elem GaloisField::add(Elem a, Elem b) const {
  const Elem p = static_cast<Elem>(base_.value());
  Elem r = 0, scale = 1;
  for (std::size_t i = 0; i < degree_; ++i) {
    r += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return r;
}

Elem GaloisField::neg(Elem a) const {
  const Elem p = static_cast<Elem>(base_.value());
  Elem r = 0, scale = 1;
  for (std::size_t i = 0; i < degree_; ++i) {
    r += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return r;
}

Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem GaloisField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw Error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem GaloisField::mul_direct(Elem a, Elem b) const {
  const int p = base_.value();
  const auto da = to_digits(a, p, degree_);
  const auto db = to_digits(b, p, degree_);
  std::vector<int> prod(2 * degree_ - 1, 0);
  for (std::size_t i = 0; i < degree_; ++i)
    for (std::size_t j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (std::size_t k = prod.size(); k-- > degree_;) {
    const int c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= degree_; ++i)
      prod[k - degree_ + i] = ((prod[k - degree_ + i] - c * modulus_[i]) % p + p) % p;
  }
  prod.resize(degree_);
  return from_digits(prod, p);
}

}  // namespace padic
