#include "coxrep/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxrep {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division of integer polynomials by a monic divisor.
Poly poly_div_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic division degree");
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j)
    if (num[j] != 0) throw std::logic_error("cyclotomic division not exact");
  return quot;
}

Poly cyclotomic_poly(int n) {
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, CycloBasis::get(d).phi);
  return p;
}

}  // namespace

const CycloBasis& CycloBasis::get(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloBasis>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;
  }
  // Divisor bases are built (and cached) before taking the lock again.
  auto basis = std::make_unique<CycloBasis>();
  basis->order = order;
  basis->phi = cyclotomic_poly(order);
  basis->degree = static_cast<int>(basis->phi.size()) - 1;
  const auto deg = static_cast<std::size_t>(basis->degree);
  basis->powers.assign(static_cast<std::size_t>(order), Poly(deg, 0));
  Poly cur(deg, 0);
  cur[0] = 1;
  for (int j = 0; j < order; ++j) {
    basis->powers[static_cast<std::size_t>(j)] = cur;
    // multiply by z: shift, then fold z^deg = -sum phi_i z^i
    const std::int64_t top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (deg == 1) cur[0] = 0;
    for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * basis->phi[i];
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(order, std::move(basis));
  return *it->second;
}

std::vector<std::int64_t> CycloBasis::reduce(const std::vector<std::int64_t>& poly) const {
  Poly folded(static_cast<std::size_t>(order), 0);
  for (std::size_t j = 0; j < poly.size(); ++j) folded[j % static_cast<std::size_t>(order)] += poly[j];
  Poly out(static_cast<std::size_t>(degree), 0);
  for (std::size_t j = 0; j < folded.size(); ++j) {
    if (folded[j] == 0) continue;
    const auto& pw = powers[j];
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += folded[j] * pw[i];
  }
  return out;
}

Cyclo::Cyclo(std::int64_t n) : order_(1), coeffs_{n} {}

Cyclo::Cyclo(int order, std::vector<std::int64_t> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != CycloBasis::get(order).degree)
    throw std::invalid_argument("cyclotomic coefficient vector has wrong length");
}

Cyclo Cyclo::root_of_unity(int order, std::int64_t power) {
  const auto& b = CycloBasis::get(order);
  const auto j = static_cast<std::size_t>(((power % order) + order) % order);
  return Cyclo(order, b.powers[j]);
}

Cyclo Cyclo::from_multiplicities(int order, const std::vector<std::int64_t>& mult) {
  return Cyclo(order, CycloBasis::get(order).reduce(mult));
}

Cyclo Cyclo::lifted(int target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) throw std::invalid_argument("cannot lift cyclotomic value to a non-multiple order");
  const int step = target / order_;
  Poly poly(static_cast<std::size_t>(target), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[j * static_cast<std::size_t>(step)] += coeffs_[j];
  return Cyclo(target, CycloBasis::get(target).reduce(poly));
}

bool Cyclo::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

std::int64_t Cyclo::to_integer() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value " + to_string() + " is not rational");
  return coeffs_[0];
}

bool Cyclo::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

Cyclo Cyclo::conj() const {
  const auto& b = CycloBasis::get(order_);
  Poly out(coeffs_.size(), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& pw = b.powers[(static_cast<std::size_t>(order_) - j) % static_cast<std::size_t>(order_)];
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs_[j] * pw[i];
  }
  return Cyclo(order_, std::move(out));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  const int L = std::lcm(order_, o.order_);
  Cyclo a = lifted(L), b = o.lifted(L);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

Cyclo Cyclo::operator-() const {
  Cyclo a = *this;
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
  const int L = std::lcm(order_, o.order_);
  const Cyclo a = lifted(L), b = o.lifted(L);
  Poly prod(a.coeffs_.size() + b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Cyclo(L, CycloBasis::get(L).reduce(prod));
}

Cyclo Cyclo::operator*(std::int64_t s) const {
  Cyclo a = *this;
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

Cyclo Cyclo::divided_by(std::int64_t s) const {
  if (s == 0) throw std::domain_error("division by zero");
  Cyclo a = *this;
  for (auto& c : a.coeffs_) {
    if (c % s != 0) throw std::domain_error("cyclotomic value not divisible by " + std::to_string(s));
    c /= s;
  }
  return a;
}

bool Cyclo::operator==(const Cyclo& o) const { return compare(*this, o) == 0; }

int Cyclo::compare(const Cyclo& a, const Cyclo& b) {
  const int L = std::lcm(a.order_, b.order_);
  const Cyclo x = a.lifted(L), y = b.lifted(L);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] < y.coeffs_[i]) return -1;
    if (x.coeffs_[i] > y.coeffs_[i]) return 1;
  }
  return 0;
}

std::string Cyclo::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const auto c = coeffs_[j];
    if (c == 0) continue;
    if (j == 0) {
      os << c;
    } else {
      if (c < 0)
        os << "-";
      else if (!first)
        os << "+";
      const auto mag = c < 0 ? -c : c;
      if (mag != 1) os << mag << "*";
      os << "z" << order_;
      if (j != 1) os << "^" << j;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace coxrep
