#include "coxrep/ring.hpp"

#include <sstream>

#include "coxrep/numtheory.hpp"

namespace coxrep {

std::string to_string(RingMode mode) { return mode == RingMode::Equal ? "equal" : "mixed"; }

RingMode parse_ring_mode(const std::string& text) {
  if (text == "equal") return RingMode::Equal;
  if (text == "mixed") return RingMode::Mixed;
  throw std::invalid_argument("unknown ring mode '" + text + "' (expected equal|mixed)");
}

namespace {

// Multiply polynomials of degree < k over Z/m modulo the monic lift of f.
std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const std::vector<int>& f, std::uint32_t m) {
  const std::size_t k = f.size();
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % m;
  // x^k = -(f_0 + f_1 x + ... + f_{k-1} x^{k-1})
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t sub = (c * static_cast<std::uint64_t>(f[i])) % m;
      prod[d - k + i] = (prod[d - k + i] + m - sub) % m;
    }
  }
  return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::vector<std::uint32_t> digits_of(std::uint32_t code, std::uint32_t base, int count) {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(count));
  for (auto& d : out) {
    d = code % base;
    code /= base;
  }
  return out;
}

std::uint32_t pack_digits(const std::vector<std::uint32_t>& digits, std::uint32_t base) {
  std::uint32_t out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) out = out * base + digits[i];
  return out;
}

bool has_monic_factor(const std::vector<int>& f, int p, int degree) {
  // f is monic of degree k with lower coefficients f; test division by every
  // monic g of the given degree.
  const int k = static_cast<int>(f.size());
  const auto count = ipow(p, degree);
  for (std::int64_t code = 0; code < count; ++code) {
    std::vector<int> g(static_cast<std::size_t>(degree) + 1, 1);
    std::int64_t c = code;
    for (int i = 0; i < degree; ++i) {
      g[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
      c /= p;
    }
    std::vector<int> rem(f.begin(), f.end());
    rem.push_back(1);
    for (int d = k; d >= degree; --d) {
      const int lead = rem[static_cast<std::size_t>(d)];
      if (lead == 0) continue;
      for (int i = 0; i <= degree; ++i) {
        auto& slot = rem[static_cast<std::size_t>(d - degree + i)];
        slot = ((slot - lead * g[static_cast<std::size_t>(i)]) % p + p) % p;
      }
    }
    bool zero = true;
    for (int i = 0; i < degree; ++i) zero = zero && rem[static_cast<std::size_t>(i)] == 0;
    if (zero) return true;
  }
  return false;
}

}  // namespace

std::vector<int> least_irreducible(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (k < 1) throw std::invalid_argument("k must be positive");
  const auto count = ipow(p, k);
  for (std::int64_t code = 0; code < count; ++code) {
    std::vector<int> f(static_cast<std::size_t>(k));
    std::int64_t c = code;
    for (auto& fi : f) {
      fi = static_cast<int>(c % p);
      c /= p;
    }
    bool irreducible = true;
    for (int d = 1; 2 * d <= k && irreducible; ++d) irreducible = !has_monic_factor(f, p, d);
    if (irreducible) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Ring::Ring(int p, int k, int r, RingMode mode) : p_(p), k_(k), r_(r), mode_(mode) {}

std::shared_ptr<const Ring> Ring::make(int p, int k, int r, RingMode mode) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (k < 1 || r < 1) throw std::invalid_argument("k and r must be positive");
  const auto q = ipow(p, k);
  const auto size = ipow(q, r);
  if (size > kMaxSize) throw std::invalid_argument("ring of size " + std::to_string(size) + " exceeds bound");
  auto ring = std::shared_ptr<Ring>(new Ring(p, k, r, mode));
  ring->q_ = static_cast<std::uint32_t>(q);
  ring->size_ = static_cast<std::uint32_t>(size);
  if (mode == RingMode::Mixed) {
    ring->digits_ = k;
    ring->digit_base_ = static_cast<std::uint32_t>(ipow(p, r));
  } else {
    ring->digits_ = r;
    ring->digit_base_ = ring->q_;
  }
  ring->fpoly_ = least_irreducible(p, k);
  if (r > 1) ring->residue_ = Ring::make(p, k, 1, mode);
  ring->build_tables();
  return ring;
}

std::shared_ptr<const Ring> make_ring(int p, int k, int r, RingMode mode) { return Ring::make(p, k, r, mode); }

std::shared_ptr<const Ring> Ring::residue_field_ptr() const {
  if (residue_) return residue_;
  return Ring::make(p_, k_, 1, mode_);
}

Code Ring::add_slow(Code a, Code b) const {
  auto da = digits_of(a, digit_base_, digits_);
  auto db = digits_of(b, digit_base_, digits_);
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (mode_ == RingMode::Mixed) {
      da[i] = (da[i] + db[i]) % digit_base_;
    } else {
      auto x = digits_of(da[i], static_cast<std::uint32_t>(p_), k_);
      auto y = digits_of(db[i], static_cast<std::uint32_t>(p_), k_);
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = (x[j] + y[j]) % static_cast<std::uint32_t>(p_);
      da[i] = pack_digits(x, static_cast<std::uint32_t>(p_));
    }
  }
  return pack_digits(da, digit_base_);
}

Code Ring::mul_slow(Code a, Code b) const {
  if (mode_ == RingMode::Mixed) {
    auto prod = poly_mulmod(digits_of(a, digit_base_, digits_), digits_of(b, digit_base_, digits_), fpoly_,
                            digit_base_);
    return pack_digits(prod, digit_base_);
  }
  const auto pp = static_cast<std::uint32_t>(p_);
  auto fq_mul = [&](std::uint32_t x, std::uint32_t y) {
    return pack_digits(poly_mulmod(digits_of(x, pp, k_), digits_of(y, pp, k_), fpoly_, pp), pp);
  };
  auto fq_add = [&](std::uint32_t x, std::uint32_t y) {
    auto dx = digits_of(x, pp, k_);
    auto dy = digits_of(y, pp, k_);
    for (std::size_t j = 0; j < dx.size(); ++j) dx[j] = (dx[j] + dy[j]) % pp;
    return pack_digits(dx, pp);
  };
  auto da = digits_of(a, digit_base_, digits_);
  auto db = digits_of(b, digit_base_, digits_);
  std::vector<std::uint32_t> out(static_cast<std::size_t>(r_), 0);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; i + j < r_; ++j)
      out[static_cast<std::size_t>(i + j)] =
          fq_add(out[static_cast<std::size_t>(i + j)], fq_mul(da[static_cast<std::size_t>(i)], db[static_cast<std::size_t>(j)]));
  return pack_digits(out, digit_base_);
}

void Ring::build_tables() {
  const std::uint32_t n = size_;
  add_.assign(std::size_t{n} * n, 0);
  mul_.assign(std::size_t{n} * n, 0);
  neg_.assign(n, 0);
  inv_.assign(n, kNoInverse);
  one_ = 1;  // constant coefficient 1 is code 1 in both encodings
  for (Code a = 0; a < n; ++a)
    for (Code b = a; b < n; ++b) {
      const auto s = static_cast<std::uint16_t>(add_slow(a, b));
      const auto m = static_cast<std::uint16_t>(mul_slow(a, b));
      add_[a * n + b] = add_[b * n + a] = s;
      mul_[a * n + b] = mul_[b * n + a] = m;
    }
  for (Code a = 0; a < n; ++a)
    for (Code b = 0; b < n; ++b) {
      if (add_[a * n + b] == 0) neg_[a] = static_cast<std::uint16_t>(b);
      if (mul_[a * n + b] == one_) inv_[a] = static_cast<std::uint16_t>(b);
    }
}

Code Ring::inv(Code a) const {
  if (!is_unit(a)) throw NotInvertible("element " + std::to_string(a) + " is not invertible in " + describe());
  return inv_[a];
}

Code Ring::pow(Code a, std::uint64_t e) const {
  Code out = one_;
  while (e) {
    if (e & 1) out = mul(out, a);
    a = mul(a, a);
    e >>= 1;
  }
  return out;
}

Code Ring::from_int(std::int64_t n) const {
  const std::int64_t m = mode_ == RingMode::Mixed ? digit_base_ : p_;
  return static_cast<Code>(((n % m) + m) % m);
}

std::vector<std::uint32_t> Ring::coeffs(Code a) const { return digits_of(a, digit_base_, digits_); }

Code Ring::from_coeffs(std::span<const std::uint32_t> c) const {
  if (static_cast<int>(c.size()) != digits_) throw std::invalid_argument("coefficient vector has wrong length");
  for (auto x : c)
    if (x >= digit_base_) throw std::invalid_argument("coefficient out of range");
  return pack_digits({c.begin(), c.end()}, digit_base_);
}

int Ring::valuation(Code a) const {
  auto d = coeffs(a);
  if (mode_ == RingMode::Equal) {
    for (int j = 0; j < r_; ++j)
      if (d[static_cast<std::size_t>(j)] != 0) return j;
    return r_;
  }
  int v = r_;
  for (auto c : d) {
    if (c == 0) continue;
    int vc = 0;
    while (c % static_cast<std::uint32_t>(p_) == 0) {
      c /= static_cast<std::uint32_t>(p_);
      ++vc;
    }
    v = std::min(v, vc);
  }
  return v;
}

Code Ring::pi_power(int j) const {
  if (j >= r_) return 0;
  if (mode_ == RingMode::Mixed) return static_cast<Code>(ipow(p_, j));
  std::vector<std::uint32_t> d(static_cast<std::size_t>(r_), 0);
  d[static_cast<std::size_t>(j)] = 1;
  return pack_digits(d, digit_base_);
}

Code Ring::reduce(Code a, const Ring& target) const {
  if (!same_family(target) || target.r_ > r_) throw std::invalid_argument("invalid reduction target");
  auto d = coeffs(a);
  if (mode_ == RingMode::Mixed) {
    for (auto& c : d) c %= target.digit_base_;
    return pack_digits(d, target.digit_base_);
  }
  d.resize(static_cast<std::size_t>(target.r_));
  return pack_digits(d, target.digit_base_);
}

Code Ring::residue(Code a) const {
  auto d = coeffs(a);
  if (mode_ == RingMode::Equal) return d[0];
  for (auto& c : d) c %= static_cast<std::uint32_t>(p_);
  return pack_digits(d, static_cast<std::uint32_t>(p_));
}

Code Ring::lift(Code fq) const {
  if (fq >= q_) throw std::invalid_argument("residue code out of range");
  if (mode_ == RingMode::Equal) return fq;
  return pack_digits(digits_of(fq, static_cast<std::uint32_t>(p_), k_), digit_base_);
}

Code Ring::divide_by_pi_power(Code y, int j, const Ring& target) const {
  if (!same_family(target) || target.r_ != r_ - j) throw std::invalid_argument("invalid division target");
  if (valuation(y) < j) throw std::domain_error("element not divisible by pi^" + std::to_string(j));
  auto d = coeffs(y);
  if (mode_ == RingMode::Mixed) {
    const auto pj = static_cast<std::uint32_t>(ipow(p_, j));
    for (auto& c : d) c /= pj;
    return pack_digits(d, target.digit_base_);
  }
  std::vector<std::uint32_t> out(d.begin() + j, d.end());
  return pack_digits(out, target.digit_base_);
}

std::vector<Code> Ring::units() const {
  std::vector<Code> out;
  out.reserve(unit_count());
  for (Code a = 0; a < size_; ++a)
    if (is_unit(a)) out.push_back(a);
  return out;
}

std::vector<Code> Ring::additive_generators() const {
  std::vector<Code> out;
  if (mode_ == RingMode::Mixed) {
    for (int i = 0; i < k_; ++i) {
      std::vector<std::uint32_t> d(static_cast<std::size_t>(k_), 0);
      d[static_cast<std::size_t>(i)] = 1;
      out.push_back(pack_digits(d, digit_base_));
    }
  } else {
    for (int j = 0; j < r_; ++j)
      for (int i = 0; i < k_; ++i) {
        std::vector<std::uint32_t> d(static_cast<std::size_t>(r_), 0);
        d[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(ipow(p_, i));
        out.push_back(pack_digits(d, digit_base_));
      }
  }
  return out;
}

int Ring::field_trace_to_prime(Code fq) const {
  const Ring& f = residue_field();
  Code acc = 0, y = fq;
  for (int i = 0; i < k_; ++i) {
    acc = f.add(acc, y);
    y = f.pow(y, static_cast<std::uint64_t>(p_));
  }
  if (acc >= static_cast<Code>(p_)) throw std::logic_error("trace did not land in the prime field");
  return static_cast<int>(acc);
}

RingElem Ring::elem(Code c) const {
  if (c >= size_) throw std::out_of_range("ring code out of range");
  return {this, c};
}

std::string Ring::describe() const {
  std::ostringstream os;
  if (mode_ == RingMode::Mixed)
    os << "GR(" << p_ << "^" << r_ << "," << k_ << ")";
  else
    os << "F_" << q_ << "[t]/t^" << r_;
  return os.str();
}

RingElem invert(const RingElem& a) { return a.inverse(); }

// ---------------------------------------------------------------------------

std::shared_ptr<const ExtRing> ExtRing::make(std::shared_ptr<const Ring> base) {
  auto ext = std::shared_ptr<ExtRing>(new ExtRing());
  const Ring& f = base->residue_field();
  const auto q = f.q();
  bool found = false;
  for (Code code = 0; code < q * q && !found; ++code) {
    const Code u0 = code % q, u1 = code / q;
    bool has_root = false;
    for (Code x = 0; x < q && !has_root; ++x)
      has_root = f.add(f.add(f.mul(x, x), f.mul(u1, x)), u0) == 0;
    if (!has_root) {
      ext->c0_ = base->lift(u0);
      ext->c1_ = base->lift(u1);
      found = true;
    }
  }
  if (!found) throw std::logic_error("no irreducible quadratic over the residue field");
  if (base->level() > 1) ext->residue_ = ExtRing::make(base->residue_field_ptr());
  ext->base_ = std::move(base);
  return ext;
}

ExtElem ExtRing::add(const ExtElem& x, const ExtElem& y) const {
  return {base_->add(x.a, y.a), base_->add(x.b, y.b)};
}

ExtElem ExtRing::sub(const ExtElem& x, const ExtElem& y) const {
  return {base_->sub(x.a, y.a), base_->sub(x.b, y.b)};
}

ExtElem ExtRing::neg(const ExtElem& x) const { return {base_->neg(x.a), base_->neg(x.b)}; }

ExtElem ExtRing::mul(const ExtElem& x, const ExtElem& y) const {
  const Ring& R = *base_;
  // xi^2 = -c1 xi - c0
  const Code bd = R.mul(x.b, y.b);
  const Code re = R.sub(R.mul(x.a, y.a), R.mul(c0_, bd));
  const Code im = R.sub(R.add(R.mul(x.a, y.b), R.mul(x.b, y.a)), R.mul(c1_, bd));
  return {re, im};
}

ExtElem ExtRing::scale(Code s, const ExtElem& x) const { return {base_->mul(s, x.a), base_->mul(s, x.b)}; }

ExtElem ExtRing::pow(ExtElem x, std::uint64_t e) const {
  ExtElem out = one();
  while (e) {
    if (e & 1) out = mul(out, x);
    x = mul(x, x);
    e >>= 1;
  }
  return out;
}

ExtElem ExtRing::inv(const ExtElem& x) const {
  const Code n = norm(x);
  if (!base_->is_unit(n)) throw NotInvertible("extension element is not a unit");
  return scale(base_->inv(n), frobenius(x));
}

ExtElem ExtRing::frobenius(const ExtElem& x) const {
  return {base_->sub(x.a, base_->mul(c1_, x.b)), base_->neg(x.b)};
}

Code ExtRing::norm(const ExtElem& x) const {
  const Ring& R = *base_;
  const Code aa = R.mul(x.a, x.a);
  const Code ab = R.mul(x.a, x.b);
  const Code bb = R.mul(x.b, x.b);
  return R.add(R.sub(aa, R.mul(c1_, ab)), R.mul(c0_, bb));
}

Code ExtRing::trace(const ExtElem& x) const {
  const Ring& R = *base_;
  return R.sub(R.add(x.a, x.a), R.mul(c1_, x.b));
}

int ExtRing::valuation(const ExtElem& x) const {
  return std::min(base_->valuation(x.a), base_->valuation(x.b));
}

ExtElem ExtRing::reduce(const ExtElem& x, const ExtRing& target) const {
  return {base_->reduce(x.a, *target.base_), base_->reduce(x.b, *target.base_)};
}

std::uint32_t ExtRing::residue(const ExtElem& x) const {
  return base_->residue(x.a) + base_->q() * base_->residue(x.b);
}

ExtElem ExtRing::lift(std::uint32_t residue_index) const {
  const auto q = base_->q();
  return {base_->lift(residue_index % q), base_->lift(residue_index / q)};
}

ExtElem ExtRing::divide_by_pi_power(const ExtElem& x, int j, const ExtRing& target) const {
  return {base_->divide_by_pi_power(x.a, j, *target.base_), base_->divide_by_pi_power(x.b, j, *target.base_)};
}

std::vector<ExtElem> ExtRing::units() const {
  std::vector<ExtElem> out;
  for (std::uint32_t i = 0; i < size(); ++i) {
    const ExtElem x = from_index(i);
    if (is_unit(x)) out.push_back(x);
  }
  return out;
}

}  // namespace coxrep
