#include "coxrep/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coxrep/numtheory.hpp"

namespace coxrep {

AbelianGroup::AbelianGroup(std::uint32_t order, std::uint32_t identity, Op op)
    : order_(order), identity_(identity), op_(std::move(op)) {
  if (order == 0 || identity >= order) throw std::invalid_argument("invalid abelian group");
  decompose();
}

std::uint32_t AbelianGroup::pow(std::uint32_t x, std::int64_t e) const {
  std::uint32_t out = identity_;
  std::uint32_t base = x;
  auto n = static_cast<std::uint64_t>(e);
  while (n) {
    if (n & 1) out = op_(out, base);
    base = op_(base, base);
    n >>= 1;
  }
  return out;
}

std::uint32_t AbelianGroup::element_order(std::uint32_t x) const {
  std::uint32_t n = 1;
  for (std::uint32_t y = x; y != identity_; y = op_(y, x)) ++n;
  return n;
}

void AbelianGroup::decompose() {
  std::vector<std::uint32_t> orders(order_);
  for (std::uint32_t x = 0; x < order_; ++x) orders[x] = element_order(x);

  struct Cyclic {
    std::int64_t order;
    std::uint32_t gen;
  };
  std::vector<std::vector<Cyclic>> primary;

  for (const auto ell : prime_factors(order_)) {
    std::vector<std::uint32_t> sylow;
    for (std::uint32_t x = 0; x < order_; ++x)
      if (p_part(orders[x], ell) == orders[x]) sylow.push_back(x);

    // H = <basis so far>, a direct summand of the Sylow subgroup.
    std::vector<std::int32_t> hpos(order_, -1);
    std::vector<std::uint32_t> helems{identity_};
    std::vector<std::vector<std::int64_t>> hcoords{{}};
    hpos[identity_] = 0;
    std::vector<Cyclic> basis;

    while (helems.size() < sylow.size()) {
      std::uint32_t best = identity_;
      int best_m = -1;
      for (auto x : sylow) {
        int m = 0;
        for (std::uint32_t y = x; hpos[y] < 0; y = pow(y, ell)) ++m;
        if (m > best_m) {
          best_m = m;
          best = x;
        }
      }
      const std::int64_t lm = ipow(ell, best_m);
      const auto y = pow(best, lm);
      const auto& c = hcoords[static_cast<std::size_t>(hpos[y])];
      std::uint32_t x = best;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (c[i] % lm != 0) throw std::logic_error("abelian decomposition: lift failed");
        const std::int64_t d = (basis[i].order - (c[i] / lm) % basis[i].order) % basis[i].order;
        x = op_(x, pow(basis[i].gen, d));
      }
      if (pow(x, lm) != identity_) throw std::logic_error("abelian decomposition: order mismatch");
      basis.push_back({lm, x});

      const std::size_t old = helems.size();
      std::vector<std::uint32_t> next;
      std::vector<std::vector<std::int64_t>> next_coords;
      next.reserve(old * static_cast<std::size_t>(lm));
      for (std::int64_t j = 0; j < lm; ++j) {
        const auto xj = pow(x, j);
        for (std::size_t h = 0; h < old; ++h) {
          next.push_back(op_(helems[h], xj));
          auto cc = hcoords[h];
          cc.push_back(j);
          next_coords.push_back(std::move(cc));
        }
      }
      std::fill(hpos.begin(), hpos.end(), -1);
      for (std::size_t i = 0; i < next.size(); ++i) {
        if (hpos[next[i]] >= 0) throw std::logic_error("abelian decomposition: dependent generator");
        hpos[next[i]] = static_cast<std::int32_t>(i);
      }
      helems = std::move(next);
      hcoords = std::move(next_coords);
    }
    std::stable_sort(basis.begin(), basis.end(), [](const Cyclic& a, const Cyclic& b) { return a.order > b.order; });
    primary.push_back(std::move(basis));
  }

  std::size_t rank = 0;
  for (const auto& b : primary) rank = std::max(rank, b.size());
  std::vector<Cyclic> inv(rank, Cyclic{1, identity_});
  for (const auto& b : primary)
    for (std::size_t i = 0; i < b.size(); ++i) {
      inv[i].order *= b[i].order;
      inv[i].gen = op_(inv[i].gen, b[i].gen);
    }
  std::reverse(inv.begin(), inv.end());  // n_1 | n_2 | ...
  for (const auto& c : inv) {
    factors_.push_back(c.order);
    gens_.push_back(c.gen);
  }
  exponent_ = factors_.empty() ? 1 : factors_.back();

  coords_.assign(order_, {});
  std::vector<std::uint32_t> elems{identity_};
  std::vector<std::vector<std::int64_t>> cs{{}};
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    std::vector<std::uint32_t> next;
    std::vector<std::vector<std::int64_t>> next_cs;
    for (std::int64_t j = 0; j < factors_[i]; ++j) {
      const auto gj = pow(gens_[i], j);
      for (std::size_t h = 0; h < elems.size(); ++h) {
        next.push_back(op_(elems[h], gj));
        auto c = cs[h];
        c.push_back(j);
        next_cs.push_back(std::move(c));
      }
    }
    elems = std::move(next);
    cs = std::move(next_cs);
  }
  if (elems.size() != order_) throw std::logic_error("abelian decomposition: basis does not span");
  std::vector<bool> seen(order_, false);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[elems[i]]) throw std::logic_error("abelian decomposition: basis not independent");
    seen[elems[i]] = true;
    coords_[elems[i]] = std::move(cs[i]);
  }
}

AbelianChar AbelianGroup::character(std::uint64_t index) const {
  if (index >= order_) throw std::out_of_range("character index out of range");
  AbelianChar chi{std::vector<std::int64_t>(factors_.size())};
  // Last coordinate varies fastest so index order is lexicographic on exps.
  for (std::size_t i = factors_.size(); i-- > 0;) {
    chi.exps[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(factors_[i]));
    index /= static_cast<std::uint64_t>(factors_[i]);
  }
  return chi;
}

std::uint64_t AbelianGroup::character_index(const AbelianChar& chi) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    idx = idx * static_cast<std::uint64_t>(factors_[i]) + static_cast<std::uint64_t>(chi.exps[i]);
  return idx;
}

AbelianChar AbelianGroup::multiply(const AbelianChar& a, const AbelianChar& b) const {
  AbelianChar out{a.exps};
  for (std::size_t i = 0; i < factors_.size(); ++i) out.exps[i] = (a.exps[i] + b.exps[i]) % factors_[i];
  return out;
}

AbelianChar AbelianGroup::inverse(const AbelianChar& a) const {
  AbelianChar out{a.exps};
  for (std::size_t i = 0; i < factors_.size(); ++i) out.exps[i] = (factors_[i] - a.exps[i]) % factors_[i];
  return out;
}

std::int64_t AbelianGroup::evaluate(const AbelianChar& chi, std::uint32_t x) const {
  const auto& c = coords_[x];
  std::int64_t v = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) v += chi.exps[i] * c[i] % factors_[i] * (exponent_ / factors_[i]);
  return v % exponent_;
}

AbelianChar AbelianGroup::from_generator_values(const std::vector<std::int64_t>& values) const {
  if (values.size() != factors_.size()) throw std::invalid_argument("wrong number of generator values");
  AbelianChar out{std::vector<std::int64_t>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::int64_t v = ((values[i] % exponent_) + exponent_) % exponent_;
    const std::int64_t step = exponent_ / factors_[i];
    if (v % step != 0) throw std::invalid_argument("generator value incompatible with generator order");
    out.exps[i] = v / step;
  }
  return out;
}

bool AbelianGroup::is_trivial(const AbelianChar& chi) const {
  return std::all_of(chi.exps.begin(), chi.exps.end(), [](std::int64_t a) { return a == 0; });
}

std::int64_t AbelianGroup::character_order(const AbelianChar& chi) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    o = std::lcm(o, factors_[i] / std::gcd(chi.exps[i], factors_[i]));
  return o;
}

}  // namespace coxrep
