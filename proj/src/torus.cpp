#include "coxrep/torus.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

namespace coxrep {

namespace {

std::vector<std::int32_t> positions(const ExtRing& ext, const std::vector<ExtElem>& elems) {
  std::vector<std::int32_t> pos(ext.size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[ext.index(elems[i])] = static_cast<std::int32_t>(i);
  return pos;
}

// Rescale a value in units of 1/from to units of 1/to; exact.
std::int64_t rescale(std::int64_t v, std::int64_t from, std::int64_t to) {
  const std::int64_t num = v * to;
  if (num % from != 0) throw std::logic_error("character value does not descend to the smaller group");
  return ((num / from) % to + to) % to;
}

// F_p-basis of F_{q^2} as residue-extension indices: e and e*xi for e in an F_p-basis of F_q.
std::vector<std::uint32_t> residue_ext_basis(const Ring& ring) {
  const Ring& f = ring.residue_field();
  std::vector<std::uint32_t> out;
  for (auto e : f.additive_generators()) out.push_back(e);
  for (auto e : f.additive_generators()) out.push_back(ring.q() * e);
  return out;
}

// 1 + pi^i * lift(x) in O'_r.
ExtElem one_plus(const ExtRing& ext, int i, std::uint32_t residue_index) {
  return ext.add(ext.one(), ext.scale(ext.base().pi_power(i), ext.lift(residue_index)));
}

// Indices in O_r^x of 1 + pi^i e for an F_p-basis e of F_q.
std::vector<std::uint32_t> unit_layer(const UnitGroup& units, int i) {
  const Ring& R = units.ring();
  std::vector<std::uint32_t> out;
  for (auto e : R.residue_field().additive_generators())
    out.push_back(units.index(R.add(R.one(), R.mul(R.pi_power(i), R.lift(e)))));
  return out;
}

}  // namespace

CoxeterTorus::CoxeterTorus(std::shared_ptr<const Ring> ring)
    : ring_(std::move(ring)),
      ext_(ExtRing::make(ring_)),
      units_(std::make_unique<UnitGroup>(ring_)),
      elems_(ext_->units()),
      pos_(positions(*ext_, elems_)),
      group_(static_cast<std::uint32_t>(elems_.size()), static_cast<std::uint32_t>(pos_[ext_->index(ext_->one())]),
             [this](std::uint32_t x, std::uint32_t y) {
               return static_cast<std::uint32_t>(pos_[ext_->index(ext_->mul(elems_[x], elems_[y]))]);
             }) {
  const auto n = order();
  sigma_.resize(n);
  norm_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    sigma_[i] = index(ext_->frobenius(elems_[i]));
    norm_[i] = units_->index(ext_->norm(elems_[i]));
  }

  const auto et = exponent();
  const auto eu = units_->exponent();
  if (et % eu != 0) throw std::logic_error("unit-group exponent does not divide the torus exponent");
  const auto& gens = group_.generators();
  pullbacks_.reserve(units_->group().dual_size());
  for (std::uint64_t a = 0; a < units_->group().dual_size(); ++a) {
    const auto alpha = units_->group().character(a);
    std::vector<std::int64_t> vals;
    for (auto g : gens) vals.push_back(units_->group().evaluate(alpha, norm_[g]) * (et / eu));
    pullbacks_.push_back(group_.from_generator_values(vals));
  }

  layers_.assign(static_cast<std::size_t>(level()), {});
  const auto basis = residue_ext_basis(*ring_);
  for (int i = 1; i < level(); ++i)
    for (auto x : basis) layers_[static_cast<std::size_t>(i)].push_back(index(one_plus(*ext_, i, x)));

  sl_pos_.assign(n, -1);
  for (std::uint32_t i = 0; i < n; ++i)
    if (ext_->norm(elems_[i]) == ring_->one()) {
      sl_pos_[i] = static_cast<std::int32_t>(sl_elems_.size());
      sl_elems_.push_back(i);
    }
  sl_group_ = std::make_unique<AbelianGroup>(
      static_cast<std::uint32_t>(sl_elems_.size()), static_cast<std::uint32_t>(sl_pos_[identity()]),
      [this](std::uint32_t x, std::uint32_t y) {
        return static_cast<std::uint32_t>(sl_pos_[group_.mul(sl_elems_[x], sl_elems_[y])]);
      });
}

TorusPtr CoxeterTorus::build(std::shared_ptr<const Ring> ring) {
  std::shared_ptr<CoxeterTorus> t(new CoxeterTorus(ring));
  const int r = ring->level();
  if (r > 1) {
    t->lower_ = build(Ring::make(ring->p(), ring->k(), r - 1, ring->mode()));
    t->reduce_.assign(static_cast<std::size_t>(r), {});
    t->lift_.assign(static_cast<std::size_t>(r), {});
    for (int j = 1; j < r; ++j) {
      const CoxeterTorus& low = t->at_level(j);
      auto& red = t->reduce_[static_cast<std::size_t>(j)];
      auto& lift = t->lift_[static_cast<std::size_t>(j)];
      red.resize(t->order());
      lift.assign(low.order(), UINT32_MAX);
      for (std::uint32_t i = 0; i < t->order(); ++i) {
        red[i] = low.index(t->ext_->reduce(t->elems_[i], low.ext()));
        if (lift[red[i]] == UINT32_MAX) lift[red[i]] = i;
      }
    }
  }
  return t;
}

TorusPtr CoxeterTorus::build(const GroupSpec& spec) { return build(Ring::make(spec.p, spec.k, spec.r, spec.mode)); }

std::uint32_t CoxeterTorus::index(const ExtElem& t) const {
  const auto i = ext_->index(t);
  if (i >= pos_.size() || pos_[i] < 0) throw NotInvertible("element is not in the torus");
  return static_cast<std::uint32_t>(pos_[i]);
}

Mat2 CoxeterTorus::embed(std::uint32_t i) const {
  const Ring& R = *ring_;
  const auto& t = elems_[i];
  return {t.a, R.neg(R.mul(ext_->c0(), t.b)), t.b, R.sub(t.a, R.mul(ext_->c1(), t.b))};
}

Cyclo CoxeterTorus::value(const AbelianChar& theta, std::uint32_t i) const {
  return Cyclo::root_of_unity(static_cast<int>(exponent()), evaluate(theta, i));
}

AbelianChar CoxeterTorus::compose_sigma(const AbelianChar& theta) const {
  std::vector<std::int64_t> vals;
  for (auto g : group_.generators()) vals.push_back(evaluate(theta, sigma_[g]));
  return group_.from_generator_values(vals);
}

AbelianChar CoxeterTorus::norm_pullback(const AbelianChar& alpha) const {
  return pullbacks_[units_->group().character_index(alpha)];
}

int CoxeterTorus::level_of(const AbelianChar& eta) const {
  for (int i = level() - 1; i >= 1; --i)
    for (auto g : layers_[static_cast<std::size_t>(i)])
      if (evaluate(eta, g) != 0) return i + 1;
  return 1;
}

const CoxeterTorus& CoxeterTorus::at_level(int j) const {
  if (j == level()) return *this;
  if (j < 1 || j > level() || !lower_) throw std::out_of_range("torus level out of range");
  return lower_->at_level(j);
}

TorusPtr CoxeterTorus::at_level_ptr(int j) const {
  if (j == level()) return shared_from_this();
  if (j < 1 || j > level() || !lower_) throw std::out_of_range("torus level out of range");
  return j == lower_->level() ? lower_ : lower_->at_level_ptr(j);
}

std::uint32_t CoxeterTorus::reduce_to(int j, std::uint32_t i) const {
  if (j == level()) return i;
  return reduce_.at(static_cast<std::size_t>(j))[i];
}

AbelianChar CoxeterTorus::descend(const AbelianChar& theta, int j) const {
  if (j == level()) return theta;
  if (level_of(theta) > j) throw std::invalid_argument("character does not factor through the requested level");
  const CoxeterTorus& low = at_level(j);
  const auto& lift = lift_.at(static_cast<std::size_t>(j));
  std::vector<std::int64_t> vals;
  for (auto g : low.group().generators()) vals.push_back(rescale(evaluate(theta, lift[g]), exponent(), low.exponent()));
  return low.group().from_generator_values(vals);
}

AbelianChar CoxeterTorus::inflate_from(const AbelianChar& theta_j, int j) const {
  if (j == level()) return theta_j;
  const CoxeterTorus& low = at_level(j);
  const auto& red = reduce_.at(static_cast<std::size_t>(j));
  std::vector<std::int64_t> vals;
  for (auto g : group_.generators()) vals.push_back(low.evaluate(theta_j, red[g]) * (exponent() / low.exponent()));
  return group_.from_generator_values(vals);
}

AbelianChar CoxeterTorus::restrict_to_norm_one(const AbelianChar& theta) const {
  std::vector<std::int64_t> vals;
  for (auto g : sl_group_->generators())
    vals.push_back(rescale(evaluate(theta, sl_elems_[g]), exponent(), sl_group_->exponent()));
  return sl_group_->from_generator_values(vals);
}

// ---------------------------------------------------------------------------

std::uint32_t tau_at_level(const CoxeterTorus& torus, const AbelianChar& theta, int j, AdditiveCharacter psi) {
  const int r = torus.level();
  if (j < 2 || j > r) throw std::invalid_argument("tau needs 2 <= j <= r");
  if (torus.level_of(theta) > j) throw std::invalid_argument("character is nontrivial above the requested layer");
  const Ring& f = torus.ring().residue_field();
  const ExtRing& fe = torus.ext().residue_ext();
  const auto basis = residue_ext_basis(torus.ring());
  const auto e = torus.exponent();
  const auto p = torus.ring().p();
  std::vector<std::int64_t> target;
  for (auto x : basis) target.push_back(torus.evaluate(theta, torus.index(one_plus(torus.ext(), j - 1, x))));
  for (std::uint32_t tau = 0; tau < fe.size(); ++tau) {
    bool ok = true;
    for (std::size_t b = 0; b < basis.size() && ok; ++b) {
      const Code tr = fe.trace(fe.mul(fe.from_index(basis[b]), fe.from_index(tau)));
      const auto t = f.field_trace_to_prime(f.mul(psi.scale, tr));
      ok = (t * (e / p)) % e == target[b];
    }
    if (ok) return tau;
  }
  throw std::logic_error("no tau matches the character on the top layer");
}

std::uint32_t tau_of(const CoxeterTorus& torus, const AbelianChar& theta, AdditiveCharacter psi) {
  if (torus.level() < 2) throw std::invalid_argument("tau is undefined at level one");
  return tau_at_level(torus, theta, torus.level(), psi);
}

bool is_regular_tau(const CoxeterTorus& torus, std::uint32_t tau) { return tau / torus.q() != 0; }

std::pair<int, AbelianChar> conductor_by_peeling(const CoxeterTorus& torus, const AbelianChar& theta,
                                                 AdditiveCharacter psi) {
  const UnitGroup& units = torus.units();
  const AbelianGroup& U = units.group();
  const Ring& f = torus.ring().residue_field();
  const auto eu = units.exponent();
  const auto p = torus.ring().p();
  const auto basis = f.additive_generators();

  AbelianChar cur = theta;
  AbelianChar twist = U.trivial_character();
  int j = torus.level_of(cur);
  while (j >= 2) {
    const auto tau = tau_at_level(torus, cur, j, psi);
    if (is_regular_tau(torus, tau)) return {j, twist};
    const Code s = tau % torus.q();
    // beta trivial on 1 + pi^j O, beta(1 + pi^{j-1} e) = psi(s e).
    std::vector<std::vector<std::uint32_t>> upper;
    for (int i = j; i < torus.level(); ++i) upper.push_back(unit_layer(units, i));
    const auto layer = unit_layer(units, j - 1);
    std::vector<std::int64_t> want;
    for (auto e : basis) want.push_back(f.field_trace_to_prime(f.mul(psi.scale, f.mul(s, e))) * (eu / p) % eu);
    std::optional<AbelianChar> beta;
    for (std::uint64_t a = 0; a < U.dual_size() && !beta; ++a) {
      const auto cand = U.character(a);
      bool ok = true;
      for (const auto& gens : upper)
        for (auto g : gens) ok = ok && U.evaluate(cand, g) == 0;
      for (std::size_t b = 0; b < layer.size() && ok; ++b) ok = U.evaluate(cand, layer[b]) == want[b];
      if (ok) beta = cand;
    }
    if (!beta) throw std::logic_error("no character of O_r^x matches a central tau");
    const auto inv = U.inverse(*beta);
    cur = torus.group().multiply(cur, torus.norm_pullback(inv));
    twist = U.multiply(twist, inv);
    const int next = torus.level_of(cur);
    if (next >= j) throw std::logic_error("twisting by a central tau did not lower the level");
    j = next;
  }
  return {1, twist};
}

int conductor_brute_force(const CoxeterTorus& torus, const AbelianChar& theta) {
  int best = torus.level();
  for (std::uint64_t a = 0; a < torus.units().group().dual_size() && best > 1; ++a)
    best = std::min(best, torus.level_of(torus.group().multiply(theta, torus.norm_pullback(a))));
  return best;
}

Conductor conductor(const CoxeterTorus& torus, const AbelianChar& theta, AdditiveCharacter psi) {
  const AbelianGroup& U = torus.units().group();
  const int r = torus.level();
  if (r >= 2 && is_regular_tau(torus, tau_of(torus, theta, psi))) {
    return {r, theta, U.trivial_character(), U.dual_size()};
  }
  const int r0 = conductor_by_peeling(torus, theta, psi).first;
  Conductor best;
  best.r0 = r0;
  best.minimizers = 0;
  bool found = false;
  for (std::uint64_t a = 0; a < U.dual_size(); ++a) {
    const auto eta = torus.group().multiply(theta, torus.norm_pullback(a));
    const int lv = torus.level_of(eta);
    if (lv < r0) throw std::logic_error("a twist beats the peeled conductor");
    if (lv > r0) continue;
    ++best.minimizers;
    auto theta0 = torus.descend(eta, r0);
    auto alpha = U.character(a);
    if (!found || std::tie(theta0.exps, alpha.exps) < std::tie(best.theta0.exps, best.alpha.exps)) {
      best.theta0 = std::move(theta0);
      best.alpha = std::move(alpha);
      found = true;
    }
  }
  if (!found) throw std::logic_error("peeled conductor not reached by any twist");
  if (r0 > 1) {
    const CoxeterTorus& low = torus.at_level(r0);
    if (!is_regular_tau(low, tau_of(low, best.theta0, psi)))
      throw std::logic_error("descended character is not regular at its conductor");
  }
  return best;
}

bool general_position(const CoxeterTorus& level_one, const AbelianChar& theta0) {
  return level_one.compose_sigma(theta0) != theta0;
}

int weyl_stabilizer(const CoxeterTorus& torus, const AbelianChar& theta) {
  return torus.compose_sigma(theta) == theta ? 2 : 1;
}

TorusCharClass classify(const CoxeterTorus& torus, const AbelianChar& theta, AdditiveCharacter psi) {
  TorusCharClass c;
  c.theta = theta;
  if (torus.level() >= 2) {
    c.tau = tau_of(torus, theta, psi);
    c.is_regular = is_regular_tau(torus, *c.tau);
  }
  c.cond = conductor(torus, theta, psi);
  const CoxeterTorus& one = torus.at_level(1);
  if (c.cond.r0 == 1) c.general_position = general_position(one, c.cond.theta0);
  c.stab_size = weyl_stabilizer(torus, theta);
  c.theta_bar = torus.restrict_to_norm_one(theta);
  const auto q = torus.q();
  if (q % 2 == 1 && c.cond.r0 == 1)
    c.quadratic = one.norm_one_group().character_order(one.restrict_to_norm_one(c.cond.theta0)) == 2;
  if (q % 2 == 0 && (c.is_regular || c.cond.r0 > 1))
    c.even_split = torus.restrict_to_norm_one(torus.compose_sigma(theta)) == c.theta_bar;
  return c;
}

std::string format_residue_ext(const CoxeterTorus& torus, std::uint32_t tau) {
  const auto q = torus.q();
  return std::to_string(tau % q) + "+" + std::to_string(tau / q) + "*xi";
}

std::string to_json_line(const CoxeterTorus& torus, const TorusCharClass& c) {
  nlohmann::json j;
  j["index"] = torus.group().character_index(c.theta);
  j["exponent"] = torus.exponent();
  std::vector<std::int64_t> gv;
  for (auto g : torus.group().generators()) gv.push_back(torus.evaluate(c.theta, g));
  j["generator_values"] = gv;
  j["tau"] = c.tau ? nlohmann::json(format_residue_ext(torus, *c.tau)) : nlohmann::json(nullptr);
  j["regular"] = c.is_regular;
  j["r0"] = c.cond.r0;
  j["theta0"] = c.cond.theta0.exps;
  j["alpha"] = c.cond.alpha.exps;
  j["alpha_minimizers"] = c.cond.minimizers;
  j["general_position"] = c.general_position;
  j["stabilizer"] = c.stab_size;
  j["theta_bar"] = c.theta_bar.exps;
  j["sl_quadratic"] = c.quadratic;
  j["sl_even_split"] = c.even_split;
  return j.dump();
}

}  // namespace coxrep
