#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "coxrep/chartab.hpp"

namespace coxrep {

namespace {

void require_same_group(const Character& a, const Character& b) {
  if (a.group != b.group) throw GroupMismatch("class functions live on different groups");
  if (a.values.size() != b.values.size()) throw GroupMismatch("class functions have different lengths");
}

Cyclo sum_over(const std::vector<Cyclo>& terms) {
  int L = 1;
  for (const auto& t : terms) L = std::lcm(L, t.order());
  std::vector<std::int64_t> acc(static_cast<std::size_t>(CycloBasis::get(L).degree), 0);
  for (const auto& t : terms) {
    const Cyclo u = t.lifted(L);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += u.coeffs()[i];
  }
  return Cyclo(L, std::move(acc));
}

// sum_k w_k a_k conj(b_k) over all classes, as an exact cyclotomic integer.
Cyclo weighted_pairing(const std::vector<Cyclo>& a, const std::vector<Cyclo>& b,
                       const std::vector<std::uint64_t>& weights) {
  std::vector<Cyclo> terms;
  terms.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero() || b[k].is_zero()) continue;
    terms.push_back((a[k] * b[k].conj()) * static_cast<std::int64_t>(weights[k]));
  }
  return sum_over(terms);
}

Rational to_rational(const Cyclo& numerator, std::int64_t denominator) {
  if (!numerator.is_rational())
    throw std::domain_error("inner product is not rational: " + numerator.to_string());
  return make_rational(numerator.to_integer(), denominator);
}

}  // namespace

Rational make_rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational r{mpz_class(std::to_string(n)), mpz_class(std::to_string(d))};
  r.canonicalize();
  return r;
}

Character trivial_character(GroupPtr group) {
  Character c;
  c.values.assign(group->classes().count(), Cyclo(1));
  c.group = std::move(group);
  c.irreducible = true;
  return c;
}

Character operator+(const Character& a, const Character& b) {
  require_same_group(a, b);
  Character c{a.group, {}, false, true};
  c.values.reserve(a.values.size());
  for (std::size_t k = 0; k < a.values.size(); ++k) c.values.push_back(a.values[k] + b.values[k]);
  return c;
}

Character operator-(const Character& a, const Character& b) {
  require_same_group(a, b);
  Character c{a.group, {}, false, true};
  c.values.reserve(a.values.size());
  for (std::size_t k = 0; k < a.values.size(); ++k) c.values.push_back(a.values[k] - b.values[k]);
  return c;
}

Character operator*(std::int64_t s, const Character& a) {
  Character c{a.group, {}, false, true};
  c.values.reserve(a.values.size());
  for (const auto& v : a.values) c.values.push_back(v * s);
  return c;
}

Rational inner_product(const Character& chi, const Character& psi) {
  require_same_group(chi, psi);
  const auto& cls = chi.group->classes();
  return to_rational(weighted_pairing(chi.values, psi.values, cls.sizes), chi.group->size());
}

Character inflate(const Character& chi, GroupPtr source, const GroupHom& hom) {
  const MatrixGroup& target = *chi.group;
  if (hom.image.size() != source->size()) throw std::invalid_argument("homomorphism does not match the source group");
  if (!is_surjective(hom, target.size())) throw std::invalid_argument("inflation needs a surjective homomorphism");
  const auto& cls = source->classes();
  Character out;
  out.values.reserve(cls.count());
  for (auto rep : cls.reps) out.values.push_back(chi.values[target.class_of(hom.image[rep])]);
  out.group = std::move(source);
  out.irreducible = chi.irreducible;
  out.is_virtual = chi.is_virtual;
  return out;
}

AdjunctionResult adjunction_sides(const Character& chi, const Character& psi, const GroupHom& hom) {
  const MatrixGroup& big = *psi.group;
  const MatrixGroup& quot = *chi.group;
  if (hom.image.size() != big.size()) throw std::invalid_argument("homomorphism does not match psi's group");
  if (!is_surjective(hom, quot.size())) throw std::invalid_argument("adjunction needs a surjective homomorphism");

  // Left side: pair chi(hom g) with psi(g) over G.
  const auto& bc = big.classes();
  std::vector<Cyclo> pulled(bc.count());
  for (std::size_t k = 0; k < bc.count(); ++k) pulled[k] = chi.values[quot.class_of(hom.image[bc.reps[k]])];
  const Rational lhs = to_rational(weighted_pairing(pulled, psi.values, bc.sizes), big.size());

  // Right side: |N| psi^N(x) = sum_{g -> x} psi(g), evaluated at each class representative x.
  const auto n = static_cast<std::int64_t>(hom.kernel.size());
  const auto& qc = quot.classes();
  std::vector<std::vector<Cyclo>> fibres(qc.count());
  for (std::uint32_t g = 0; g < big.size(); ++g) {
    const auto x = hom.image[g];
    const auto cx = quot.class_of(x);
    if (x == qc.reps[cx]) fibres[cx].push_back(psi.values[big.class_of(g)]);
  }
  std::vector<Cyclo> scaled(qc.count());
  for (std::size_t k = 0; k < qc.count(); ++k) scaled[k] = sum_over(fibres[k]);
  const Rational rhs = to_rational(weighted_pairing(chi.values, scaled, qc.sizes), static_cast<std::int64_t>(quot.size()) * n);
  return {lhs, rhs};
}

bool adjunction_check(const Character& chi, const Character& psi, const GroupHom& hom) {
  return adjunction_sides(chi, psi, hom).holds();
}

std::vector<std::vector<AdjunctionResult>> adjunction_matrix(const std::vector<Character>& chis,
                                                             const std::vector<Character>& psis, const GroupHom& hom) {
  std::vector<std::vector<AdjunctionResult>> out(chis.size());
  if (chis.empty() || psis.empty()) return out;
  const MatrixGroup& big = *psis.front().group;
  const MatrixGroup& quot = *chis.front().group;
  if (hom.image.size() != big.size()) throw std::invalid_argument("homomorphism does not match psi's group");
  if (!is_surjective(hom, quot.size())) throw std::invalid_argument("adjunction needs a surjective homomorphism");
  for (const auto& c : chis)
    if (c.group.get() != &quot) throw GroupMismatch("chis live on different groups");
  for (const auto& p : psis)
    if (p.group.get() != &big) throw GroupMismatch("psis live on different groups");

  const auto& bc = big.classes();
  const auto& qc = quot.classes();
  const auto n = static_cast<std::int64_t>(hom.kernel.size());
  // Class of G above each class of G/N, and the elements of G above each representative of G/N.
  std::vector<std::uint32_t> pulled_class(bc.count());
  for (std::size_t k = 0; k < bc.count(); ++k) pulled_class[k] = quot.class_of(hom.image[bc.reps[k]]);
  std::vector<std::vector<std::uint32_t>> fibre_classes(qc.count());
  for (std::uint32_t g = 0; g < big.size(); ++g) {
    const auto x = hom.image[g];
    const auto cx = quot.class_of(x);
    if (x == qc.reps[cx]) fibre_classes[cx].push_back(big.class_of(g));
  }

  for (std::size_t i = 0; i < chis.size(); ++i) out[i].resize(psis.size());
  for (std::size_t j = 0; j < psis.size(); ++j) {
    const auto& psi = psis[j];
    std::vector<Cyclo> scaled(qc.count());
    for (std::size_t k = 0; k < qc.count(); ++k) {
      std::vector<Cyclo> terms;
      terms.reserve(fibre_classes[k].size());
      for (auto c : fibre_classes[k]) terms.push_back(psi.values[c]);
      scaled[k] = sum_over(terms);
    }
    for (std::size_t i = 0; i < chis.size(); ++i) {
      const auto& chi = chis[i];
      std::vector<Cyclo> pulled(bc.count());
      for (std::size_t k = 0; k < bc.count(); ++k) pulled[k] = chi.values[pulled_class[k]];
      out[i][j].lhs = to_rational(weighted_pairing(pulled, psi.values, bc.sizes), big.size());
      out[i][j].rhs = to_rational(weighted_pairing(chi.values, scaled, qc.sizes), static_cast<std::int64_t>(quot.size()) * n);
    }
  }
  return out;
}

Character restrict_to(const Character& chi, GroupPtr sub, const std::vector<std::uint32_t>& inclusion) {
  const MatrixGroup& group = *chi.group;
  if (inclusion.size() != sub->size()) throw std::invalid_argument("inclusion map does not match the subgroup");
  for (auto g : inclusion)
    if (g >= group.size()) throw std::invalid_argument("subgroup not contained in group");
  Character out;
  const auto& cls = sub->classes();
  out.values.reserve(cls.count());
  for (auto rep : cls.reps) out.values.push_back(chi.values[group.class_of(inclusion[rep])]);
  out.group = std::move(sub);
  out.is_virtual = chi.is_virtual;
  return out;
}

Character induce(const Character& chi, GroupPtr group, const std::vector<std::uint32_t>& inclusion) {
  const MatrixGroup& sub = *chi.group;
  if (inclusion.size() != sub.size()) throw std::invalid_argument("inclusion map does not match the subgroup");
  const auto& gc = group->classes();
  std::vector<std::vector<Cyclo>> hits(gc.count());
  for (std::uint32_t h = 0; h < sub.size(); ++h) {
    if (inclusion[h] >= group->size()) throw std::invalid_argument("subgroup not contained in group");
    hits[group->class_of(inclusion[h])].push_back(chi.values[sub.class_of(h)]);
  }
  Character out;
  out.values.reserve(gc.count());
  for (std::size_t k = 0; k < gc.count(); ++k) {
    // |G| / (|H| |C_k|) = |C_G(g_k)| / |H|
    const Cyclo s = sum_over(hits[k]) * static_cast<std::int64_t>(gc.centralizer_orders[k]);
    out.values.push_back(s.divided_by(sub.size()));
  }
  out.group = std::move(group);
  out.is_virtual = chi.is_virtual;
  return out;
}

Character steinberg(GroupPtr group) {
  if (group->ring().level() != 1) throw std::invalid_argument("the Steinberg character is built at level one");
  const GroupPtr borel = borel_subgroup(*group);
  const auto inc = inclusion_map(*borel, *group);
  Character st = induce(trivial_character(borel), group, inc) - trivial_character(group);
  const auto q = static_cast<std::int64_t>(group->ring().q());
  if (inner_product(st, st) != 1 || st.degree() != q)
    throw std::logic_error("Ind_B^G(1) - 1 is not irreducible of degree q");
  st.irreducible = true;
  st.is_virtual = false;
  return st;
}

Character det_character(GroupPtr group, const UnitGroup& units, const AbelianChar& alpha) {
  const auto& cls = group->classes();
  const int e = static_cast<int>(units.exponent());
  Character out;
  out.values.reserve(cls.count());
  for (auto rep : cls.reps) out.values.push_back(Cyclo::root_of_unity(e, units.evaluate(alpha, group->det(rep))));
  out.group = std::move(group);
  out.irreducible = true;
  return out;
}

Character tensor_linear(const Character& chi, const UnitGroup& units, const AbelianChar& alpha) {
  const Character lin = det_character(chi.group, units, alpha);
  Character out{chi.group, {}, chi.irreducible, chi.is_virtual};
  out.values.reserve(chi.values.size());
  for (std::size_t k = 0; k < chi.values.size(); ++k) out.values.push_back(chi.values[k] * lin.values[k]);
  return out;
}

// ---------------------------------------------------------------------------

CharacterTable::CharacterTable(GroupPtr group, int exponent, std::uint64_t prime, std::vector<Character> irreducibles)
    : group_(std::move(group)), exponent_(exponent), prime_(prime), irr_(std::move(irreducibles)) {}

std::vector<std::int64_t> CharacterTable::degrees() const {
  std::vector<std::int64_t> d;
  d.reserve(irr_.size());
  for (const auto& c : irr_) d.push_back(c.degree());
  return d;
}

std::int64_t CharacterTable::find(const Character& chi) const {
  if (chi.group != group_) return -1;
  for (std::size_t i = 0; i < irr_.size(); ++i)
    if (irr_[i].values == chi.values) return static_cast<std::int64_t>(i);
  return -1;
}

std::vector<Rational> CharacterTable::decompose(const Character& chi) const {
  std::vector<Rational> m;
  m.reserve(irr_.size());
  for (const auto& c : irr_) m.push_back(inner_product(chi, c));
  return m;
}

void write_table_tsv(const CharacterTable& table, std::ostream& os) {
  const auto& cls = table.group()->classes();
  os << "class\trep\tsize";
  for (std::size_t i = 0; i < table.size(); ++i) os << "\tchi" << i;
  os << "\n";
  for (std::size_t k = 0; k < cls.count(); ++k) {
    os << k << "\t" << cls.reps[k] << "\t" << cls.sizes[k];
    for (std::size_t i = 0; i < table.size(); ++i) os << "\t" << table[i].values[k].to_string();
    os << "\n";
  }
}

}  // namespace coxrep
