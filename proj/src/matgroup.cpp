#include "coxrep/matgroup.hpp"

#include <algorithm>
#include <deque>

#include "coxrep/abelian.hpp"
#include "coxrep/numtheory.hpp"

namespace coxrep {

std::string to_string(Flavor flavor) { return flavor == Flavor::GL ? "gl" : "sl"; }

Flavor parse_flavor(const std::string& text) {
  if (text == "gl" || text == "GL") return Flavor::GL;
  if (text == "sl" || text == "SL") return Flavor::SL;
  throw std::invalid_argument("unknown flavor '" + text + "' (expected gl|sl)");
}

std::uint64_t GroupSpec::q() const { return static_cast<std::uint64_t>(ipow(p, k)); }

std::uint64_t GroupSpec::expected_order() const {
  const std::uint64_t qq = q();
  if (flavor == Flavor::GL)
    return static_cast<std::uint64_t>(ipow(static_cast<std::int64_t>(qq), 4 * (r - 1))) * (qq * qq - 1) * (qq * qq - qq);
  return static_cast<std::uint64_t>(ipow(static_cast<std::int64_t>(qq), 3 * (r - 1))) * qq * (qq * qq - 1);
}

std::string GroupSpec::key() const {
  return to_string(flavor) + "_p" + std::to_string(p) + "_k" + std::to_string(k) + "_r" + std::to_string(r) + "_" +
         to_string(mode);
}

MatOps::MatOps(const Ring& ring) : ring_(&ring) {
  bits_ = 1;
  while ((1u << bits_) < ring.size()) ++bits_;
  mask_ = (std::uint64_t{1} << bits_) - 1;
}

Mat2 MatOps::mul(const Mat2& x, const Mat2& y) const {
  const Ring& R = *ring_;
  return {R.add(R.mul(x.a, y.a), R.mul(x.b, y.c)), R.add(R.mul(x.a, y.b), R.mul(x.b, y.d)),
          R.add(R.mul(x.c, y.a), R.mul(x.d, y.c)), R.add(R.mul(x.c, y.b), R.mul(x.d, y.d))};
}

Code MatOps::det(const Mat2& x) const { return ring_->sub(ring_->mul(x.a, x.d), ring_->mul(x.b, x.c)); }

Code MatOps::trace(const Mat2& x) const { return ring_->add(x.a, x.d); }

Mat2 MatOps::inv(const Mat2& x) const {
  const Ring& R = *ring_;
  const Code u = R.inv(det(x));
  return {R.mul(u, x.d), R.neg(R.mul(u, x.b)), R.neg(R.mul(u, x.c)), R.mul(u, x.a)};
}

Mat2 MatOps::reduce(const Mat2& x, const Ring& target) const {
  const Ring& R = *ring_;
  return {R.reduce(x.a, target), R.reduce(x.b, target), R.reduce(x.c, target), R.reduce(x.d, target)};
}

// ---------------------------------------------------------------------------

MatrixGroup::MatrixGroup(std::shared_ptr<const Ring> ring, std::string name, std::vector<std::uint64_t> keys,
                         std::vector<std::uint64_t> generator_keys, std::optional<std::vector<std::uint32_t>> class_of)
    : ring_(std::move(ring)), name_(std::move(name)), ops_(*ring_), keys_(std::move(keys)) {
  if (keys_.empty() || keys_[0] != ops_.pack(ops_.identity()))
    throw std::invalid_argument("group element list must start with the identity");
  if (ops_.key_bits() <= 24) {
    dense_index_.assign(std::size_t{1} << ops_.key_bits(), -1);
    for (std::uint32_t i = 0; i < keys_.size(); ++i) {
      if (dense_index_[keys_[i]] >= 0) throw std::invalid_argument("duplicate group element");
      dense_index_[keys_[i]] = static_cast<std::int32_t>(i);
    }
  } else {
    sparse_index_.reserve(keys_.size());
    for (std::uint32_t i = 0; i < keys_.size(); ++i)
      if (!sparse_index_.emplace(keys_[i], i).second) throw std::invalid_argument("duplicate group element");
  }
  for (auto g : generator_keys) {
    const auto idx = index_of_key(g);
    if (idx < 0) throw std::invalid_argument("generator outside the group");
    gens_.push_back(static_cast<std::uint32_t>(idx));
  }
  if (class_of) {
    if (class_of->size() != keys_.size()) throw std::invalid_argument("class map has wrong size");
    classes_.class_of = std::move(*class_of);
    std::size_t count = 0;
    for (auto c : classes_.class_of) count = std::max<std::size_t>(count, c + 1);
    classes_.reps.assign(count, UINT32_MAX);
    classes_.sizes.assign(count, 0);
    for (std::uint32_t i = 0; i < keys_.size(); ++i) {
      const auto c = classes_.class_of[i];
      classes_.reps[c] = std::min(classes_.reps[c], i);
      ++classes_.sizes[c];
    }
    for (auto s : classes_.sizes) classes_.centralizer_orders.push_back(keys_.size() / s);
  } else {
    compute_classes();
  }
}

std::int64_t MatrixGroup::index_of_key(std::uint64_t key) const {
  if (!dense_index_.empty()) return key < dense_index_.size() ? dense_index_[key] : -1;
  auto it = sparse_index_.find(key);
  return it == sparse_index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::uint32_t MatrixGroup::mul(std::uint32_t i, std::uint32_t j) const {
  return static_cast<std::uint32_t>(index_of(ops_.mul(mat(i), mat(j))));
}

std::uint32_t MatrixGroup::inv(std::uint32_t i) const { return static_cast<std::uint32_t>(index_of(ops_.inv(mat(i)))); }

std::uint32_t MatrixGroup::element_order(std::uint32_t i) const {
  const Mat2 x = mat(i);
  const Mat2 id = ops_.identity();
  Mat2 y = x;
  std::uint32_t n = 1;
  while (!(y == id)) {
    y = ops_.mul(y, x);
    ++n;
  }
  return n;
}

void MatrixGroup::compute_classes() {
  const auto n = size();
  std::vector<Mat2> gens, gens_inv;
  for (auto g : gens_) {
    gens.push_back(mat(g));
    gens_inv.push_back(ops_.inv(mat(g)));
  }
  constexpr std::uint32_t kUnset = UINT32_MAX;
  classes_.class_of.assign(n, kUnset);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (classes_.class_of[start] != kUnset) continue;
    const auto cls = static_cast<std::uint32_t>(classes_.reps.size());
    classes_.reps.push_back(start);
    std::uint64_t count = 1;
    classes_.class_of[start] = cls;
    queue.push_back(start);
    while (!queue.empty()) {
      const Mat2 x = mat(queue.front());
      queue.pop_front();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const auto y = index_of(ops_.mul(ops_.mul(gens[s], x), gens_inv[s]));
        if (y < 0) throw std::logic_error("conjugation left the group");
        auto& slot = classes_.class_of[static_cast<std::size_t>(y)];
        if (slot == kUnset) {
          slot = cls;
          ++count;
          queue.push_back(static_cast<std::uint32_t>(y));
        }
      }
    }
    classes_.sizes.push_back(count);
  }
  for (auto s : classes_.sizes) classes_.centralizer_orders.push_back(n / s);
}

std::vector<std::vector<std::uint32_t>> MatrixGroup::class_members() const {
  std::vector<std::vector<std::uint32_t>> out(classes_.count());
  for (std::uint32_t i = 0; i < size(); ++i) out[classes_.class_of[i]].push_back(i);
  return out;
}

std::uint64_t MatrixGroup::generated_order() const {
  std::vector<bool> seen(size(), false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  std::uint64_t count = 1;
  while (!queue.empty()) {
    const Mat2 x = mat(queue.front());
    queue.pop_front();
    for (auto g : gens_) {
      const auto y = index_of(ops_.mul(x, mat(g)));
      if (y >= 0 && !seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++count;
        queue.push_back(static_cast<std::uint32_t>(y));
      }
    }
  }
  return count;
}

// ---------------------------------------------------------------------------

std::vector<Mat2> standard_generators(const Ring& ring, Flavor flavor) {
  std::vector<Mat2> out;
  const Code one = ring.one();
  for (auto x : ring.additive_generators()) {
    out.push_back({one, x, 0, one});
    out.push_back({one, 0, x, one});
  }
  if (flavor == Flavor::GL) {
    const auto units = ring.units();
    std::vector<std::int32_t> pos(ring.size(), -1);
    for (std::size_t i = 0; i < units.size(); ++i) pos[units[i]] = static_cast<std::int32_t>(i);
    AbelianGroup ug(static_cast<std::uint32_t>(units.size()), static_cast<std::uint32_t>(pos[one]),
                    [&](std::uint32_t x, std::uint32_t y) {
                      return static_cast<std::uint32_t>(pos[ring.mul(units[x], units[y])]);
                    });
    for (auto g : ug.generators()) out.push_back({units[g], 0, 0, one});
  }
  return out;
}

GroupPtr enumerate_group(std::shared_ptr<const Ring> ring, Flavor flavor, std::uint64_t bound) {
  GroupSpec spec{ring->p(), ring->k(), ring->level(), ring->mode(), flavor};
  const auto expected = spec.expected_order();
  if (expected > bound)
    throw SizeBoundExceeded(spec.key() + ": order " + std::to_string(expected) + " exceeds bound " +
                            std::to_string(bound));
  const Ring& R = *ring;
  MatOps ops(R);
  const std::uint32_t n = R.size();
  std::vector<std::uint64_t> keys;
  keys.reserve(expected);
  const std::uint64_t id = ops.pack(ops.identity());
  keys.push_back(id);
  std::vector<std::uint64_t> rest;
  for (Code a = 0; a < n; ++a)
    for (Code b = 0; b < n; ++b)
      for (Code c = 0; c < n; ++c)
        for (Code d = 0; d < n; ++d) {
          const Mat2 m{a, b, c, d};
          const Code det = ops.det(m);
          const bool member = flavor == Flavor::GL ? R.is_unit(det) : det == R.one();
          if (member) {
            const auto key = ops.pack(m);
            if (key != id) rest.push_back(key);
          }
        }
  std::sort(rest.begin(), rest.end());
  keys.insert(keys.end(), rest.begin(), rest.end());
  std::vector<std::uint64_t> gens;
  for (const auto& g : standard_generators(R, flavor)) gens.push_back(ops.pack(g));
  std::string name = (flavor == Flavor::GL ? "GL2(" : "SL2(") + R.describe() + ")";
  return std::make_shared<const MatrixGroup>(std::move(ring), std::move(name), std::move(keys), std::move(gens));
}

GroupPtr enumerate_group(const GroupSpec& spec, std::uint64_t bound) {
  if (spec.expected_order() > bound)
    throw SizeBoundExceeded(spec.key() + ": order " + std::to_string(spec.expected_order()) +
                            " exceeds bound " + std::to_string(bound));
  return enumerate_group(make_ring(spec.p, spec.k, spec.r, spec.mode), spec.flavor, bound);
}

GroupPtr subgroup_from_elements(const MatrixGroup& group, const std::vector<std::uint32_t>& members,
                                const std::string& name) {
  std::vector<std::uint32_t> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty() || sorted[0] != 0) throw std::invalid_argument("subgroup must contain the identity");
  std::vector<bool> in_sub(group.size(), false);
  for (auto m : sorted) in_sub[m] = true;

  // Greedy generating set: add the least element outside the current closure.
  std::vector<bool> reached(group.size(), false);
  reached[0] = true;
  std::vector<std::uint32_t> closure{0};
  std::vector<std::uint32_t> gens;
  for (auto cand : sorted) {
    if (reached[cand]) continue;
    gens.push_back(cand);
    closure.assign(1, 0);
    std::fill(reached.begin(), reached.end(), false);
    reached[0] = true;
    for (std::size_t head = 0; head < closure.size(); ++head)
      for (auto g : gens) {
        const auto y = group.mul(closure[head], g);
        if (!in_sub[y]) throw std::invalid_argument("element set is not closed under multiplication");
        if (!reached[y]) {
          reached[y] = true;
          closure.push_back(y);
        }
      }
  }
  if (closure.size() != sorted.size()) throw std::invalid_argument("element set is not a subgroup");

  std::vector<std::uint64_t> keys;
  for (auto m : sorted) keys.push_back(group.key(m));
  std::vector<std::uint64_t> gen_keys;
  for (auto g : gens) gen_keys.push_back(group.key(g));
  return std::make_shared<const MatrixGroup>(group.ring_ptr(), name, std::move(keys), std::move(gen_keys));
}

GroupPtr borel_subgroup(const MatrixGroup& group) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < group.size(); ++i)
    if (group.mat(i).c == 0) members.push_back(i);
  return subgroup_from_elements(group, members, "B(" + group.name() + ")");
}

std::vector<std::uint32_t> inclusion_map(const MatrixGroup& sub, const MatrixGroup& group) {
  if (sub.ring_ptr() != group.ring_ptr() && !(sub.ring().same_family(group.ring()) &&
                                              sub.ring().level() == group.ring().level()))
    throw std::invalid_argument("groups over different rings");
  std::vector<std::uint32_t> out(sub.size());
  for (std::uint32_t i = 0; i < sub.size(); ++i) {
    const auto j = group.index_of(sub.mat(i));
    if (j < 0) throw std::invalid_argument("subgroup not contained in group");
    out[i] = static_cast<std::uint32_t>(j);
  }
  return out;
}

std::vector<std::uint32_t> sl_embedding(const MatrixGroup& sl, const MatrixGroup& gl) {
  for (std::uint32_t i = 0; i < sl.size(); ++i)
    if (sl.det(i) != sl.ring().one()) throw std::invalid_argument("source is not inside SL_2");
  return inclusion_map(sl, gl);
}

GroupHom reduction_hom(const MatrixGroup& source, const MatrixGroup& target) {
  const Ring& from = source.ring();
  const Ring& to = target.ring();
  if (!from.same_family(to)) throw std::invalid_argument("reduction between different ring families");
  if (to.level() < 1 || to.level() > from.level())
    throw std::out_of_range("reduction level out of range: " + std::to_string(to.level()));
  GroupHom hom;
  hom.image.resize(source.size());
  for (std::uint32_t i = 0; i < source.size(); ++i) {
    const auto j = target.index_of(source.ops().reduce(source.mat(i), to));
    if (j < 0) throw std::invalid_argument("reduction image outside target group");
    hom.image[i] = static_cast<std::uint32_t>(j);
    if (j == 0) hom.kernel.push_back(i);
  }
  return hom;
}

bool is_surjective(const GroupHom& hom, std::uint32_t target_size) {
  std::vector<bool> hit(target_size, false);
  for (auto j : hom.image) hit[j] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace coxrep
