#pragma once

// GL_2(O_r), SL_2(O_r) and their subgroups as fully enumerated finite groups.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxrep/ring.hpp"

namespace coxrep {

enum class Flavor { GL, SL };

std::string to_string(Flavor flavor);
Flavor parse_flavor(const std::string& text);

class SizeBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultGroupBound = 500000;

struct GroupSpec {
  int p = 2;
  int k = 1;
  int r = 1;
  RingMode mode = RingMode::Mixed;
  Flavor flavor = Flavor::GL;

  std::uint64_t q() const;
  /// Closed-form group order.
  std::uint64_t expected_order() const;
  /// Stable key, e.g. "gl_p3_k1_r2_mixed".
  std::string key() const;
  GroupSpec at_level(int level) const {
    GroupSpec s = *this;
    s.r = level;
    return s;
  }
  bool operator==(const GroupSpec&) const = default;
};

struct Mat2 {
  Code a = 0, b = 0, c = 0, d = 0;
  bool operator==(const Mat2&) const = default;
};

/// 2x2 matrix arithmetic over a ring, with a compact integer key per matrix.
class MatOps {
 public:
  explicit MatOps(const Ring& ring);

  std::uint64_t pack(const Mat2& m) const {
    return std::uint64_t{m.a} | (std::uint64_t{m.b} << bits_) | (std::uint64_t{m.c} << (2 * bits_)) |
           (std::uint64_t{m.d} << (3 * bits_));
  }
  Mat2 unpack(std::uint64_t key) const {
    return {static_cast<Code>(key & mask_), static_cast<Code>((key >> bits_) & mask_),
            static_cast<Code>((key >> (2 * bits_)) & mask_), static_cast<Code>((key >> (3 * bits_)) & mask_)};
  }
  Mat2 mul(const Mat2& x, const Mat2& y) const;
  Mat2 inv(const Mat2& x) const;
  Code det(const Mat2& x) const;
  Code trace(const Mat2& x) const;
  Mat2 identity() const { return {ring_->one(), 0, 0, ring_->one()}; }
  Mat2 reduce(const Mat2& x, const Ring& target) const;
  int key_bits() const { return 4 * bits_; }

 private:
  const Ring* ring_;
  int bits_;
  std::uint64_t mask_;
};

struct ConjugacyData {
  std::vector<std::uint32_t> reps;          // least element index in each class
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> centralizer_orders;
  std::vector<std::uint32_t> class_of;      // element index -> class index

  std::size_t count() const { return reps.size(); }
};

/// A finite subgroup of GL_2(O_r) with indexed elements; index 0 is the identity.
/// Immutable once constructed.
class MatrixGroup {
 public:
  MatrixGroup(std::shared_ptr<const Ring> ring, std::string name, std::vector<std::uint64_t> keys,
              std::vector<std::uint64_t> generator_keys, std::optional<std::vector<std::uint32_t>> class_of = {});

  const std::string& name() const { return name_; }
  const Ring& ring() const { return *ring_; }
  std::shared_ptr<const Ring> ring_ptr() const { return ring_; }
  const MatOps& ops() const { return ops_; }

  std::uint32_t size() const { return static_cast<std::uint32_t>(keys_.size()); }
  std::uint64_t key(std::uint32_t i) const { return keys_[i]; }
  const std::vector<std::uint64_t>& keys() const { return keys_; }
  Mat2 mat(std::uint32_t i) const { return ops_.unpack(keys_[i]); }
  std::int64_t index_of(const Mat2& m) const { return index_of_key(ops_.pack(m)); }
  std::int64_t index_of_key(std::uint64_t key) const;
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inv(std::uint32_t i) const;
  Code det(std::uint32_t i) const { return ops_.det(mat(i)); }
  std::uint32_t element_order(std::uint32_t i) const;

  const std::vector<std::uint32_t>& generators() const { return gens_; }
  const ConjugacyData& classes() const { return classes_; }
  std::uint32_t class_of(std::uint32_t i) const { return classes_.class_of[i]; }
  /// Elements of each class, in increasing index order.
  std::vector<std::vector<std::uint32_t>> class_members() const;

  /// Size of the subgroup generated by generators() (orbit closure of the identity).
  std::uint64_t generated_order() const;

 private:
  void compute_classes();

  std::shared_ptr<const Ring> ring_;
  std::string name_;
  MatOps ops_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::int32_t> dense_index_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_index_;
  std::vector<std::uint32_t> gens_;
  ConjugacyData classes_;
};

using GroupPtr = std::shared_ptr<const MatrixGroup>;

/// Enumerate GL_2(O_r) or SL_2(O_r); throws SizeBoundExceeded above `bound`.
GroupPtr enumerate_group(std::shared_ptr<const Ring> ring, Flavor flavor, std::uint64_t bound = kDefaultGroupBound);
GroupPtr enumerate_group(const GroupSpec& spec, std::uint64_t bound = kDefaultGroupBound);

/// Upper-triangular elements of `group`.
GroupPtr borel_subgroup(const MatrixGroup& group);

/// Subgroup given by explicit member matrices; generators are chosen greedily.
GroupPtr subgroup_from_elements(const MatrixGroup& group, const std::vector<std::uint32_t>& members,
                                const std::string& name);

/// Index map of an inclusion H -> G (every element of H must lie in G).
std::vector<std::uint32_t> inclusion_map(const MatrixGroup& sub, const MatrixGroup& group);

/// Inclusion SL_2(O_r) -> GL_2(O_r).
std::vector<std::uint32_t> sl_embedding(const MatrixGroup& sl, const MatrixGroup& gl);

/// Reduction G_r -> G_{r'} modulo pi^{r'}.
struct GroupHom {
  std::vector<std::uint32_t> image;   // source index -> target index
  std::vector<std::uint32_t> kernel;  // source indices mapping to the identity
};

GroupHom reduction_hom(const MatrixGroup& source, const MatrixGroup& target);
bool is_surjective(const GroupHom& hom, std::uint32_t target_size);

/// Elementary and diagonal generators of GL_2(O_r) / SL_2(O_r).
std::vector<Mat2> standard_generators(const Ring& ring, Flavor flavor);

}  // namespace coxrep
