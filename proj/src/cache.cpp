#include "coxrep/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <system_error>

namespace coxrep {

namespace {

constexpr char kGroupMagic[4] = {'C', 'X', 'R', 'G'};
constexpr char kTableMagic[4] = {'C', 'X', 'R', 'T'};

// Fixed-width little-endian encoding, independent of the host.
class Writer {
 public:
  explicit Writer(std::ostream& os) : os_(os) {}
  void bytes(const char* p, std::size_t n) { os_.write(p, static_cast<std::streamsize>(n)); }
  void u64(std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    bytes(b, 8);
  }
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void str(const std::string& s) {
    u64(s.size());
    bytes(s.data(), s.size());
  }

 private:
  std::ostream& os_;
};

class Reader {
 public:
  explicit Reader(std::istream& is) : is_(is) {}
  bool bytes(char* p, std::size_t n) { return static_cast<bool>(is_.read(p, static_cast<std::streamsize>(n))); }
  std::uint64_t u64() {
    unsigned char b[8];
    if (!bytes(reinterpret_cast<char*>(b), 8)) throw std::runtime_error("truncated cache file");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{b[i]} << (8 * i);
    return v;
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  std::string str() {
    const auto n = u64();
    if (n > (1u << 20)) throw std::runtime_error("corrupt cache string");
    std::string s(n, '\0');
    if (!bytes(s.data(), n)) throw std::runtime_error("truncated cache file");
    return s;
  }
  bool header(const char (&magic)[4], std::uint32_t version, const std::string& key) {
    char m[4];
    if (!bytes(m, 4) || std::string(m, 4) != std::string(magic, 4)) return false;
    return u64() == version && str() == key;
  }

 private:
  std::istream& is_;
};

template <class Fn>
void write_atomically(const std::filesystem::path& path, Fn&& fill) {
  std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write cache file " + tmp);
    Writer w(os);
    fill(w);
    if (!os) throw std::runtime_error("cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

Cache Cache::from_environment() {
  const char* env = std::getenv("COXREP_CACHE_DIR");
  if (env == nullptr || *env == '\0') return Cache{};
  return Cache{std::filesystem::path(env)};
}

std::filesystem::path Cache::group_path(const GroupSpec& spec) const {
  return dir_.value_or(".") / (spec.key() + ".group.bin");
}

std::filesystem::path Cache::table_path(const GroupSpec& spec) const {
  return dir_.value_or(".") / (spec.key() + ".table.bin");
}

std::optional<GroupPtr> Cache::load_group(const GroupSpec& spec) const {
  if (!enabled()) return std::nullopt;
  std::ifstream is(group_path(spec), std::ios::binary);
  if (!is) return std::nullopt;
  try {
    Reader rd(is);
    if (!rd.header(kGroupMagic, kGroupCacheVersion, spec.key())) return std::nullopt;
    const auto n = rd.u64();
    if (n != spec.expected_order()) return std::nullopt;
    std::vector<std::uint64_t> keys(n);
    for (auto& k : keys) k = rd.u64();
    std::vector<std::uint64_t> gens(rd.u64());
    for (auto& g : gens) g = rd.u64();
    std::vector<std::uint32_t> class_of(n);
    for (auto& c : class_of) c = static_cast<std::uint32_t>(rd.u64());
    const std::string name = rd.str();
    auto ring = make_ring(spec.p, spec.k, spec.r, spec.mode);
    return std::make_shared<const MatrixGroup>(std::move(ring), name, std::move(keys), std::move(gens), std::move(class_of));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Cache::store_group(const GroupSpec& spec, const MatrixGroup& group) const {
  if (!enabled()) return;
  write_atomically(group_path(spec), [&](Writer& w) {
    w.bytes(kGroupMagic, 4);
    w.u64(kGroupCacheVersion);
    w.str(spec.key());
    w.u64(group.size());
    for (auto k : group.keys()) w.u64(k);
    w.u64(group.generators().size());
    for (auto g : group.generators()) w.u64(group.key(g));
    for (auto c : group.classes().class_of) w.u64(c);
    w.str(group.name());
  });
}

std::optional<CharacterTable> Cache::load_table(const GroupSpec& spec, GroupPtr group) const {
  if (!enabled()) return std::nullopt;
  std::ifstream is(table_path(spec), std::ios::binary);
  if (!is) return std::nullopt;
  try {
    Reader rd(is);
    if (!rd.header(kTableMagic, kTableCacheVersion, spec.key())) return std::nullopt;
    if (rd.u64() != group->size()) return std::nullopt;
    const auto classes = rd.u64();
    if (classes != group->classes().count()) return std::nullopt;
    // Class representatives pin the class numbering the values refer to.
    for (std::size_t c = 0; c < classes; ++c)
      if (rd.u64() != group->key(group->classes().reps[c])) return std::nullopt;
    const auto exponent = static_cast<int>(rd.i64());
    const auto prime = rd.u64();
    std::vector<Character> irr(rd.u64());
    for (auto& chi : irr) {
      chi.group = group;
      chi.irreducible = true;
      chi.values.reserve(classes);
      for (std::size_t c = 0; c < classes; ++c) {
        const auto order = static_cast<int>(rd.i64());
        std::vector<std::int64_t> coeffs(rd.u64());
        if (coeffs.size() > 4096) return std::nullopt;
        for (auto& x : coeffs) x = rd.i64();
        chi.values.emplace_back(order, std::move(coeffs));
      }
    }
    return CharacterTable(std::move(group), exponent, prime, std::move(irr));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Cache::store_table(const GroupSpec& spec, const CharacterTable& table) const {
  if (!enabled()) return;
  const MatrixGroup& G = *table.group();
  write_atomically(table_path(spec), [&](Writer& w) {
    w.bytes(kTableMagic, 4);
    w.u64(kTableCacheVersion);
    w.str(spec.key());
    w.u64(G.size());
    w.u64(G.classes().count());
    for (auto rep : G.classes().reps) w.u64(G.key(rep));
    w.i64(table.exponent());
    w.u64(table.dixon_prime());
    w.u64(table.size());
    for (const auto& chi : table.irreducibles())
      for (const auto& v : chi.values) {
        w.i64(v.order());
        w.u64(v.coeffs().size());
        for (auto x : v.coeffs()) w.i64(x);
      }
  });
}

GroupPtr Cache::group(const GroupSpec& spec, std::uint64_t bound) const {
  if (spec.expected_order() > bound)
    throw SizeBoundExceeded(spec.key() + ": order " + std::to_string(spec.expected_order()) + " exceeds bound " +
                            std::to_string(bound));
  if (auto hit = load_group(spec)) return *hit;
  auto g = enumerate_group(spec, bound);
  store_group(spec, *g);
  return g;
}

CharacterTable Cache::table(const GroupSpec& spec, GroupPtr group, std::uint64_t bound) const {
  if (auto hit = load_table(spec, group)) return *hit;
  auto t = character_table(std::move(group), bound);
  store_table(spec, t);
  return t;
}

}  // namespace coxrep
