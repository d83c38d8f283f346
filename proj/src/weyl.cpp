#include "coxrep/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "coxrep/numtheory.hpp"

namespace coxrep {

std::string to_string(CartanType t) {
  switch (t) {
    case CartanType::A: return "A";
    case CartanType::B: return "B";
    case CartanType::C: return "C";
    case CartanType::D: return "D";
  }
  return "?";
}

CartanType parse_cartan_type(const std::string& text) {
  if (text == "A" || text == "a") return CartanType::A;
  if (text == "B" || text == "b") return CartanType::B;
  if (text == "C" || text == "c") return CartanType::C;
  if (text == "D" || text == "d") return CartanType::D;
  throw std::invalid_argument("unknown Cartan type '" + text + "' (expected A|B|C|D)");
}

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  for (int i = 0; i < n; ++i) p.image.push_back(i + 1);
  return p;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  SignedPerm out;
  out.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const int v = o.image[i];
    const int w = image[static_cast<std::size_t>(std::abs(v) - 1)];
    out.image[i] = v > 0 ? w : -w;
  }
  return out;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm out;
  out.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const int v = image[i];
    out.image[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
  }
  return out;
}

bool SignedPerm::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<std::int64_t> SignedPerm::apply(const std::vector<std::int64_t>& v) const {
  std::vector<std::int64_t> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int t = image[i];
    out[static_cast<std::size_t>(std::abs(t) - 1)] += t > 0 ? v[i] : -v[i];
  }
  return out;
}

std::string SignedPerm::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < image.size(); ++i) os << (i ? " " : "") << image[i];
  os << "]";
  return os.str();
}

SignedCycleType cycle_type(const SignedPerm& w) {
  SignedCycleType ct;
  const int n = w.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0, sign = 1, j = i;
    do {
      seen[static_cast<std::size_t>(j)] = true;
      const int t = w.image[static_cast<std::size_t>(j)];
      if (t < 0) sign = -sign;
      j = std::abs(t) - 1;
      ++len;
    } while (j != i);
    (sign > 0 ? ct.positive : ct.negative).push_back(len);
  }
  std::sort(ct.positive.rbegin(), ct.positive.rend());
  std::sort(ct.negative.rbegin(), ct.negative.rend());
  return ct;
}

namespace {

std::vector<std::int64_t> unit(int n, int i, std::int64_t c = 1) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = c;
  return v;
}

std::vector<std::int64_t> combine(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b, std::int64_t s) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

bool is_positive(const std::vector<std::int64_t>& v) {
  for (auto x : v)
    if (x != 0) return x > 0;
  return false;
}

SignedPerm transposition(int n, int i) {
  auto p = SignedPerm::identity(n);
  std::swap(p.image[static_cast<std::size_t>(i)], p.image[static_cast<std::size_t>(i + 1)]);
  return p;
}

}  // namespace

RootSystem::RootSystem(CartanType type, int n) : type_(type), n_(n) {
  const int min_n = type == CartanType::A ? 1 : (type == CartanType::D ? 2 : 1);
  if (n < min_n || n > 8) throw std::invalid_argument("unsupported rank for type " + coxrep::to_string(type));

  std::set<std::vector<std::int64_t>> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        roots.insert(combine(unit(n, i, s), unit(n, j), -s));  // +-(e_i - e_j)
        if (type != CartanType::A) roots.insert(combine(unit(n, i, s), unit(n, j), s));  // +-(e_i + e_j)
      }
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      if (type == CartanType::B) roots.insert(unit(n, i, s));
      if (type == CartanType::C) roots.insert(unit(n, i, 2 * s));
    }
  roots_.assign(roots.begin(), roots.end());
  for (const auto& r : roots_)
    if (is_positive(r)) positive_.push_back(r);

  for (int i = 0; i + 1 < n; ++i) simple_.push_back(transposition(n, i));
  if (type == CartanType::B || type == CartanType::C) {
    auto s = SignedPerm::identity(n);
    s.image[static_cast<std::size_t>(n - 1)] = -n;
    simple_.push_back(s);
  } else if (type == CartanType::D && n >= 2) {
    auto s = transposition(n, n - 2);
    s.image[static_cast<std::size_t>(n - 2)] = -s.image[static_cast<std::size_t>(n - 2)];
    s.image[static_cast<std::size_t>(n - 1)] = -s.image[static_cast<std::size_t>(n - 1)];
    simple_.push_back(s);
  }

  // Closure under the simple reflections.
  std::set<SignedPerm> seen{SignedPerm::identity(n)};
  std::deque<SignedPerm> todo{SignedPerm::identity(n)};
  while (!todo.empty()) {
    const auto x = todo.front();
    todo.pop_front();
    for (const auto& s : simple_) {
      auto y = s * x;
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }
  group_.assign(seen.begin(), seen.end());
}

std::string RootSystem::name() const {
  if (type_ == CartanType::A) return "A" + std::to_string(n_ - 1) + "(GL" + std::to_string(n_) + ")";
  return coxrep::to_string(type_) + std::to_string(n_);
}

std::uint64_t RootSystem::expected_weyl_order() const {
  std::uint64_t f = 1;
  for (int i = 2; i <= n_; ++i) f *= static_cast<std::uint64_t>(i);
  switch (type_) {
    case CartanType::A: return f;
    case CartanType::B:
    case CartanType::C: return f << n_;
    case CartanType::D: return f << (n_ - 1);
  }
  return 0;
}

std::uint64_t RootSystem::expected_positive_roots() const {
  const auto n = static_cast<std::uint64_t>(n_);
  switch (type_) {
    case CartanType::A: return n * (n - 1) / 2;
    case CartanType::B:
    case CartanType::C: return n * n;
    case CartanType::D: return n * (n - 1);
  }
  return 0;
}

SignedPerm RootSystem::coxeter_element() const {
  auto c = SignedPerm::identity(n_);
  for (const auto& s : simple_) c = c * s;
  return c;
}

std::int64_t RootSystem::order(const SignedPerm& w) const {
  std::int64_t k = 1;
  for (auto x = w; !x.is_identity(); x = x * w) ++k;
  return k;
}

std::vector<SignedPerm> RootSystem::twisted_fixed_subgroup(const SignedPerm& w, const SignedPerm& f0) const {
  const auto wf = w * f0;
  std::vector<SignedPerm> out;
  for (const auto& x : group_)
    if (x * wf == wf * x) out.push_back(x);
  return out;
}

std::vector<SignedPerm> RootSystem::twist_classes(const SignedPerm& f0) const {
  const auto f0inv = f0.inverse();
  std::set<SignedPerm> done;
  std::vector<SignedPerm> reps;
  for (const auto& w : group_) {  // group_ is sorted, so the first hit is the least member
    if (done.count(w)) continue;
    reps.push_back(w);
    for (const auto& x : group_) done.insert(x * w * (f0 * x.inverse() * f0inv));
  }
  return reps;
}

FqRanks fq_ranks(const RootSystem& rs, const SignedPerm& w, const SignedPerm& f0, bool semisimple_a) {
  // dim ker(w f0 - 1) on Q^n via exact elimination.
  const auto wf = w * f0;
  const int n = rs.n();
  std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    const auto col = wf.apply(unit(n, j));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)] - (i == j ? 1 : 0);
  }
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int piv = rank;
    while (piv < n && m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(rank)]);
    for (int i = 0; i < n; ++i) {
      if (i == rank) continue;
      const mpq_class f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] / m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
    }
    ++rank;
  }
  FqRanks out{n - rank, n};
  // The sum-zero hyperplane drops the fixed all-ones direction once.
  if (rs.type() == CartanType::A && semisimple_a) {
    out.torus -= 1;
    out.group -= 1;
  }
  return out;
}

FqRanks fq_ranks(const RootSystem& rs, const SignedPerm& w, bool semisimple_a) {
  return fq_ranks(rs, w, SignedPerm::identity(rs.n()), semisimple_a);
}

ConjectureSign conjecture_sign(int rk_t, int rk_g, std::int64_t q, std::int64_t p, const mpz_class& dim,
                               std::int64_t positive_roots) {
  if (dim == 0) throw std::invalid_argument("conjecture sign needs a nonzero dimension");
  ConjectureSign out;
  int k = 0;
  for (std::int64_t x = 1; x < q; x *= p) ++k;
  if (ipow(p, k) != q) throw std::invalid_argument("q is not a power of p");
  mpz_class a = abs(dim), pp = 1;
  long e = 0;
  while (a % p == 0) {
    a /= p;
    pp *= p;
    ++e;
  }
  out.p_part = pp;
  if (positive_roots == 0) {
    out.reason = "no positive roots: log_q|dim|_p / #positive roots is undefined";
    return out;
  }
  const mpq_class frac(mpz_class(e), mpz_class(k * positive_roots));
  out.exponent = mpq_class(rk_t + rk_g) * (1 + frac);
  out.exponent.canonicalize();
  if (out.exponent.get_den() != 1) {
    out.reason = "exponent " + out.exponent.get_str() + " is not an integer";
    return out;
  }
  out.applicable = true;
  const mpz_class num = out.exponent.get_num();
  out.sign = (mpz_class(abs(num)) % 2 == 0) ? 1 : -1;
  return out;
}

mpz_class classical_r1_dim(const RootSystem& rs, const SignedPerm& w, std::int64_t q) {
  const int n = rs.n();
  mpz_class g = 1, qq = static_cast<long>(q);
  auto qpow = [&](int e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
  };
  switch (rs.type()) {
    case CartanType::A:
      for (int i = 1; i <= n; ++i) g *= qpow(i) - 1;
      break;
    case CartanType::B:
    case CartanType::C:
      for (int i = 1; i <= n; ++i) g *= qpow(2 * i) - 1;
      break;
    case CartanType::D:
      g = qpow(n) - 1;
      for (int i = 1; i < n; ++i) g *= qpow(2 * i) - 1;
      break;
  }
  mpz_class t = 1;
  const auto ct = cycle_type(w);
  for (int c : ct.positive) t *= qpow(c) - 1;
  for (int c : ct.negative) t *= qpow(c) + 1;
  if (g % t != 0) throw std::logic_error("torus order does not divide the group order");
  return g / t;
}

namespace {

std::string describe_twist(const SignedPerm& w) {
  const auto ct = cycle_type(w);
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < ct.positive.size(); ++i) os << (i ? "," : "") << ct.positive[i];
  os << ")";
  if (!ct.negative.empty()) {
    os << "-(";
    for (std::size_t i = 0; i < ct.negative.size(); ++i) os << (i ? "," : "") << ct.negative[i];
    os << ")";
  }
  return os.str();
}

std::int64_t prime_of(std::int64_t q) {
  const auto f = prime_factors(q);
  if (f.size() != 1) throw std::invalid_argument("q must be a prime power");
  return f[0];
}

}  // namespace

std::vector<SweepRow> sweep_conjecture(const SweepOptions& options) {
  std::vector<SweepRow> rows;
  for (auto type : options.types)
    for (int n = options.n_min; n <= options.n_max; ++n) {
      const RootSystem rs(type, n);
      std::vector<SignedPerm> twists;
      if (options.coxeter_only)
        twists.push_back(rs.coxeter_element());
      else
        twists = rs.twist_classes();
      for (const auto& w : twists)
        for (auto q : options.qs) {
          SweepRow row;
          row.type = coxrep::to_string(type);
          row.n = n;
          row.twist = describe_twist(w);
          row.q = q;
          row.case_id = rs.name() + "/w=" + row.twist + "/q=" + std::to_string(q);
          row.dim = classical_r1_dim(rs, w, q);
          row.ranks = fq_ranks(rs, w);
          row.positive_roots = static_cast<std::int64_t>(rs.positive_roots().size());
          row.conj = conjecture_sign(row.ranks.torus, row.ranks.group, q, prime_of(q), row.dim, row.positive_roots);
          row.classical_sign = (row.ranks.group - row.ranks.torus) % 2 == 0 ? 1 : -1;
          row.agrees = row.conj.applicable && row.conj.sign == row.classical_sign;
          rows.push_back(std::move(row));
        }
    }
  return rows;
}

std::string sweep_tsv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "case\tdim\tdim_p\texponent\tsign\tclassical_sign\tverdict\n";
  for (const auto& r : rows) {
    os << r.case_id << "\t" << r.dim.get_str() << "\t" << r.conj.p_part.get_str() << "\t"
       << (r.conj.applicable || r.conj.exponent != 0 ? r.conj.exponent.get_str() : "-") << "\t"
       << (r.conj.applicable ? std::to_string(r.conj.sign) : "inapplicable") << "\t" << r.classical_sign << "\t"
       << (!r.conj.applicable ? "inapplicable" : (r.agrees ? "pass" : "fail")) << "\n";
  }
  return os.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["case"] = r.case_id;
    j["type"] = r.type;
    j["n"] = r.n;
    j["twist"] = r.twist;
    j["q"] = r.q;
    j["dim"] = r.dim.get_str();
    j["dim_p"] = r.conj.p_part.get_str();
    j["rk_torus"] = r.ranks.torus;
    j["rk_group"] = r.ranks.group;
    j["positive_roots"] = r.positive_roots;
    j["exponent"] = r.conj.exponent.get_str();
    j["sign"] = r.conj.applicable ? nlohmann::json(r.conj.sign) : nlohmann::json("inapplicable");
    j["classical_sign"] = r.classical_sign;
    j["verdict"] = !r.conj.applicable ? "inapplicable" : (r.agrees ? "pass" : "fail");
    if (!r.conj.applicable) j["reason"] = r.conj.reason;
    arr.push_back(std::move(j));
  }
  return arr.dump(1);
}

}  // namespace coxrep
