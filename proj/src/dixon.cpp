// Dixon-Schneider: central characters as simultaneous eigenvectors of the
// class matrices over F_l, then values lifted to Z[zeta_e] from power maps.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coxrep/chartab.hpp"
#include "coxrep/numtheory.hpp"

namespace coxrep {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

class Field {
 public:
  explicit Field(u64 p) : p_(p) {}
  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p_; }  // p < 2^32
  u64 inv(u64 a) const { return invmod(a, p_); }
  u64 from(std::int64_t x) const {
    const auto m = static_cast<std::int64_t>(p_);
    return static_cast<u64>(((x % m) + m) % m);
  }

 private:
  u64 p_;
};

// Row-reduced basis of a subspace of F_l^n.
struct Subspace {
  Mat rows;
  std::vector<std::size_t> pivots;
  std::size_t dim() const { return rows.size(); }
};

Subspace rref(Mat rows, const Field& F) {
  Subspace out;
  if (rows.empty()) return out;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const u64 s = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 t = rows[i][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(t, rows[r][j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

// Kernel of a square matrix, as a list of vectors.
Mat nullspace(Mat a, const Field& F) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    const u64 s = F.inv(a[r][c]);
    for (auto& x : a[r]) x = F.mul(x, s);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 t = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] = F.sub(a[i][j], F.mul(t, a[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  Mat out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = F.sub(0, a[i][f]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial (low degree first) via Hessenberg form.
Vec charpoly(Mat a, const Field& F) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(a[piv], a[c + 1]);
      for (auto& row : a) std::swap(row[piv], row[c + 1]);
    }
    const u64 inv = F.inv(a[c + 1][c]);
    for (std::size_t r = c + 2; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const u64 t = F.mul(a[r][c], inv);
      for (std::size_t j = 0; j < n; ++j) a[r][j] = F.sub(a[r][j], F.mul(t, a[c + 1][j]));
      for (std::size_t i = 0; i < n; ++i) a[i][c + 1] = F.add(a[i][c + 1], F.mul(t, a[i][r]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec next(m + 1, 0);
    const u64 h = a[m - 1][m - 1];
    for (std::size_t d = 0; d < p[m - 1].size(); ++d) {
      next[d + 1] = F.add(next[d + 1], p[m - 1][d]);
      next[d] = F.sub(next[d], F.mul(h, p[m - 1][d]));
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = F.mul(prod, a[i + 1][i]);
      if (prod == 0) break;
      const u64 coef = F.mul(a[i][m - 1], prod);
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] = F.sub(next[d], F.mul(coef, p[i][d]));
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::vector<u64> roots(const Vec& poly, const Field& F) {
  std::vector<u64> out;
  for (u64 x = 0; x < F.p(); ++x) {
    u64 acc = 0;
    for (std::size_t d = poly.size(); d-- > 0;) acc = F.add(F.mul(acc, x), poly[d]);
    if (acc == 0) out.push_back(x);
    if (out.size() + 1 == poly.size()) break;
  }
  return out;
}

// Class matrix M_i with M_i[j][k] = #{x in C_i : x^{-1} z_k in C_j}.
Mat class_matrix(const MatrixGroup& G, const std::vector<std::uint32_t>& members_i,
                 const std::vector<std::uint32_t>& inverses, const Field& F) {
  const auto& cls = G.classes();
  const std::size_t n = cls.count();
  Mat m(n, Vec(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    const auto z = cls.reps[k];
    for (auto x : members_i) ++m[G.class_of(G.mul(inverses[x], z))][k];
  }
  for (auto& row : m)
    for (auto& v : row) v %= F.p();
  return m;
}

std::vector<Subspace> split(const Subspace& space, const Mat& M, const Field& F) {
  const std::size_t d = space.dim();
  const std::size_t n = M.size();
  Mat a(d, Vec(d, 0));
  for (std::size_t r = 0; r < d; ++r) {
    const Vec& b = space.rows[r];
    for (std::size_t t = 0; t < d; ++t) {
      const std::size_t j = space.pivots[t];
      u64 acc = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (b[k]) acc = F.add(acc, F.mul(M[j][k], b[k]));
      a[t][r] = acc;
    }
  }
  const auto rts = roots(charpoly(a, F), F);
  if (rts.size() == 1) return {space};
  std::vector<Subspace> parts;
  std::size_t total = 0;
  for (auto lambda : rts) {
    Mat shifted = a;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = F.sub(shifted[i][i], lambda);
    Mat full;
    for (const auto& c : nullspace(shifted, F)) {
      Vec v(n, 0);
      for (std::size_t r = 0; r < d; ++r)
        if (c[r])
          for (std::size_t k = 0; k < n; ++k) v[k] = F.add(v[k], F.mul(c[r], space.rows[r][k]));
      full.push_back(std::move(v));
    }
    total += full.size();
    parts.push_back(rref(std::move(full), F));
  }
  if (total != d) throw TableError("class matrix is not diagonalisable over F_" + std::to_string(F.p()));
  return parts;
}

std::int64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > static_cast<std::int64_t>(n)) --r;
  while ((r + 1) * (r + 1) <= static_cast<std::int64_t>(n)) ++r;
  return r;
}

}  // namespace

int group_exponent(const MatrixGroup& group) {
  std::int64_t e = 1;
  for (auto rep : group.classes().reps) e = std::lcm(e, static_cast<std::int64_t>(group.element_order(rep)));
  return static_cast<int>(e);
}

std::uint64_t dixon_prime(int exponent, std::uint64_t order, std::uint64_t search_bound) {
  for (std::uint64_t l = static_cast<std::uint64_t>(exponent) + 1; l <= search_bound; l += static_cast<std::uint64_t>(exponent))
    if (l * l > 4 * order && is_prime(static_cast<std::int64_t>(l))) return l;
  throw TableError("no prime l = 1 mod " + std::to_string(exponent) + " with l > 2 sqrt(" + std::to_string(order) +
                   ") below " + std::to_string(search_bound));
}

CharacterTable character_table(GroupPtr group, std::uint64_t bound) {
  const MatrixGroup& G = *group;
  if (G.size() > bound)
    throw SizeBoundExceeded("group " + G.name() + " of order " + std::to_string(G.size()) +
                            " exceeds the table bound " + std::to_string(bound));
  const auto& cls = G.classes();
  const std::size_t n = cls.count();
  const std::uint64_t order = G.size();
  const int e = group_exponent(G);
  const std::uint64_t ell = dixon_prime(e, order);
  const Field F(ell);

  std::vector<std::uint32_t> inverses(G.size());
  for (std::uint32_t x = 0; x < G.size(); ++x) inverses[x] = G.inv(x);
  const auto members = G.class_members();

  Mat identity(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) identity[i][i] = 1;
  std::vector<Subspace> spaces{rref(identity, F)};
  for (std::size_t i = 1; i < n; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.dim() == 1; })) break;
    const Mat M = class_matrix(G, members[i], inverses, F);
    std::vector<Subspace> next;
    for (const auto& s : spaces) {
      if (s.dim() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split(s, M, F)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != n) throw TableError("eigenspaces did not split into " + std::to_string(n) + " lines");

  std::vector<std::size_t> inverse_class(n);
  for (std::size_t j = 0; j < n; ++j) inverse_class[j] = G.class_of(inverses[cls.reps[j]]);

  // Power maps of the class representatives.
  std::vector<std::vector<std::uint32_t>> power_class(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t g = 0;
    do {
      power_class[j].push_back(G.class_of(g));
      g = G.mul(g, cls.reps[j]);
    } while (g != 0);
  }

  const u64 w_e = powmod(primitive_root(ell), (ell - 1) / static_cast<u64>(e), ell);
  const auto root_d = isqrt(order);

  std::vector<Character> irr;
  irr.reserve(n);
  for (const auto& s : spaces) {
    Vec w = s.rows[0];
    if (w[0] == 0) throw TableError("central character vanishes at the identity");
    const u64 s0 = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, s0);

    u64 denom = 0;
    for (std::size_t j = 0; j < n; ++j)
      denom = F.add(denom, F.mul(F.mul(w[j], w[inverse_class[j]]), F.inv(F.from(static_cast<std::int64_t>(cls.sizes[j])))));
    if (denom == 0) throw TableError("degenerate central character");
    const u64 d2 = F.mul(F.from(static_cast<std::int64_t>(order)), F.inv(denom));
    std::int64_t degree = 0;
    for (std::int64_t d = 1; d <= root_d; ++d)
      if (order % static_cast<u64>(d) == 0 && F.mul(d, d) == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw TableError("no admissible degree for a central character");

    Vec x(n);
    for (std::size_t j = 0; j < n; ++j)
      x[j] = F.mul(F.mul(w[j], F.from(degree)), F.inv(F.from(static_cast<std::int64_t>(cls.sizes[j]))));

    Character chi;
    chi.group = group;
    chi.irreducible = true;
    chi.values.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& pc = power_class[j];
      const std::size_t o = pc.size();
      const u64 w_o = powmod(w_e, static_cast<u64>(e) / o, ell);
      const u64 inv_o = F.inv(F.from(static_cast<std::int64_t>(o)));
      std::vector<std::int64_t> mult(static_cast<std::size_t>(e), 0);
      std::int64_t total = 0;
      for (std::size_t a = 0; a < o; ++a) {
        const u64 step = powmod(w_o, (o - a) % o, ell);  // w_o^{-a}
        u64 acc = 0, cur = 1;
        for (std::size_t m = 0; m < o; ++m) {
          acc = F.add(acc, F.mul(x[pc[m]], cur));
          cur = F.mul(cur, step);
        }
        const auto ma = static_cast<std::int64_t>(F.mul(acc, inv_o));
        if (ma > degree) throw TableError("eigenvalue multiplicity out of range while lifting");
        mult[a * (static_cast<std::size_t>(e) / o)] = ma;
        total += ma;
      }
      if (total != degree) throw TableError("eigenvalue multiplicities do not sum to the degree");
      chi.values.push_back(Cyclo::from_multiplicities(e, mult));
    }
    irr.push_back(std::move(chi));
  }

  std::sort(irr.begin(), irr.end(), [](const Character& a, const Character& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t k = 0; k < a.values.size(); ++k) {
      const int c = Cyclo::compare(a.values[k], b.values[k]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  CharacterTable table(group, e, ell, std::move(irr));
  const auto v = validate_table(table);
  if (!v.ok()) throw TableError("character table of " + G.name() + " failed validation: " + v.detail);
  return table;
}

TableValidation validate_table(const CharacterTable& table) {
  TableValidation out;
  const MatrixGroup& G = *table.group();
  const auto& cls = G.classes();
  const std::size_t n = cls.count();
  const std::size_t m = table.size();
  const auto order = static_cast<std::int64_t>(G.size());
  std::ostringstream detail;

  out.count_matches = (m == n);
  if (!out.count_matches) detail << "irreducible count " << m << " != class count " << n << "; ";

  std::int64_t sq = 0;
  out.degrees_divide_order = true;
  for (const auto& chi : table.irreducibles()) {
    const auto d = chi.degree();
    sq += d * d;
    if (d <= 0 || order % d != 0) out.degrees_divide_order = false;
  }
  out.degree_square_sum = (sq == order);
  if (!out.degree_square_sum) detail << "sum of squared degrees " << sq << " != " << order << "; ";
  if (!out.degrees_divide_order) detail << "a degree does not divide the group order; ";
  if (!out.count_matches) {
    out.detail = detail.str();
    return out;
  }

  // Flat power-basis coefficients at the common order; products accumulate
  // unreduced and are reduced once per entry.
  int L = 1;
  for (const auto& chi : table.irreducibles())
    for (const auto& v : chi.values) L = std::lcm(L, v.order());
  const auto& basis = CycloBasis::get(L);
  const auto deg = static_cast<std::size_t>(basis.degree);
  std::vector<std::int64_t> val(m * n * deg), cval(m * n * deg);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto a = table[i].values[k].lifted(L);
      const auto b = a.conj();
      std::copy(a.coeffs().begin(), a.coeffs().end(), val.begin() + static_cast<std::ptrdiff_t>((i * n + k) * deg));
      std::copy(b.coeffs().begin(), b.coeffs().end(), cval.begin() + static_cast<std::ptrdiff_t>((i * n + k) * deg));
    }
  std::vector<std::int64_t> acc(2 * deg);
  auto accumulate = [&](const std::int64_t* a, const std::int64_t* b, std::int64_t w) {
    for (std::size_t s = 0; s < deg; ++s) {
      if (a[s] == 0) continue;
      const std::int64_t as = a[s] * w;
      for (std::size_t t = 0; t < deg; ++t) acc[s + t] += as * b[t];
    }
  };
  auto acc_equals = [&](std::int64_t expected) {
    const auto red = basis.reduce(acc);
    if (red[0] != expected) return false;
    for (std::size_t s = 1; s < red.size(); ++s)
      if (red[s] != 0) return false;
    return true;
  };

  out.row_orthogonal = true;
  for (std::size_t i = 0; i < m && out.row_orthogonal; ++i)
    for (std::size_t j = i; j < m; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < n; ++k)
        accumulate(&val[(i * n + k) * deg], &cval[(j * n + k) * deg], static_cast<std::int64_t>(cls.sizes[k]));
      if (!acc_equals(i == j ? order : 0)) {
        out.row_orthogonal = false;
        detail << "rows " << i << "," << j << " not orthogonal; ";
        break;
      }
    }

  out.column_orthogonal = true;
  for (std::size_t k = 0; k < n && out.column_orthogonal; ++k)
    for (std::size_t l = k; l < n; ++l) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < m; ++i) accumulate(&val[(i * n + k) * deg], &cval[(i * n + l) * deg], 1);
      if (!acc_equals(k == l ? static_cast<std::int64_t>(cls.centralizer_orders[k]) : 0)) {
        out.column_orthogonal = false;
        detail << "columns " << k << "," << l << " not orthogonal; ";
        break;
      }
    }
  out.detail = detail.str();
  return out;
}

std::string table_to_json(const CharacterTable& table) {
  const MatrixGroup& G = *table.group();
  const auto& cls = G.classes();
  nlohmann::json j;
  j["group"] = G.name();
  j["order"] = G.size();
  j["exponent"] = table.exponent();
  j["dixon_prime"] = table.dixon_prime();
  auto& classes = j["classes"] = nlohmann::json::array();
  for (std::size_t k = 0; k < cls.count(); ++k) {
    const Mat2 m = G.mat(cls.reps[k]);
    classes.push_back({{"rep", {m.a, m.b, m.c, m.d}}, {"size", cls.sizes[k]}, {"centralizer", cls.centralizer_orders[k]}});
  }
  auto& chars = j["characters"] = nlohmann::json::array();
  for (const auto& chi : table.irreducibles()) {
    nlohmann::json c;
    c["degree"] = chi.degree();
    auto& vals = c["values"] = nlohmann::json::array();
    for (const auto& v : chi.values)
      vals.push_back({{"order", v.order()}, {"coeffs", v.coeffs()}, {"text", v.to_string()}});
    chars.push_back(std::move(c));
  }
  return j.dump(1);
}

}  // namespace coxrep
