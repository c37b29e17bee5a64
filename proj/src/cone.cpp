#include "mulideal/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "mulideal/errors.hpp"

namespace mulideal {

namespace {

/// Set of constraint indices tight at a ray.
class ZeroSet {
 public:
  explicit ZeroSet(std::size_t size = 0) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  ZeroSet operator&(const ZeroSet& o) const {
    ZeroSet out(*this);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= o.words_[w];
    return out;
  }

  bool is_subset_of(const ZeroSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntegerVector coords;
  ZeroSet zeros;
};

mpz_class dot(const IntegerVector& a, const IntegerVector& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Indices of a maximal linearly independent subset of `rows`, chosen greedily.
std::vector<std::size_t> independent_rows(const std::vector<IntegerVector>& rows, std::size_t n) {
  std::vector<std::vector<mpq_class>> basis;  // kept in reduced echelon form
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < rows.size() && chosen.size() < n; ++r) {
    std::vector<mpq_class> v(rows[r].begin(), rows[r].end());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (v[pivots[b]] != 0) {
        const mpq_class f = v[pivots[b]];
        for (std::size_t j = 0; j < n; ++j) v[j] -= f * basis[b][j];
      }
    }
    const auto it = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; });
    if (it == v.end()) continue;
    const std::size_t p = static_cast<std::size_t>(it - v.begin());
    const mpq_class lead = v[p];
    for (auto& x : v) x /= lead;
    for (auto& row : basis) {
      if (row[p] != 0) {
        const mpq_class f = row[p];
        for (std::size_t j = 0; j < n; ++j) row[j] -= f * v[j];
      }
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(r);
  }
  return chosen;
}

/// Columns of the inverse of the square matrix formed by `rows[chosen]`.
std::vector<IntegerVector> inverse_columns(const std::vector<IntegerVector>& rows,
                                           const std::vector<std::size_t>& chosen, std::size_t n) {
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[chosen[i]][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    const mpq_class lead = m[col][col];
    for (auto& x : m[col]) x /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != col && m[i][col] != 0) {
        const mpq_class f = m[i][col];
        for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
      }
    }
  }
  std::vector<IntegerVector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    mpz_class den = 1;
    for (std::size_t i = 0; i < n; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m[i][n + j].get_den_mpz_t());
    IntegerVector c(n);
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class scaled = m[i][n + j] * den;
      c[i] = scaled.get_num();
    }
    cols.push_back(primitive(std::move(c)));
  }
  return cols;
}

}  // namespace

IntegerVector primitive(IntegerVector v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] != 0) {
        const mpq_class f = rows[i][col] / rows[r][col];
        for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
      }
    }
    ++r;
  }
  return r;
}

std::vector<IntegerVector> extreme_rays(const std::vector<IntegerVector>& rows, std::size_t n) {
  for (const auto& row : rows) {
    if (row.size() != n) throw InputError("constraint row has the wrong length");
  }
  const auto chosen = independent_rows(rows, n);
  if (chosen.size() < n) throw InputError("cone is not pointed (constraints do not span)");

  const std::size_t m = rows.size();
  std::vector<bool> processed(m, false);
  for (auto i : chosen) processed[i] = true;

  std::vector<Ray> rays;
  for (auto& coords : inverse_columns(rows, chosen, n)) {
    Ray ray{std::move(coords), ZeroSet(m)};
    for (auto i : chosen) {
      if (dot(rows[i], ray.coords) == 0) ray.zeros.set(i);
    }
    rays.push_back(std::move(ray));
  }

  for (std::size_t k = 0; k < m; ++k) {
    if (processed[k]) continue;
    processed[k] = true;
    const auto& row = rows[k];

    std::vector<mpz_class> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(row, rays[r].coords);
      if (value[r] > 0) pos.push_back(r);
      else if (value[r] < 0) neg.push_back(r);
      else rays[r].zeros.set(k);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] >= 0) next.push_back(rays[r]);
    }
    for (auto p : pos) {
      for (auto q : neg) {
        const ZeroSet common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntegerVector coords(n);
        for (std::size_t j = 0; j < n; ++j) {
          coords[j] = value[p] * rays[q].coords[j] - value[q] * rays[p].coords[j];
        }
        Ray fresh{primitive(std::move(coords)), common};
        fresh.zeros.set(k);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<IntegerVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.coords));
  return out;
}

}  // namespace mulideal
