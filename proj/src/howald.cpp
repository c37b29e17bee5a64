#include "mulideal/howald.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "mulideal/errors.hpp"

namespace mulideal {

namespace {

using i128 = __int128;

constexpr std::int64_t kSmall = std::int64_t{1} << 31;
constexpr std::int64_t kBoxCoordLimit = std::int64_t{1} << 20;
constexpr std::uint64_t kMaxBoxPoints = 50'000'000;

bool small(const mpz_class& z) { return z < kSmall && z > -kSmall; }

/// Evaluates c*(w) = min over positive-offset facets of <v, w+1> / (scale*q),
/// with an int128 fast path when every quantity is small.
class EntryThresholds {
 public:
  EntryThresholds(const NewtonPolyhedron& poly, const Rational& scale) : dimension_(poly.dimension()) {
    for (const auto& f : poly.facets()) {
      if (f.is_coordinate()) continue;
      Row row;
      for (const auto& x : f.normal) row.normal.push_back(x.numerator());
      const Rational sq = scale * f.offset;
      row.scaled_offset = sq;
      rows_.push_back(std::move(row));
    }
    fast_ = std::all_of(rows_.begin(), rows_.end(), [](const Row& r) {
      return std::all_of(r.normal.begin(), r.normal.end(), small) && small(r.scaled_offset.numerator()) &&
             small(r.scaled_offset.denominator());
    });
    if (fast_) {
      for (const auto& r : rows_) {
        FastRow fr;
        for (const auto& x : r.normal) fr.normal.push_back(to_int64(x));
        fr.num = to_int64(r.scaled_offset.numerator());
        fr.den = to_int64(r.scaled_offset.denominator());
        fast_rows_.push_back(std::move(fr));
      }
    }
  }

  bool has_positive_facets() const { return !rows_.empty(); }

  /// Upper bound on coordinate i of any minimal generator of the ideal at coefficient c.
  std::int64_t coordinate_bound(std::size_t i, const Rational& c) const {
    std::optional<Rational> best;
    for (const auto& r : rows_) {
      if (r.normal[i] <= 0) continue;
      Rational b = c * r.scaled_offset / Rational(r.normal[i], mpz_class(1));
      if (!best || b > *best) best = b;
    }
    if (!best) return 0;
    const mpz_class bound = best->floor() + 1;
    if (bound >= kBoxCoordLimit) throw InputError("enumeration box is too large");
    return to_int64(bound);
  }

  Rational at(std::span<const std::int64_t> w) const {
    if (fast_ && within_box_limit(w)) {
      const auto [num, den] = fast_min(w);
      return Rational(Rational(to_mpz(num), mpz_class(1)) / Rational(to_mpz(den), mpz_class(1)));
    }
    std::optional<Rational> best;
    for (const auto& r : rows_) {
      Rational value = dot_plus_one(r.normal, w) / r.scaled_offset;
      if (!best || value < *best) best = std::move(value);
    }
    return *best;
  }

  /// c*(w) > c, i.e. w + 1 lies in int(c * scale * P).
  bool exceeds(std::span<const std::int64_t> w, const Rational& c) const {
    if (rows_.empty()) return true;
    if (fast_ && within_box_limit(w) && fits_int64(c.numerator()) && c.denominator() < (std::int64_t{1} << 40)) {
      const auto [num, den] = fast_min(w);
      return num * static_cast<i128>(to_int64(c.denominator())) >
             static_cast<i128>(to_int64(c.numerator())) * den;
    }
    return at(w) > c;
  }

 private:
  struct Row {
    std::vector<mpz_class> normal;
    Rational scaled_offset;
  };
  struct FastRow {
    std::vector<std::int64_t> normal;
    std::int64_t num = 0;  // scaled offset numerator
    std::int64_t den = 1;
  };

  static mpz_class to_mpz(i128 x) {
    const bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
    mpz_class out = 0;
    mpz_class shift = 1;
    while (u != 0) {
      out += shift * static_cast<unsigned long>(u & 0xffffffffU);
      shift <<= 32;
      u >>= 32;
    }
    return neg ? mpz_class(-out) : out;
  }

  static bool within_box_limit(std::span<const std::int64_t> w) {
    return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x < kBoxCoordLimit; });
  }

  static Rational dot_plus_one(const std::vector<mpz_class>& normal, std::span<const std::int64_t> w) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * static_cast<long>(w[i] + 1);
    return Rational(s, mpz_class(1));
  }

  /// Minimum of <v, w+1> * den / num as the fraction (numerator, denominator).
  std::pair<i128, i128> fast_min(std::span<const std::int64_t> w) const {
    i128 best_num = -1, best_den = 1;
    for (const auto& r : fast_rows_) {
      i128 dot = 0;
      for (std::size_t i = 0; i < dimension_; ++i) dot += static_cast<i128>(r.normal[i]) * (w[i] + 1);
      const i128 num = dot * r.den, den = r.num;
      if (best_num < 0 || num * best_den < best_num * den) {
        best_num = num;
        best_den = den;
      }
    }
    return {best_num, best_den};
  }

  std::size_t dimension_;
  std::vector<Row> rows_;
  std::vector<FastRow> fast_rows_;
  bool fast_ = false;
};

/// Lattice box [0, bound_0] x ... x [0, bound_{d-1}] in mixed-radix order.
class Box {
 public:
  explicit Box(std::vector<std::int64_t> bounds) : bounds_(std::move(bounds)) {
    std::uint64_t n = 1;
    for (auto b : bounds_) {
      n *= static_cast<std::uint64_t>(b + 1);
      if (n > kMaxBoxPoints) throw InputError("enumeration box is too large");
    }
    size_ = n;
  }

  std::size_t size() const { return size_; }
  std::size_t dimension() const { return bounds_.size(); }

  /// Linear index of the predecessor w - e_i; requires w_i > 0.
  std::size_t minus(std::size_t index, std::size_t i) const {
    std::size_t stride = 1;
    for (std::size_t j = 0; j < i; ++j) stride *= static_cast<std::size_t>(bounds_[j] + 1);
    return index - stride;
  }

  void point(std::size_t index, std::vector<std::int64_t>& out) const {
    out.resize(bounds_.size());
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
      const auto radix = static_cast<std::size_t>(bounds_[i] + 1);
      out[i] = static_cast<std::int64_t>(index % radix);
      index /= radix;
    }
  }

 private:
  std::vector<std::int64_t> bounds_;
  std::size_t size_ = 1;
};

Box make_box(const EntryThresholds& thresholds, std::size_t d, const Rational& c) {
  std::vector<std::int64_t> bounds(d);
  for (std::size_t i = 0; i < d; ++i) bounds[i] = thresholds.coordinate_bound(i, c);
  return Box(std::move(bounds));
}

/// Minimal elements of the up-closed set of box points marked in `member`.
MonomialIdeal minimal_members(const Box& box, const std::vector<char>& member) {
  std::vector<ExponentVector> gens;
  std::vector<std::int64_t> w;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    if (!member[idx]) continue;
    box.point(idx, w);
    bool minimal = true;
    for (std::size_t i = 0; i < box.dimension() && minimal; ++i) {
      if (w[i] > 0 && member[box.minus(idx, i)]) minimal = false;
    }
    if (minimal) gens.emplace_back(w);
  }
  return MonomialIdeal::minimalize(box.dimension(), std::move(gens));
}

}  // namespace

MonomialIdeal interior_lattice_ideal(const NewtonPolyhedron& polyhedron, const Rational& scale,
                                     const Rational& c, const Limits& limits) {
  const std::size_t d = polyhedron.dimension();
  if (d > limits.dimension_cap) throw InputError("dimension exceeds the configured cap");
  if (c.sign() < 0) throw InputError("coefficient must be non-negative");
  if (scale.sign() <= 0) throw InputError("polyhedron scale must be positive");
  if (c.sign() == 0) return MonomialIdeal::unit(d);

  EntryThresholds thresholds(polyhedron, scale);
  if (!thresholds.has_positive_facets()) return MonomialIdeal::unit(d);
  const Box box = make_box(thresholds, d, c);
  std::vector<char> member(box.size());
  std::vector<std::int64_t> w;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    box.point(idx, w);
    member[idx] = thresholds.exceeds(w, c) ? 1 : 0;
  }
  return minimal_members(box, member);
}

MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& c, const Limits& limits) {
  if (c.sign() < 0) throw InputError("coefficient must be non-negative");
  if (c.sign() == 0) return MonomialIdeal::unit(a.dimension());
  return interior_lattice_ideal(newton_polyhedron(a, limits), Rational(1), c, limits);
}

MonomialIdeal mixed_multiplier_ideal(const MonomialIdeal& a, const Rational& c, const MonomialIdeal& b,
                                     const Rational& e, const Limits& limits) {
  if (a.dimension() != b.dimension()) throw InputError("dimension mismatch in mixed multiplier ideal");
  if (c.sign() < 0 || e.sign() < 0) throw InputError("coefficients must be non-negative");
  if (c.sign() == 0 && e.sign() == 0) return MonomialIdeal::unit(a.dimension());
  const auto combined = scale_combination(a, c, b, e, limits);
  return interior_lattice_ideal(combined.polyhedron, combined.scale, Rational(1), limits);
}

Rational entry_threshold(const MonomialIdeal& a, const ExponentVector& w, const Limits& limits) {
  if (w.dimension() != a.dimension()) throw InputError("dimension mismatch in entry threshold");
  if (a.is_unit()) throw InputError("entry threshold of the unit ideal is undefined");
  EntryThresholds thresholds(newton_polyhedron(a, limits), Rational(1));
  return thresholds.at(w.coords());
}

Rational lct(const MonomialIdeal& a, const Limits& limits) {
  if (a.is_unit()) throw InputError("log-canonical threshold of the unit ideal is undefined");
  return entry_threshold(a, ExponentVector::zero(a.dimension()), limits);
}

JumpingSequence jumping_numbers(const MonomialIdeal& a, const Rational& bound, const Limits& limits) {
  if (a.is_unit()) throw InputError("jumping numbers of the unit ideal are undefined");
  if (bound.sign() <= 0) throw InputError("bound must be positive");
  const std::size_t d = a.dimension();
  EntryThresholds thresholds(newton_polyhedron(a, limits), Rational(1));

  // Minimal generators of J(a^c) for every c <= bound lie in this box, and the
  // box is down-closed, so minimality inside it is exact.
  const Box box = make_box(thresholds, d, bound);
  std::vector<Rational> table(box.size());
  std::vector<std::int64_t> w;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    box.point(idx, w);
    table[idx] = thresholds.at(w);
  }

  JumpingSequence out{a, bound, {}};
  MonomialIdeal current = MonomialIdeal::unit(d);
  std::vector<char> member(box.size());
  while (true) {
    // c* is monotone in w, so the next jump is attained on a minimal generator.
    std::optional<Rational> next;
    for (const auto& g : current.generators()) {
      const Rational t = thresholds.at(g.coords());
      if (!next || t < *next) next = t;
    }
    if (*next > bound) break;
    for (std::size_t idx = 0; idx < box.size(); ++idx) member[idx] = table[idx] > *next ? 1 : 0;
    current = minimal_members(box, member);
    out.jumps.push_back(Jump{*next, current});
  }
  return out;
}

}  // namespace mulideal
