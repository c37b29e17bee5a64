#include "mulideal/symbolic.hpp"

#include <algorithm>

#include "mulideal/cone.hpp"
#include "mulideal/errors.hpp"
#include "mulideal/howald.hpp"
#include "mulideal/io.hpp"

namespace mulideal {

namespace {

using Mask = std::uint32_t;

bool covers(Mask set, const std::vector<Mask>& supports) {
  return std::all_of(supports.begin(), supports.end(), [&](Mask s) { return (s & set) != 0; });
}

/// All exponent vectors of degree m supported on `prime`.
std::vector<ExponentVector> degree_monomials(std::size_t d, const std::vector<std::size_t>& prime, std::int64_t m) {
  std::vector<ExponentVector> out;
  std::vector<std::int64_t> c(d, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::int64_t left) -> void {
    if (pos + 1 == prime.size()) {
      c[prime[pos]] = left;
      out.emplace_back(c);
      c[prime[pos]] = 0;
      return;
    }
    for (std::int64_t k = left; k >= 0; --k) {
      c[prime[pos]] = k;
      self(self, pos + 1, left - k);
    }
    c[prime[pos]] = 0;
  };
  rec(rec, 0, m);
  return out;
}

MonomialIdeal prime_power(std::size_t d, const std::vector<std::size_t>& prime, std::int64_t m) {
  return MonomialIdeal::minimalize(d, degree_monomials(d, prime, m));
}

io::Json primes_json(const SquarefreeIdeal& q) {
  io::Json out = io::Json::array();
  for (const auto& p : q.minimal_primes()) {
    io::Json indices = io::Json::array();
    for (auto i : p) indices.push_back(i + 1);
    out.push_back(indices);
  }
  return out;
}

}  // namespace

std::size_t SquarefreeIdeal::pure_codimension() const {
  const std::size_t e = primes_.front().size();
  for (const auto& p : primes_) {
    if (p.size() != e) return 0;
  }
  return e;
}

SquarefreeIdeal analyze(const MonomialIdeal& q, const Limits& limits) {
  const std::size_t d = q.dimension();
  if (!q.is_squarefree()) throw InputError("symbolic powers need a squarefree ideal, got " + q.to_string());
  if (q.is_unit()) throw InputError("the unit ideal has no minimal primes");
  if (d > limits.dimension_cap || d >= 32) throw InputError("dimension exceeds the configured cap");

  std::vector<Mask> supports;
  for (const auto& g : q.generators()) {
    Mask s = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (g[i] != 0) s |= Mask{1} << i;
    }
    supports.push_back(s);
  }
  std::vector<std::vector<std::size_t>> primes;
  for (Mask set = 1; set < (Mask{1} << d); ++set) {
    if (!covers(set, supports)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < d && minimal; ++i) {
      if ((set >> i) & 1U) minimal = !covers(set & ~(Mask{1} << i), supports);
    }
    if (!minimal) continue;
    std::vector<std::size_t> prime;
    for (std::size_t i = 0; i < d; ++i) {
      if ((set >> i) & 1U) prime.push_back(i);
    }
    primes.push_back(std::move(prime));
  }
  std::sort(primes.begin(), primes.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  MonomialIdeal check = prime_power(d, primes.front(), 1);
  for (std::size_t i = 1; i < primes.size(); ++i) check = intersect(check, prime_power(d, primes[i], 1));
  if (check != q) throw std::logic_error("minimal primes do not intersect to the input ideal");
  return SquarefreeIdeal(q, std::move(primes));
}

MonomialIdeal symbolic_power(const SquarefreeIdeal& q, std::int64_t m) {
  if (m < 1) throw InputError("symbolic power exponent must be positive");
  const std::size_t d = q.base().dimension();
  const auto& primes = q.minimal_primes();
  MonomialIdeal out = prime_power(d, primes.front(), m);
  for (std::size_t i = 1; i < primes.size(); ++i) out = intersect(out, prime_power(d, primes[i], m));
  return out;
}

NewtonPolyhedron symbolic_polyhedron(const SquarefreeIdeal& q, const Limits& limits) {
  const std::size_t d = q.base().dimension();
  if (d > limits.dimension_cap) throw InputError("dimension exceeds the configured cap");
  std::vector<bool> singleton(d, false);
  std::vector<Facet> facets;
  for (const auto& p : q.minimal_primes()) {
    Facet f{std::vector<Rational>(d, Rational(0)), Rational(1)};
    for (auto i : p) f.normal[i] = Rational(1);
    facets.push_back(std::move(f));
    if (p.size() == 1) singleton[p.front()] = true;
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (singleton[i]) continue;
    Facet f{std::vector<Rational>(d, Rational(0)), Rational(0)};
    f.normal[i] = Rational(1);
    facets.push_back(std::move(f));
  }

  // Vertices: rays with t > 0 of the homogenized cone {(xi, t) : facet(xi) >= t, xi >= 0, t >= 0}.
  const std::size_t n = d + 1;
  std::vector<IntegerVector> rows;
  for (const auto& f : facets) {
    IntegerVector row(n, 0);
    for (std::size_t i = 0; i < d; ++i) row[i] = f.normal[i].numerator();
    row[d] = -f.offset.numerator();
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i <= d; ++i) {
    IntegerVector row(n, 0);
    row[i] = 1;
    rows.push_back(std::move(row));
  }
  std::vector<RationalPoint> vertices;
  for (const auto& ray : extreme_rays(rows, n)) {
    if (ray[d] <= 0) continue;
    RationalPoint v;
    for (std::size_t i = 0; i < d; ++i) v.emplace_back(ray[i], ray[d]);
    vertices.push_back(std::move(v));
  }
  std::sort(vertices.begin(), vertices.end(), [](const RationalPoint& a, const RationalPoint& b) {
    Rational sa, sb;
    for (const auto& x : a) sa += x;
    for (const auto& x : b) sb += x;
    return sa != sb ? sa < sb : a > b;
  });
  return NewtonPolyhedron(d, std::move(facets), std::move(vertices));
}

MonomialIdeal asymptotic_multiplier_ideal(const SquarefreeIdeal& q, const Rational& c, const Limits& limits) {
  if (c.sign() <= 0) throw InputError("coefficient must be positive");
  return interior_lattice_ideal(symbolic_polyhedron(q, limits), Rational(1), c, limits);
}

CheckReport check_graded_chain(const SquarefreeIdeal& q, std::int64_t l, std::int64_t m, const Limits& limits) {
  if (l < 1 || m < 1) throw InputError("graded chain needs l, m >= 1");
  CheckReport report;
  report.name = "graded-chain";
  report.instance = io::Json{{"q", io::ideal_json(q.base())}, {"l", l}, {"m", m}};
  const auto a_l = symbolic_power(q, l);
  const auto a_lm = symbolic_power(q, l * m);
  const auto j_lm = asymptotic_multiplier_ideal(q, Rational(l * m), limits);
  const auto j_l = asymptotic_multiplier_ideal(q, Rational(l), limits);
  report.add(compare_subset("a_l^m ⊆ a_(lm)", power(a_l, m), a_lm));
  report.add(compare_subset("a_(lm) ⊆ J(a_.^(lm))", a_lm, j_lm), Rational(l * m));
  report.add(compare_subset("J(a_.^(lm)) ⊆ J(a_.^l)^m", j_lm, power(j_l, m)), Rational(l));
  return report;
}

CheckReport check_symbolic_containment(const SquarefreeIdeal& q, std::int64_t m) {
  if (m < 1) throw InputError("exponent must be positive");
  const std::size_t pure = q.pure_codimension();
  const auto e = static_cast<std::int64_t>(pure != 0 ? pure : q.base().dimension());
  CheckReport report;
  report.name = "symbolic";
  report.instance = io::Json{{"q", io::ideal_json(q.base())}, {"m", m}};
  report.notes["minimal_primes"] = primes_json(q);
  report.notes["e"] = e;
  report.notes["pure_codimension"] = pure != 0;

  const auto ordinary = power(q.base(), m);
  report.add(compare_subset("q^(em) ⊆ q^m", symbolic_power(q, e * m), ordinary));
  report.add(compare_subset("q^m ⊆ q^(m)", ordinary, symbolic_power(q, m)));

  // Least monomial showing q^(m) is strictly larger than q^m.
  const auto strict = compare_subset("q^(m) ⊆ q^m", symbolic_power(q, m), ordinary);
  report.notes["strictness_witness"] =
      strict.witness ? io::exponent_json(*strict.witness) : io::Json(nullptr);
  return report;
}

}  // namespace mulideal
