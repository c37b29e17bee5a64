#include "mulideal/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mulideal/errors.hpp"

namespace mulideal {

namespace {

void require_same_dimension(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dimension() != b.dimension()) {
    throw InputError("dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                     std::to_string(b.dimension()));
  }
}

}  // namespace

ExponentVector::ExponentVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  for (auto c : coords_) {
    if (c < 0) throw InputError("exponent vectors must be non-negative");
  }
}

ExponentVector ExponentVector::zero(std::size_t dimension) {
  return ExponentVector(std::vector<std::int64_t>(dimension, 0));
}

ExponentVector ExponentVector::unit_vector(std::size_t dimension, std::size_t index) {
  std::vector<std::int64_t> c(dimension, 0);
  c.at(index) = 1;
  return ExponentVector(std::move(c));
}

std::int64_t ExponentVector::degree() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::scaled(std::int64_t factor) const {
  std::vector<std::int64_t> c(coords_);
  for (auto& x : c) x *= factor;
  return ExponentVector(std::move(c));
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
  std::vector<std::int64_t> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(c[i], other.coords_[i]);
  return ExponentVector(std::move(c));
}

ExponentVector ExponentVector::without(std::size_t index) const {
  std::vector<std::int64_t> c(coords_);
  c.erase(c.begin() + static_cast<std::ptrdiff_t>(index));
  return ExponentVector(std::move(c));
}

ExponentVector ExponentVector::with_inserted(std::size_t index, std::int64_t value) const {
  std::vector<std::int64_t> c(coords_);
  c.insert(c.begin() + static_cast<std::ptrdiff_t>(index), value);
  return ExponentVector(std::move(c));
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  std::vector<std::int64_t> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return ExponentVector(std::move(c));
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) { return os << v.to_string(); }

std::strong_ordering graded_lex_compare(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

MonomialIdeal MonomialIdeal::minimalize(std::size_t dimension, std::vector<ExponentVector> raw) {
  if (dimension == 0) throw InputError("dimension must be positive");
  if (raw.empty()) throw InputError("empty generator set (the zero ideal is not supported)");
  for (const auto& v : raw) {
    if (v.dimension() != dimension) {
      throw InputError("generator " + v.to_string() + " does not have dimension " +
                       std::to_string(dimension));
    }
  }
  std::sort(raw.begin(), raw.end(), graded_lex_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  // A divisor has degree <= its multiple, so it is already in `kept`.
  std::vector<ExponentVector> kept;
  for (auto& v : raw) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& g) { return g.divides(v); });
    if (!redundant) kept.push_back(std::move(v));
  }
  return MonomialIdeal(dimension, std::move(kept));
}

MonomialIdeal MonomialIdeal::unit(std::size_t dimension) {
  return minimalize(dimension, {ExponentVector::zero(dimension)});
}

MonomialIdeal MonomialIdeal::maximal(std::size_t dimension) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < dimension; ++i) gens.push_back(ExponentVector::unit_vector(dimension, i));
  return minimalize(dimension, std::move(gens));
}

MonomialIdeal MonomialIdeal::diagonal(std::span<const std::int64_t> exponents) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] <= 0) throw InputError("diagonal exponents must be positive");
    std::vector<std::int64_t> c(exponents.size(), 0);
    c[i] = exponents[i];
    gens.emplace_back(std::move(c));
  }
  return minimalize(exponents.size(), std::move(gens));
}

bool MonomialIdeal::is_unit() const { return generators_.size() == 1 && generators_[0].degree() == 0; }

bool MonomialIdeal::contains(const ExponentVector& w) const {
  if (w.dimension() != dimension_) throw InputError("dimension mismatch in membership test");
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const ExponentVector& g) { return g.divides(w); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_dimension(*this, other);
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const ExponentVector& g) { return contains(g); });
}

std::int64_t MonomialIdeal::order() const {
  std::int64_t best = generators_.front().degree();
  for (const auto& g : generators_) best = std::min(best, g.degree());
  return best;
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : generators_) {
    for (auto c : g.coords()) {
      if (c > 1) return false;
    }
  }
  return true;
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? "," : "") << generators_[i];
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) { return os << ideal.to_string(); }

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dimension(a, b);
  std::vector<ExponentVector> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) raw.push_back(g + h);
  }
  return MonomialIdeal::minimalize(a.dimension(), std::move(raw));
}

MonomialIdeal power(const MonomialIdeal& a, std::int64_t exponent) {
  if (exponent < 0) throw InputError("negative ideal power");
  MonomialIdeal out = MonomialIdeal::unit(a.dimension());
  for (std::int64_t i = 0; i < exponent; ++i) out = product(out, a);
  return out;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dimension(a, b);
  std::vector<ExponentVector> raw(a.generators().begin(), a.generators().end());
  raw.insert(raw.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::minimalize(a.dimension(), std::move(raw));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dimension(a, b);
  std::vector<ExponentVector> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) raw.push_back(g.lcm(h));
  }
  return MonomialIdeal::minimalize(a.dimension(), std::move(raw));
}

MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<ExponentVector> raw;
  for (const auto& g : a.generators()) {
    std::vector<std::int64_t> c(g.coords().begin(), g.coords().end());
    for (auto& x : c) x = std::min<std::int64_t>(x, 1);
    raw.emplace_back(std::move(c));
  }
  return MonomialIdeal::minimalize(a.dimension(), std::move(raw));
}

MonomialIdeal restrict_to_hyperplane(const MonomialIdeal& a, std::size_t index) {
  if (index >= a.dimension()) throw InputError("coordinate index out of range");
  if (a.dimension() == 1) throw InputError("cannot restrict a one-dimensional ideal");
  std::vector<ExponentVector> raw;
  for (const auto& g : a.generators()) {
    if (g[index] == 0) raw.push_back(g.without(index));
  }
  if (raw.empty()) {
    throw InputError("restriction to x" + std::to_string(index + 1) +
                     " = 0 is the zero ideal (ideal is contained in (x" + std::to_string(index + 1) +
                     "))");
  }
  return MonomialIdeal::minimalize(a.dimension() - 1, std::move(raw));
}

}  // namespace mulideal
