#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mulideal {

/// A point of N^d, the exponents of a monomial x^w.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::int64_t> coords);
  ExponentVector(std::initializer_list<std::int64_t> coords)
      : ExponentVector(std::vector<std::int64_t>(coords)) {}

  static ExponentVector zero(std::size_t dimension);
  static ExponentVector unit_vector(std::size_t dimension, std::size_t index);

  std::size_t dimension() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  /// Total degree, the sum of the coordinates.
  std::int64_t degree() const;

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;

  ExponentVector scaled(std::int64_t factor) const;
  /// Componentwise max (the exponent of lcm).
  ExponentVector lcm(const ExponentVector& other) const;
  ExponentVector without(std::size_t index) const;
  ExponentVector with_inserted(std::size_t index, std::int64_t value) const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);

/// Canonical generator order: ascending total degree, ties broken so that
/// x^2 < xy < y^2 (larger leading exponents first).
std::strong_ordering graded_lex_compare(const ExponentVector& a, const ExponentVector& b);

inline bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) {
  return graded_lex_compare(a, b) < 0;
}

/// A nonzero monomial ideal of k[x_1..x_d], held by its minimal generators in
/// canonical order, so equality of ideals is structural equality.
class MonomialIdeal {
 public:
  /// Keeps the divisibility-minimal elements of `raw`.
  /// Throws InputError when `raw` is empty or has a vector of the wrong length.
  static MonomialIdeal minimalize(std::size_t dimension, std::vector<ExponentVector> raw);

  static MonomialIdeal unit(std::size_t dimension);
  static MonomialIdeal maximal(std::size_t dimension);
  /// (x_1^{e_1}, ..., x_d^{e_d}); every exponent must be positive.
  static MonomialIdeal diagonal(std::span<const std::int64_t> exponents);

  std::size_t dimension() const { return dimension_; }
  std::span<const ExponentVector> generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_unit() const;

  bool contains(const ExponentVector& w) const;
  bool contains(const MonomialIdeal& other) const;

  /// Minimum generator degree; 0 for the unit ideal.
  std::int64_t order() const;
  /// Every exponent is 0 or 1.
  bool is_squarefree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  std::string to_string() const;

 private:
  MonomialIdeal(std::size_t dimension, std::vector<ExponentVector> generators)
      : dimension_(dimension), generators_(std::move(generators)) {}

  std::size_t dimension_ = 0;
  std::vector<ExponentVector> generators_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, std::int64_t exponent);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal radical(const MonomialIdeal& a);

/// Sets x_index = 0 (index is 0-based). The result lives in dimension d-1.
/// Throws InputError when every generator involves x_index or d == 1.
MonomialIdeal restrict_to_hyperplane(const MonomialIdeal& a, std::size_t index);

}  // namespace mulideal
