#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cesaro/types.hpp"

namespace cesaro {

/// Exponent tuple of a monomial z^alpha in C^n.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}
  MultiIndex(std::initializer_list<unsigned> exponents) : exponents_(exponents) {}

  std::size_t dimension() const noexcept { return exponents_.size(); }
  unsigned operator[](std::size_t j) const { return exponents_[j]; }
  std::span<const unsigned> exponents() const noexcept { return exponents_; }

  /// |alpha| = sum of exponents.
  unsigned order() const noexcept;

  MultiIndex operator+(const MultiIndex& other) const;

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<unsigned> exponents_;
};

/// Sparse truncated power series sum_alpha a_alpha z^alpha on the ball of C^n.
///
/// Canonical form: every stored index has length dimension() and order <= degree_cap(),
/// and no stored coefficient is exactly zero. Values are immutable once built; the
/// arithmetic below returns new series.
class TruncatedSeries {
 public:
  using Terms = std::map<MultiIndex, Complex>;

  TruncatedSeries(std::size_t dimension, unsigned degree_cap);

  static TruncatedSeries constant(std::size_t dimension, Complex c);
  static TruncatedSeries monomial(MultiIndex alpha, Complex c = 1.0);
  /// The coordinate function z_{j} (0-based j).
  static TruncatedSeries coordinate(std::size_t dimension, std::size_t j);

  std::size_t dimension() const noexcept { return dimension_; }
  unsigned degree_cap() const noexcept { return degree_cap_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest order among stored terms (0 for the zero series).
  unsigned degree() const noexcept;

  Complex coefficient(const MultiIndex& alpha) const;
  Complex constant_term() const;

  /// Adds c to the coefficient of z^alpha, dropping the entry if it cancels to zero.
  TruncatedSeries& add_term(const MultiIndex& alpha, Complex c);

  Complex operator()(std::span<const Complex> z) const;

  bool operator==(const TruncatedSeries& other) const = default;

 private:
  std::size_t dimension_;
  unsigned degree_cap_;
  Terms terms_;
};

Complex evaluate(const TruncatedSeries& f, std::span<const Complex> z);

/// Exact coefficient convolution; degree_cap of the result is the sum of the caps.
TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g);

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const TruncatedSeries& f, Complex c);
/// a*f + b*g.
TruncatedSeries linear_combination(Complex a, const TruncatedSeries& f, Complex b,
                                   const TruncatedSeries& g);

/// Drops every term of order > cap. The only operation that discards coefficients.
TruncatedSeries truncate(const TruncatedSeries& f, unsigned cap);

/// Rf = sum_j z_j df/dz_j: the coefficient of z^alpha becomes |alpha| a_alpha.
TruncatedSeries radial_derivative(const TruncatedSeries& f);

/// df/dz_j as a series.
TruncatedSeries partial_derivative(const TruncatedSeries& f, std::size_t j);

/// Holomorphic gradient (df/dz_1, ..., df/dz_n) at z.
CVector gradient_at(const TruncatedSeries& f, std::span<const Complex> z);

/// sum |a_alpha| |z^alpha|: the absolute majorant used to scale relative errors.
double absolute_majorant(const TruncatedSeries& f, std::span<const Complex> z);

/// Largest |coefficient| (0 for the zero series).
double max_abs_coefficient(const TruncatedSeries& f);

/// Largest coefficient-wise |f_alpha - g_alpha| over the union of supports.
double max_coefficient_difference(const TruncatedSeries& f, const TruncatedSeries& g);

/// Random series with `terms` draws of multi-indices of order <= degree and standard
/// complex-normal coefficients; deterministic in (seed, stream).
TruncatedSeries random_series(std::size_t dimension, unsigned degree, std::size_t terms,
                              std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace cesaro
