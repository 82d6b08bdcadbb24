#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>

#include "cesaro/series.hpp"
#include "cesaro/types.hpp"

namespace cesaro {

/// A holomorphic function on the ball given by closed-form value and gradient.
///
/// This is the common currency of the norm and criterion code: truncated series,
/// the named closed forms and the test families all convert to it. Contract: the
/// gradient is the holomorphic gradient of value (checked in tests against central
/// differences). Copies share the underlying callables.
class AnalyticFunction {
 public:
  using ValueFn = std::function<Complex(std::span<const Complex>)>;
  using GradientFn = std::function<CVector(std::span<const Complex>)>;

  AnalyticFunction(std::size_t dimension, ValueFn value, GradientFn gradient, std::string name = {});

  static AnalyticFunction from_series(TruncatedSeries series, std::string name = "series");
  static AnalyticFunction constant(std::size_t dimension, Complex c);
  /// z_{j}, 0-based.
  static AnalyticFunction coordinate(std::size_t dimension, std::size_t j = 0);
  /// log 1/(1 - z_{j}), principal branch.
  static AnalyticFunction log_kernel(std::size_t dimension, std::size_t j = 0);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::string& name() const noexcept { return name_; }

  Complex value(std::span<const Complex> z) const { return value_(z); }
  Complex operator()(std::span<const Complex> z) const { return value_(z); }
  CVector gradient(std::span<const Complex> z) const { return gradient_(z); }
  /// Rf(z) = sum_j z_j df/dz_j.
  Complex radial(std::span<const Complex> z) const { return dot(z, gradient_(z)); }

  AnalyticFunction scaled(Complex c) const;
  friend AnalyticFunction operator+(const AnalyticFunction& f, const AnalyticFunction& g);

 private:
  std::size_t dimension_;
  ValueFn value_;
  GradientFn gradient_;
  std::string name_;
};

}  // namespace cesaro
