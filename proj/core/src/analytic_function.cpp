#include "cesaro/analytic_function.hpp"

#include "cesaro/errors.hpp"

namespace cesaro {

AnalyticFunction::AnalyticFunction(std::size_t dimension, ValueFn value, GradientFn gradient, std::string name)
    : dimension_(dimension), value_(std::move(value)), gradient_(std::move(gradient)), name_(std::move(name)) {
  if (dimension_ == 0) throw InputError("analytic function dimension must be >= 1");
  if (!value_ || !gradient_) throw InputError("analytic function needs both value and gradient");
}

AnalyticFunction AnalyticFunction::from_series(TruncatedSeries series, std::string name) {
  auto shared = std::make_shared<const TruncatedSeries>(std::move(series));
  const std::size_t n = shared->dimension();
  return AnalyticFunction(
      n, [shared](std::span<const Complex> z) { return evaluate(*shared, z); },
      [shared](std::span<const Complex> z) { return gradient_at(*shared, z); }, std::move(name));
}

AnalyticFunction AnalyticFunction::constant(std::size_t dimension, Complex c) {
  return AnalyticFunction(
      dimension, [c](std::span<const Complex>) { return c; },
      [dimension](std::span<const Complex>) { return CVector(dimension, Complex{0.0, 0.0}); }, "constant");
}

AnalyticFunction AnalyticFunction::coordinate(std::size_t dimension, std::size_t j) {
  if (j >= dimension) throw InputError("coordinate index out of range");
  return AnalyticFunction(
      dimension, [j](std::span<const Complex> z) { return z[j]; },
      [dimension, j](std::span<const Complex>) {
        CVector g(dimension, Complex{0.0, 0.0});
        g[j] = 1.0;
        return g;
      },
      "coordinate");
}

AnalyticFunction AnalyticFunction::log_kernel(std::size_t dimension, std::size_t j) {
  if (j >= dimension) throw InputError("log-kernel index out of range");
  return AnalyticFunction(
      dimension, [j](std::span<const Complex> z) { return -std::log(Complex{1.0, 0.0} - z[j]); },
      [dimension, j](std::span<const Complex> z) {
        CVector g(dimension, Complex{0.0, 0.0});
        g[j] = Complex{1.0, 0.0} / (Complex{1.0, 0.0} - z[j]);
        return g;
      },
      "log-kernel");
}

AnalyticFunction AnalyticFunction::scaled(Complex c) const {
  auto value = value_;
  auto gradient = gradient_;
  return AnalyticFunction(
      dimension_, [value, c](std::span<const Complex> z) { return c * value(z); },
      [gradient, c](std::span<const Complex> z) {
        CVector g = gradient(z);
        for (auto& v : g) v *= c;
        return g;
      },
      name_);
}

AnalyticFunction operator+(const AnalyticFunction& f, const AnalyticFunction& g) {
  if (f.dimension() != g.dimension()) throw InputError("sum of functions with different dimensions");
  auto fv = f.value_;
  auto gv = g.value_;
  auto fg = f.gradient_;
  auto gg = g.gradient_;
  return AnalyticFunction(
      f.dimension(), [fv, gv](std::span<const Complex> z) { return fv(z) + gv(z); },
      [fg, gg](std::span<const Complex> z) {
        CVector a = fg(z);
        const CVector b = gg(z);
        for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
        return a;
      },
      f.name() + "+" + g.name());
}

}  // namespace cesaro
