#include "cesaro/series.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cesaro/errors.hpp"
#include "cesaro/random.hpp"

namespace cesaro {

unsigned MultiIndex::order() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.dimension() != dimension()) throw InputError("multi-index dimension mismatch");
  std::vector<unsigned> sum(exponents_);
  for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += other.exponents_[j];
  return MultiIndex(std::move(sum));
}

namespace {

void require_same_dimension(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.dimension() != g.dimension()) {
    throw InputError("series dimension mismatch: " + std::to_string(f.dimension()) + " vs " +
                     std::to_string(g.dimension()));
  }
}

void require_point(const TruncatedSeries& f, std::span<const Complex> z) {
  if (z.size() != f.dimension()) {
    throw InputError("point has " + std::to_string(z.size()) + " coordinates, series has dimension " +
                     std::to_string(f.dimension()));
  }
}

// powers[j][e] = z_j^e for e <= cap
std::vector<CVector> power_table(std::span<const Complex> z, unsigned cap) {
  std::vector<CVector> table(z.size(), CVector(cap + 1, Complex{1.0, 0.0}));
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (unsigned e = 1; e <= cap; ++e) table[j][e] = table[j][e - 1] * z[j];
  }
  return table;
}

Complex monomial_value(const MultiIndex& alpha, const std::vector<CVector>& powers) {
  Complex v{1.0, 0.0};
  for (std::size_t j = 0; j < alpha.dimension(); ++j) v *= powers[j][alpha[j]];
  return v;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t dimension, unsigned degree_cap)
    : dimension_(dimension), degree_cap_(degree_cap) {
  if (dimension == 0) throw InputError("series dimension must be >= 1");
}

TruncatedSeries TruncatedSeries::constant(std::size_t dimension, Complex c) {
  TruncatedSeries s(dimension, 0);
  s.add_term(MultiIndex(std::vector<unsigned>(dimension, 0)), c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(MultiIndex alpha, Complex c) {
  TruncatedSeries s(alpha.dimension(), alpha.order());
  s.add_term(alpha, c);
  return s;
}

TruncatedSeries TruncatedSeries::coordinate(std::size_t dimension, std::size_t j) {
  if (j >= dimension) throw InputError("coordinate index out of range");
  std::vector<unsigned> e(dimension, 0);
  e[j] = 1;
  return monomial(MultiIndex(std::move(e)));
}

unsigned TruncatedSeries::degree() const noexcept {
  unsigned d = 0;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.order());
  return d;
}

Complex TruncatedSeries::coefficient(const MultiIndex& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

Complex TruncatedSeries::constant_term() const {
  return coefficient(MultiIndex(std::vector<unsigned>(dimension_, 0)));
}

TruncatedSeries& TruncatedSeries::add_term(const MultiIndex& alpha, Complex c) {
  if (alpha.dimension() != dimension_) throw InputError("multi-index length differs from series dimension");
  if (alpha.order() > degree_cap_) {
    throw InputError("term of order " + std::to_string(alpha.order()) + " exceeds degree cap " +
                     std::to_string(degree_cap_));
  }
  if (c == Complex{0.0, 0.0}) return *this;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
  }
  return *this;
}

Complex TruncatedSeries::operator()(std::span<const Complex> z) const { return evaluate(*this, z); }

Complex evaluate(const TruncatedSeries& f, std::span<const Complex> z) {
  require_point(f, z);
  if (f.is_zero()) return {0.0, 0.0};
  const auto powers = power_table(z, f.degree());
  Complex acc{0.0, 0.0};
  for (const auto& [alpha, c] : f.terms()) acc += c * monomial_value(alpha, powers);
  return acc;
}

TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_dimension(f, g);
  TruncatedSeries out(f.dimension(), f.degree_cap() + g.degree_cap());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) out.add_term(a + b, ca * cb);
  }
  return out;
}

TruncatedSeries linear_combination(Complex a, const TruncatedSeries& f, Complex b,
                                   const TruncatedSeries& g) {
  require_same_dimension(f, g);
  TruncatedSeries out(f.dimension(), std::max(f.degree_cap(), g.degree_cap()));
  for (const auto& [alpha, c] : f.terms()) out.add_term(alpha, a * c);
  for (const auto& [alpha, c] : g.terms()) out.add_term(alpha, b * c);
  return out;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  return linear_combination(1.0, f, 1.0, g);
}

TruncatedSeries scale(const TruncatedSeries& f, Complex c) {
  TruncatedSeries out(f.dimension(), f.degree_cap());
  for (const auto& [alpha, v] : f.terms()) out.add_term(alpha, c * v);
  return out;
}

TruncatedSeries truncate(const TruncatedSeries& f, unsigned cap) {
  TruncatedSeries out(f.dimension(), std::min(cap, f.degree_cap()));
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.order() <= cap) out.add_term(alpha, c);
  }
  return out;
}

TruncatedSeries radial_derivative(const TruncatedSeries& f) {
  TruncatedSeries out(f.dimension(), f.degree_cap());
  for (const auto& [alpha, c] : f.terms()) {
    const unsigned k = alpha.order();
    if (k > 0) out.add_term(alpha, static_cast<double>(k) * c);
  }
  return out;
}

TruncatedSeries partial_derivative(const TruncatedSeries& f, std::size_t j) {
  if (j >= f.dimension()) throw InputError("partial derivative index out of range");
  TruncatedSeries out(f.dimension(), f.degree_cap() == 0 ? 0 : f.degree_cap() - 1);
  for (const auto& [alpha, c] : f.terms()) {
    const unsigned e = alpha[j];
    if (e == 0) continue;
    std::vector<unsigned> lowered(alpha.exponents().begin(), alpha.exponents().end());
    lowered[j] = e - 1;
    out.add_term(MultiIndex(std::move(lowered)), static_cast<double>(e) * c);
  }
  return out;
}

CVector gradient_at(const TruncatedSeries& f, std::span<const Complex> z) {
  require_point(f, z);
  CVector grad(f.dimension(), Complex{0.0, 0.0});
  if (f.is_zero()) return grad;
  const auto powers = power_table(z, f.degree());
  for (const auto& [alpha, c] : f.terms()) {
    for (std::size_t j = 0; j < f.dimension(); ++j) {
      const unsigned e = alpha[j];
      if (e == 0) continue;
      Complex v = c * static_cast<double>(e);
      for (std::size_t k = 0; k < f.dimension(); ++k) v *= powers[k][k == j ? e - 1 : alpha[k]];
      grad[j] += v;
    }
  }
  return grad;
}

double absolute_majorant(const TruncatedSeries& f, std::span<const Complex> z) {
  require_point(f, z);
  double acc = 0.0;
  for (const auto& [alpha, c] : f.terms()) {
    double m = std::abs(c);
    for (std::size_t j = 0; j < alpha.dimension(); ++j) m *= std::pow(std::abs(z[j]), alpha[j]);
    acc += m;
  }
  return acc;
}

double max_abs_coefficient(const TruncatedSeries& f) {
  double m = 0.0;
  for (const auto& [alpha, c] : f.terms()) m = std::max(m, std::abs(c));
  return m;
}

double max_coefficient_difference(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_dimension(f, g);
  double m = 0.0;
  for (const auto& [alpha, c] : f.terms()) m = std::max(m, std::abs(c - g.coefficient(alpha)));
  for (const auto& [alpha, c] : g.terms()) {
    if (f.terms().count(alpha) == 0) m = std::max(m, std::abs(c));
  }
  return m;
}

TruncatedSeries random_series(std::size_t dimension, unsigned degree, std::size_t terms,
                              std::uint64_t seed, std::uint64_t stream) {
  const CounterRng rng(seed, stream);
  TruncatedSeries out(dimension, degree);
  std::uint64_t counter = 0;
  for (std::size_t t = 0; t < terms; ++t) {
    // Order uniform in [0, degree], then split it across coordinates one unit at a time.
    const auto order = static_cast<unsigned>(rng.bits(counter++) % (degree + 1));
    std::vector<unsigned> e(dimension, 0);
    for (unsigned k = 0; k < order; ++k) e[rng.bits(counter++) % dimension] += 1;
    double re = 0.0;
    double im = 0.0;
    rng.normal_pair(1'000'000 + t, re, im);
    out.add_term(MultiIndex(std::move(e)), Complex{re, im} / std::sqrt(2.0));
  }
  return out;
}

}  // namespace cesaro
