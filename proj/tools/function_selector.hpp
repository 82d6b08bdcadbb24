#pragma once

#include <optional>
#include <string>

#include "cesaro/analytic_function.hpp"
#include "cesaro/series.hpp"

namespace cesaro::cli {

struct SelectedFunction {
  AnalyticFunction function;
  std::optional<TruncatedSeries> series;  // set for polynomial and series-file selectors
  std::string selector;
};

// Accepts "coordinate" (z1), "log-kernel" (log 1/(1-z1)), "polynomial:<expr>" or a series file path.
SelectedFunction select_function(const std::string& selector, std::size_t n);

// Expressions such as "z1^2*z2 + 0.5*z1 - 2i*z2" or "(1+z1)*(1-z1)"; coordinates are z1..zn.
TruncatedSeries parse_polynomial(const std::string& text, std::size_t n);

}  // namespace cesaro::cli
