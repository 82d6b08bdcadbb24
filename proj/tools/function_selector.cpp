#include "function_selector.hpp"

#include <cctype>
#include <cstdlib>

#include "cesaro/errors.hpp"
#include "series_io.hpp"

namespace cesaro::cli {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, std::size_t n) : text_(text), n_(n) {}

  TruncatedSeries parse() {
    auto out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return truncate(out, out.degree());
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("polynomial '" + text_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  TruncatedSeries expression() {
    TruncatedSeries acc(n_, 0);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    for (;;) {
      auto t = term();
      acc = add(acc, negate ? scale(t, -1.0) : t);
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else return acc;
    }
  }

  TruncatedSeries term() {
    auto acc = power();
    while (accept('*')) acc = multiply(acc, power());
    return acc;
  }

  TruncatedSeries power() {
    auto base = factor();
    if (!accept('^')) return base;
    const unsigned k = integer();
    auto out = TruncatedSeries::constant(n_, 1.0);
    for (unsigned i = 0; i < k; ++i) out = multiply(out, base);
    return out;
  }

  unsigned integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    const unsigned long v = std::stoul(text_.substr(start, pos_ - start));
    if (v > 64) fail("exponent too large");
    return static_cast<unsigned>(v);
  }

  TruncatedSeries factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'z') {
      ++pos_;
      const unsigned j = integer();
      if (j < 1 || j > n_) fail("coordinate z" + std::to_string(j) + " outside z1..z" + std::to_string(n_));
      return TruncatedSeries::coordinate(n_, j - 1);
    }
    if (c == 'i') {
      ++pos_;
      return TruncatedSeries::constant(n_, Complex{0.0, 1.0});
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text_.c_str() + pos_;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) fail("malformed number");
      pos_ += static_cast<std::size_t>(end - begin);
      if (pos_ < text_.size() && text_[pos_] == 'i') {
        ++pos_;
        return TruncatedSeries::constant(n_, Complex{0.0, v});
      }
      return TruncatedSeries::constant(n_, Complex{v, 0.0});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

TruncatedSeries parse_polynomial(const std::string& text, std::size_t n) {
  if (n == 0) throw InputError("polynomial: dimension must be >= 1");
  return PolynomialParser(text, n).parse();
}

SelectedFunction select_function(const std::string& selector, std::size_t n) {
  if (selector == "coordinate") return {AnalyticFunction::coordinate(n, 0), TruncatedSeries::coordinate(n, 0), selector};
  if (selector == "log-kernel") return {AnalyticFunction::log_kernel(n, 0), std::nullopt, selector};
  const std::string prefix = "polynomial:";
  if (selector.rfind(prefix, 0) == 0) {
    auto s = parse_polynomial(selector.substr(prefix.size()), n);
    return {AnalyticFunction::from_series(s, selector), s, selector};
  }
  auto s = read_series_file(selector);
  if (s.dimension() != n) {
    throw InputError("series file '" + selector + "' has dimension " + std::to_string(s.dimension()) +
                     " but --n is " + std::to_string(n));
  }
  return {AnalyticFunction::from_series(s, selector), s, selector};
}

}  // namespace cesaro::cli
