#include "series_io.hpp"

#include <fstream>
#include <sstream>

#include "cesaro/errors.hpp"

namespace cesaro::cli {

nlohmann::ordered_json series_to_json(const TruncatedSeries& f) {
  nlohmann::ordered_json doc;
  doc["dimension"] = f.dimension();
  doc["degree_cap"] = f.degree_cap();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [alpha, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["alpha"] = std::vector<unsigned>(alpha.exponents().begin(), alpha.exponents().end());
    t["re"] = c.real();
    t["im"] = c.imag();
    terms.push_back(std::move(t));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

TruncatedSeries series_from_json(const nlohmann::json& doc) {
  try {
    const auto n = doc.at("dimension").get<std::size_t>();
    const auto cap = doc.at("degree_cap").get<unsigned>();
    if (n == 0) throw InputError("series file: dimension must be >= 1");
    TruncatedSeries f(n, cap);
    for (const auto& t : doc.at("terms")) {
      MultiIndex alpha(t.at("alpha").get<std::vector<unsigned>>());
      const double re = t.contains("re") ? t.at("re").get<double>() : 0.0;
      const double im = t.contains("im") ? t.at("im").get<double>() : 0.0;
      if (f.coefficient(alpha) != Complex{0.0, 0.0}) {
        throw InputError("series file: duplicate multi-index in terms");
      }
      f.add_term(alpha, Complex{re, im});
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("series file: ") + e.what());
  }
}

TruncatedSeries read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open series file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("series file '" + path + "' is not valid JSON: " + e.what());
  }
  return series_from_json(doc);
}

void write_series_file(const TruncatedSeries& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write series file '" + path + "'");
  out << series_to_json(f).dump(2) << '\n';
}

}  // namespace cesaro::cli
