#pragma once

#include <string>

#include <json.hpp>

#include "cesaro/series.hpp"

namespace cesaro::cli {

// {"dimension": n, "degree_cap": D, "terms": [{"alpha": [...], "re": x, "im": y}, ...]}
nlohmann::ordered_json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const nlohmann::json& doc);

TruncatedSeries read_series_file(const std::string& path);
void write_series_file(const TruncatedSeries& f, const std::string& path);

}  // namespace cesaro::cli
