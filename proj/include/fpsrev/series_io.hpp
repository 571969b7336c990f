#ifndef FPSREV_SERIES_IO_HPP
#define FPSREV_SERIES_IO_HPP

#include "fpsrev/autolab.hpp"
#include "fpsrev/graded_matrix.hpp"
#include "fpsrev/series.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace fpsrev {

// Series text format:
//
//   # comment
//   vars 2
//   degree 4
//   comp 1: 1 0 -> 1
//   comp 1: 0 2 -> 1/2
//   comp 2: 0 1 -> 1
//
// Components are 1-based. Unlisted coefficients are zero.
TruncatedSeriesMap parse_series(std::string_view text);

// Canonical text: header, then lines ordered by component and by the graded
// multi-index order.
std::string emit_series(const TruncatedSeriesMap& f);

// Only the "comp ..." lines of emit_series.
std::string emit_terms(const std::vector<Polynomial>& components);

// Same content for an uncapped polynomial map; the header degree is the map's degree.
std::string emit_polynomial_map(const PolynomialMap& f);

// One record per term: {"component": j, "exponent": [...], "coefficient": "p/q"}.
nlohmann::json terms_to_json(const std::vector<Polynomial>& components);
nlohmann::json series_to_json(const TruncatedSeriesMap& f);

nlohmann::json matrix_to_json(const BlockMatrix& m);

TruncatedSeriesMap read_series_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace fpsrev

#endif
