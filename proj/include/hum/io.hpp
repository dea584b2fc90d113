#ifndef HUM_IO_HPP
#define HUM_IO_HPP

#include <string>

#include <json.hpp>

#include "hum/operator_class.hpp"
#include "hum/series.hpp"
#include "hum/verify.hpp"

namespace hum::io {

/// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

/// Coefficient file object:
///   { "degree": N, "convention": "general"|"negative_thp",
///     "a": [{"v": >=2, "re": x, "im": y}, ...],
///     "b": [{"v": >=1, "re": x, "im": y}, ...] }
/// Omitted indices are zero; only nonzero coefficients are written.
Json series_to_json(const HarmonicSeries& f);
HarmonicSeries series_from_json(const Json& j);

HarmonicSeries load_series(const std::string& path);
void save_series(const std::string& path, const HarmonicSeries& f);

/// { "m": int, "alpha": float, "beta": float }
Json params_to_json(const ClassParams& params);
ClassParams params_from_json(const Json& j);

Json diagnostics_to_json(const WeightDiagnostics& diag);
Json grid_to_json(const SampleGrid& grid);
Json report_to_json(const ClaimReport& report);

std::string claim_name(ClaimId id);

/// Shortest text with 17 significant digits (round-trips exactly).
std::string format_double(double value);

Json parse_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

} // namespace hum::io

#endif
