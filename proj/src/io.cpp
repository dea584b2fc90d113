#include "hum/io.hpp"

#include <cstdio>
#include <fstream>

namespace hum::io {

namespace {

double number_field(const Json& j, const std::string& name) {
    if (!j.contains(name) || !j.at(name).is_number()) {
        throw ParseError("missing or non-numeric field \"" + name + "\"");
    }
    return j.at(name).get<double>();
}

int integer_field(const Json& j, const std::string& name) {
    if (!j.contains(name) || !j.at(name).is_number_integer()) {
        throw ParseError("missing or non-integer field \"" + name + "\"");
    }
    return j.at(name).get<int>();
}

Json coefficient_entries(const std::vector<Complex>& coeffs, int first_v) {
    Json entries = Json::array();
    for (int v = first_v; v <= static_cast<int>(coeffs.size()); ++v) {
        const Complex c = coeffs[static_cast<std::size_t>(v - 1)];
        if (c == Complex(0.0, 0.0)) continue;
        entries.push_back({{"v", v}, {"re", c.real()}, {"im", c.imag()}});
    }
    return entries;
}

void read_entries(const Json& j, const std::string& name, int first_v,
                  int degree, std::vector<Complex>& out) {
    if (!j.contains(name)) return;
    if (!j.at(name).is_array()) {
        throw ParseError("field \"" + name + "\" must be an array");
    }
    std::size_t i = 0;
    for (const auto& entry : j.at(name)) {
        const std::string where = name + "[" + std::to_string(i++) + "]";
        if (!entry.is_object()) {
            throw ParseError("entry " + where + " must be an object");
        }
        const int v = integer_field(entry, "v");
        if (v < first_v || v > degree) {
            throw ParseError("entry " + where + " has index v=" +
                             std::to_string(v) + " outside " +
                             std::to_string(first_v) + ".." +
                             std::to_string(degree));
        }
        const double re = number_field(entry, "re");
        const double im = number_field(entry, "im");
        out[static_cast<std::size_t>(v - first_v)] = Complex(re, im);
    }
}

} // namespace

Json series_to_json(const HarmonicSeries& f) {
    Json j;
    j["degree"] = f.degree();
    j["convention"] = f.convention() == Convention::NegativeTHP
                          ? "negative_thp"
                          : "general";
    j["a"] = coefficient_entries(f.a_coefficients(), 2);
    j["b"] = coefficient_entries(f.b_coefficients(), 1);
    return j;
}

HarmonicSeries series_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ParseError("coefficient file must be a JSON object");
    }
    const int degree = integer_field(j, "degree");
    if (degree < 1 || degree > kMaxDegree) {
        throw ParseError("field \"degree\" must lie in 1.." +
                         std::to_string(kMaxDegree));
    }
    if (!j.contains("convention") || !j.at("convention").is_string()) {
        throw ParseError("missing or non-string field \"convention\"");
    }
    const std::string convention_name = j.at("convention").get<std::string>();
    Convention convention;
    if (convention_name == "general") {
        convention = Convention::General;
    } else if (convention_name == "negative_thp") {
        convention = Convention::NegativeTHP;
    } else {
        throw ParseError("field \"convention\" must be \"general\" or "
                         "\"negative_thp\", got \"" + convention_name + "\"");
    }

    std::vector<Complex> a_tail(static_cast<std::size_t>(degree - 1),
                                Complex(0.0, 0.0));
    std::vector<Complex> b(static_cast<std::size_t>(degree), Complex(0.0, 0.0));
    read_entries(j, "a", 2, degree, a_tail);
    read_entries(j, "b", 1, degree, b);
    return HarmonicSeries::make(a_tail, b, convention);
}

HarmonicSeries load_series(const std::string& path) {
    return series_from_json(parse_file(path));
}

void save_series(const std::string& path, const HarmonicSeries& f) {
    write_file(path, series_to_json(f));
}

Json params_to_json(const ClassParams& params) {
    return Json{{"m", params.m}, {"alpha", params.alpha}, {"beta", params.beta}};
}

ClassParams params_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ParseError("parameters must be a JSON object");
    }
    return ClassParams(integer_field(j, "m"), number_field(j, "alpha"),
                       number_field(j, "beta"));
}

Json diagnostics_to_json(const WeightDiagnostics& diag) {
    Json j;
    j["params"] = params_to_json(diag.params);
    j["max_v"] = diag.max_v;
    j["dominates_v"] = diag.dominates_v;
    j["monotone_from_2"] = diag.monotone_from_2;
    j["first_violation_v"] =
        diag.first_violation_v ? Json(*diag.first_violation_v) : Json(nullptr);
    return j;
}

Json grid_to_json(const SampleGrid& grid) {
    return Json{{"radii", grid.radii},
                {"angles_per_radius", grid.angles_per_radius}};
}

Json report_to_json(const ClaimReport& report) {
    Json j;
    j["claim_id"] = claim_name(report.claim_id);
    j["pass"] = report.pass;
    j["extremal_value"] = report.extremal_value;
    j["tolerance"] = report.tolerance;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["skipped_points"] = report.skipped_points;
    if (report.witness_point || report.witness_function) {
        Json witness;
        if (report.witness_point) {
            witness["point"] = Json{{"re", report.witness_point->re},
                                    {"im", report.witness_point->im}};
        }
        if (report.witness_function) {
            witness["function"] = series_to_json(*report.witness_function);
        }
        j["witness"] = witness;
    }
    if (report.diagnostics) {
        j["diagnostics"] = diagnostics_to_json(*report.diagnostics);
    }
    if (report.grid) {
        j["grid"] = grid_to_json(*report.grid);
    }
    if (!report.approach_values.empty()) {
        j["approach_values"] = report.approach_values;
    }
    return j;
}

std::string claim_name(ClaimId id) {
    switch (id) {
    case ClaimId::SufficiencyFunctional: return "SufficiencyFunctional";
    case ClaimId::SensePreserving: return "SensePreserving";
    case ClaimId::Starlike: return "Starlike";
    case ClaimId::Distortion: return "Distortion";
    case ClaimId::ConvexityDisc: return "ConvexityDisc";
    case ClaimId::NeighborhoodStarlike: return "NeighborhoodStarlike";
    case ClaimId::ConvolutionClosure: return "ConvolutionClosure";
    case ClaimId::Necessity: return "Necessity";
    }
    return "Unknown";
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open \"" + path + "\"");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in \"" + path + "\": " + e.what());
    }
}

void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write \"" + path + "\"");
    }
    out << j.dump(2) << '\n';
}

} // namespace hum::io
