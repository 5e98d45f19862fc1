#include "solvable/cli/report.hpp"

#include "solvable/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace solvable::cli {

Json rational_json(const Rational& r) { return to_string(r); }

Json rationals_json(const std::vector<Rational>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(rational_json(r));
    return a;
}

Json poly_json(const Poly& p) {
    Json a = Json::array();
    if (p.is_zero()) return a;
    for (int k = 0; k <= p.degree(); ++k) a.push_back(rational_json(p.coeff(k)));
    return a;
}

Json ratfunc_json(const RatFunc& f) { return {{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void Report::verdict(std::string name, bool pass, Json residual) {
    verdicts.push_back({std::move(name), pass, std::move(residual)});
}

void Report::verdict(std::string name, bool pass, double residual, double tolerance) {
    tolerances[name] = tolerance;
    verdict(std::move(name), pass, Json(residual));
}

bool Report::all_pass() const {
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

Json Report::to_json() const {
    Json vs = Json::array();
    for (const auto& v : verdicts) vs.push_back({{"name", v.name}, {"pass", v.pass}, {"residual", v.residual}});
    Json res = results;
    if (!tolerances.empty()) res["tolerances"] = tolerances;
    return {{"command", command}, {"inputs", inputs}, {"results", res}, {"verdicts", vs}, {"version", kVersion}};
}

namespace {

void write(std::ostringstream& os, const Json& j, int depth) {
    const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                os << (first ? "" : ",\n") << pad << Json(it.key()).dump() << ": ";
                write(os, it.value(), depth + 1);
                first = false;
            }
            os << "\n" << close << "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            os << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                os << (i ? ",\n" : "") << pad;
                write(os, j[i], depth + 1);
            }
            os << "\n" << close << "]";
            return;
        }
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            os << (std::isfinite(v) ? format_double(v) : "null");
            return;
        }
        default:
            os << j.dump();
    }
}

}  // namespace

std::string serialize(const Json& j) {
    std::ostringstream os;
    write(os, j, 0);
    os << "\n";
    return os.str();
}

Csv::Csv(std::vector<std::string> header) : header_(std::move(header)) {}

void Csv::row(std::vector<std::string> fields) {
    if (fields.size() != header_.size()) throw UsageError("CSV row width does not match the header");
    rows_.push_back(std::move(fields));
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string Csv::str() const {
    std::ostringstream os;
    auto line = [&os](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
        os << "\n";
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return os.str();
}

}  // namespace solvable::cli
