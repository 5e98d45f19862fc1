#pragma once

#include "solvable/poly.hpp"
#include "solvable/ratfunc.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace solvable::cli {

using Json = nlohmann::json;  // std::map objects: keys come out sorted

inline constexpr const char* kVersion = "0.1.0";

Json rational_json(const Rational& r);
Json rationals_json(const std::vector<Rational>& rs);
// Coefficients in ascending degree.
Json poly_json(const Poly& p);
Json ratfunc_json(const RatFunc& f);

// "%.17g"; NaN and infinities become null in JSON.
std::string format_double(double v);

struct Verdict {
    std::string name;
    bool pass = false;
    Json residual;  // "0"-style exact residual string or a double
};

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::vector<Verdict> verdicts;
    Json tolerances = Json::object();  // verdict name -> tolerance, emitted as results.tolerances

    void verdict(std::string name, bool pass, Json residual = nullptr);
    void verdict(std::string name, bool pass, double residual, double tolerance);
    bool all_pass() const;
    Json to_json() const;
};

// Deterministic text: sorted keys, two-space indent, fixed float format.
std::string serialize(const Json& j);

class Csv {
public:
    explicit Csv(std::vector<std::string> header);
    void row(std::vector<std::string> fields);
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string csv_field(const std::string& s);

}  // namespace solvable::cli
