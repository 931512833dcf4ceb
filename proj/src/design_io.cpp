#include "eud/design_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eud {

using nlohmann::json;

std::string real_to_string(Real v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.21Lg", v);
    return buf;
}

Real string_to_real(const std::string& s) {
    char* end = nullptr;
    Real v = std::strtold(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw std::invalid_argument("bad number: " + s);
    return v;
}

static Real number_field(const json& j) {
    if (j.is_string()) return string_to_real(j.get<std::string>());
    if (j.is_number()) return (Real)j.get<double>();
    throw std::invalid_argument("expected a numeric string");
}

WeightedPointSet parse_design(const std::string& text) {
    json j = json::parse(text);
    WeightedPointSet X;
    X.dimension = j.at("dimension").get<int>();
    for (const auto& row : j.at("points")) {
        std::vector<Real> p;
        for (const auto& v : row) p.push_back(number_field(v));
        X.points.push_back(std::move(p));
    }
    for (const auto& v : j.at("weights")) X.weights.push_back(number_field(v));
    X.validate();
    return X;
}

WeightedPointSet read_design(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_design(ss.str());
}

std::string design_to_json(const WeightedPointSet& X) {
    json j;
    j["dimension"] = X.dimension;
    json pts = json::array();
    for (const auto& p : X.points) {
        json row = json::array();
        for (Real v : p) row.push_back(real_to_string(v));
        pts.push_back(row);
    }
    j["points"] = pts;
    json ws = json::array();
    for (Real w : X.weights) ws.push_back(real_to_string(w));
    j["weights"] = ws;
    return j.dump(2) + "\n";
}

void write_design(const WeightedPointSet& X, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << design_to_json(X);
}

}  // namespace eud
