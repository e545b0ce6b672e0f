#pragma once

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "isinglab/errors.hpp"
#include "isinglab/graph.hpp"
#include "isinglab/polynomial.hpp"

namespace isinglab {

using Json = nlohmann::json;

// Coefficients as decimal strings so arbitrary precision survives the trip.
inline Json poly_to_json(const IntegerPolynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.str());
    return arr;
}

inline IntegerPolynomial poly_from_json(const Json& arr) {
    std::vector<BigInt> c;
    for (const auto& v : arr) c.emplace_back(v.get<std::string>());
    return IntegerPolynomial(std::move(c));
}

inline Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.vertex_count();
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    return j;
}

inline std::string format_complex(Complex z) {
    char buf[96];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.15g", z.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
    }
    return buf;
}

inline Json complex_to_json(Complex z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

// "a+bi" with optional parts: "1.5", "-2i", "0.3+0.1i", "i", "-i".
inline Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty complex literal");
    auto parse_part = [](const std::string& t) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        std::size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size()) throw ParseError("bad numeric literal: " + t);
        return v;
    };
    try {
        if (s.back() == 'i' || s.back() == 'I') {
            std::string body = s.substr(0, s.size() - 1);
            // split at the last +/- that is not an exponent sign
            std::size_t split = std::string::npos;
            for (std::size_t i = body.size(); i-- > 1;) {
                if ((body[i] == '+' || body[i] == '-') &&
                    body[i - 1] != 'e' && body[i - 1] != 'E') {
                    split = i;
                    break;
                }
            }
            if (split == std::string::npos) return Complex(0.0, parse_part(body));
            return Complex(parse_part(body.substr(0, split)), parse_part(body.substr(split)));
        }
        return Complex(parse_part(s), 0.0);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad complex literal: " + text);
    } catch (const std::out_of_range&) {
        throw ParseError("complex literal out of range: " + text);
    }
}

// Temp file + rename, so readers never observe partial output.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw Error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return data;
}

}  // namespace isinglab
