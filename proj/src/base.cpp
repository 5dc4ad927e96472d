#include "tropreal/base.hpp"

#include <cctype>
#include <numeric>
#include <regex>

namespace tropreal {

Rational parse_rational(const std::string& text) {
    static const std::regex pattern(R"(\s*(-?\d+)(\s*/\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw ParseError("malformed rational '" + text + "'");
    Rational q;
    if (m[3].matched) {
        if (m[3].str().find_first_not_of('0') == std::string::npos)
            throw ParseError("zero denominator in '" + text + "'");
        q = Rational(mpz_class(m[1].str()), mpz_class(m[3].str()));
    } else {
        q = Rational(mpz_class(m[1].str()));
    }
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const LatticePoint& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

LatticePoint parse_lattice_point(const std::string& text) {
    static const std::regex pattern(R"(\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw ParseError("malformed lattice point '" + text + "'");
    return {std::stoi(m[1].str()), std::stoi(m[2].str())};
}

IntVec primitive(const IntVec& v) {
    long g = std::gcd(v.x, v.y);
    if (g == 0) throw InternalError("primitive of zero vector");
    return {v.x / g, v.y / g};
}

int side_of(const Point& p, const IntVec& dir, const Point& q) {
    Rational d = dir.x * (q.y - p.y) - dir.y * (q.x - p.x);
    return sgn(d);
}

std::string to_string(const Point& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

std::string to_string(const Z2Pair& e) {
    return "(" + std::to_string(e.first()) + "," + std::to_string(e.second()) + ")";
}

Z2Pair parse_z2pair(const std::string& text) {
    static const std::regex pattern(R"(\s*\(?\s*([01])\s*,\s*([01])\s*\)?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw ParseError("malformed element of Z2^2 '" + text + "'");
    return Z2Pair::of(m[1].str()[0] - '0', m[2].str()[0] - '0');
}

}  // namespace tropreal
