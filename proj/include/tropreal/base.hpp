#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropreal {

using Rational = mpq_class;

// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

struct LatticePoint {
    int i = 0;
    int j = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

std::string to_string(const LatticePoint& p);
// Accepts "(i,j)" with optional whitespace.
LatticePoint parse_lattice_point(const std::string& text);

struct IntVec {
    long x = 0;
    long y = 0;
    auto operator<=>(const IntVec&) const = default;
    IntVec operator-() const { return {-x, -y}; }
};

inline IntVec operator-(const LatticePoint& a, const LatticePoint& b) {
    return {a.i - b.i, a.j - b.j};
}
inline IntVec operator+(const IntVec& a, const IntVec& b) { return {a.x + b.x, a.y + b.y}; }
inline long det(const IntVec& a, const IntVec& b) { return a.x * b.y - a.y * b.x; }
inline int sign(long v) { return (v > 0) - (v < 0); }
inline IntVec rot90(const IntVec& v) { return {-v.y, v.x}; }
IntVec primitive(const IntVec& v);

struct Point {
    Rational x;
    Rational y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

inline Point operator+(const Point& p, const IntVec& v) { return {p.x + v.x, p.y + v.y}; }
inline Point along(const Point& p, const IntVec& v, const Rational& t) {
    return {p.x + t * v.x, p.y + t * v.y};
}
// Sign of det(dir, q - p): +1 left of the oriented line, -1 right, 0 on it.
int side_of(const Point& p, const IntVec& dir, const Point& q);
std::string to_string(const Point& p);

// Element of Z_2^2. Bit 0 is the first coordinate, bit 1 the second.
struct Z2Pair {
    std::uint8_t bits = 0;

    static Z2Pair of(int e1, int e2) {
        return Z2Pair{static_cast<std::uint8_t>((e1 & 1) | ((e2 & 1) << 1))};
    }
    static Z2Pair of(const IntVec& v) { return of(static_cast<int>(v.x & 1), static_cast<int>(v.y & 1)); }
    static Z2Pair of(const LatticePoint& p) { return of(p.i & 1, p.j & 1); }

    int first() const { return bits & 1; }
    int second() const { return (bits >> 1) & 1; }
    bool zero() const { return bits == 0; }
    Z2Pair operator+(const Z2Pair& o) const { return Z2Pair{static_cast<std::uint8_t>(bits ^ o.bits)}; }
    auto operator<=>(const Z2Pair&) const = default;
};

inline int dot(const Z2Pair& e, const LatticePoint& v) {
    return (e.first() * (v.i & 1) + e.second() * (v.j & 1)) & 1;
}
inline int dot(const Z2Pair& e, const IntVec& v) {
    return (e.first() * static_cast<int>(v.x & 1) + e.second() * static_cast<int>(v.y & 1)) & 1;
}
std::string to_string(const Z2Pair& e);
// Accepts "b,b" or "(b,b)".
Z2Pair parse_z2pair(const std::string& text);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TROPREAL_ERROR(Name)                  \
    class Name : public Error {               \
    public:                                   \
        using Error::Error;                   \
    };

TROPREAL_ERROR(SingularSubdivision)
TROPREAL_ERROR(DegeneratePolygon)
TROPREAL_ERROR(DegreeUnset)
TROPREAL_ERROR(UnknownPoint)
TROPREAL_ERROR(NotAdmissible)
TROPREAL_ERROR(NotDividing)
TROPREAL_ERROR(NotHoneycomb)
TROPREAL_ERROR(UnsupportedConfiguration)
TROPREAL_ERROR(ParallelDirections)
TROPREAL_ERROR(PhasesDiffer)
TROPREAL_ERROR(WrongKind)
TROPREAL_ERROR(PointOnCurve)
TROPREAL_ERROR(NotGenericAfterRetries)
TROPREAL_ERROR(ParseError)
TROPREAL_ERROR(ValidationError)

#undef TROPREAL_ERROR

// Broken internal invariant; never expected on valid input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

}  // namespace tropreal
