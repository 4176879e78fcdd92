#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dimerforge {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "-p" or "p/q". Throws Error(ParseError) on anything else.
Rational parse_rational(std::string_view text);

// "p" when the denominator is one, otherwise "p/q", always canonical.
std::string format_rational(const Rational& value);

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& other) const { return x == other.x && y == other.y; }
    bool operator<(const Point& other) const {
        if (x != other.x) return x < other.x;
        return y < other.y;
    }
};

// Sign of the cross product (b - a) x (c - a).
int orientation(const Point& a, const Point& b, const Point& c);

// True when the closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

// True when p lies on the closed segment [a,b].
bool on_segment(const Point& a, const Point& b, const Point& p);

}  // namespace dimerforge
