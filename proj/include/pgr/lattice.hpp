#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "pgr/gain_graph.hpp"

namespace pgr {

using Rational = boost::rational<std::int64_t>;
using Point = std::array<Rational, 2>;

// Parses "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Boost 1.74's mixed rational/integer operator== recurses forever under
// C++20's rewritten comparisons; compare numerators instead.
inline bool is_zero(const Rational& r) { return r.numerator() == 0; }

// Nonsingular homomorphism Z^k -> Q^2, stored as the images of the standard
// generators.
class Lattice {
public:
    // First k columns of the 2x2 identity.
    static Lattice standard(int k);

    Lattice(int k, std::vector<Point> columns);

    int k() const noexcept { return k_; }
    const Point& column(int i) const { return columns_.at(static_cast<std::size_t>(i)); }
    const std::vector<Point>& columns() const noexcept { return columns_; }

    Point apply(const GainVec& gamma) const;

private:
    int k_;
    std::vector<Point> columns_;
};

}  // namespace pgr
