#include "pgr/lattice.hpp"

#include <charconv>

#include "pgr/error.hpp"

namespace pgr {

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw Error(ErrorKind::MalformedInput, "not an integer: '" + std::string(s) + "'");
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::MalformedInput, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Lattice Lattice::standard(int k) {
    std::vector<Point> cols;
    for (int i = 0; i < k; ++i) {
        Point p{Rational(0), Rational(0)};
        p[static_cast<std::size_t>(i)] = 1;
        cols.push_back(p);
    }
    return Lattice(k, std::move(cols));
}

Lattice::Lattice(int k, std::vector<Point> columns) : k_(k), columns_(std::move(columns)) {
    if (k < 0 || k > kMaxPeriodicity || static_cast<int>(columns_.size()) != k)
        throw Error(ErrorKind::DimensionMismatch, "lattice needs exactly k columns, k in {0,1,2}");
    if (k == 1 && is_zero(columns_[0][0]) && is_zero(columns_[0][1]))
        throw Error(ErrorKind::MalformedInput, "lattice is singular");
    if (k == 2 && is_zero(columns_[0][0] * columns_[1][1] - columns_[0][1] * columns_[1][0]))
        throw Error(ErrorKind::MalformedInput, "lattice is singular");
}

Point Lattice::apply(const GainVec& gamma) const {
    if (gamma.dim() != k_) throw Error(ErrorKind::DimensionMismatch, "gain arity does not match lattice");
    Point p{Rational(0), Rational(0)};
    for (int i = 0; i < k_; ++i) {
        p[0] += columns_[static_cast<std::size_t>(i)][0] * gamma[i];
        p[1] += columns_[static_cast<std::size_t>(i)][1] * gamma[i];
    }
    return p;
}

}  // namespace pgr
