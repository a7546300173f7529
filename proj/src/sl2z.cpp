#include "catent/sl2z.hpp"

#include <boost/functional/hash.hpp>

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

namespace catent {

Mat2Z::Mat2Z(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1) {
        std::ostringstream msg;
        msg << "matrix " << a_ << "," << b_ << "," << c_ << "," << d_
            << " has determinant " << (a_ * d_ - b_ * c_) << ", expected 1";
        throw DeterminantError(msg.str());
    }
}

const Mat2Z& Mat2Z::identity() {
    static const Mat2Z id;
    return id;
}

const Mat2Z& Mat2Z::gen_s() {
    static const Mat2Z s(0, 1, -1, 0);
    return s;
}

const Mat2Z& Mat2Z::gen_t() {
    static const Mat2Z t(1, 0, 1, 1);
    return t;
}

Mat2Z Mat2Z::operator*(const Mat2Z& rhs) const {
    return Mat2Z(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                 c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_);
}

std::string Mat2Z::str() const {
    std::ostringstream out;
    out << a_ << "," << b_ << "," << c_ << "," << d_;
    return out.str();
}

namespace {

Int parse_big_int(std::string_view piece, std::size_t position) {
    std::size_t lo = piece.find_first_not_of(" \t");
    std::size_t hi = piece.find_last_not_of(" \t");
    if (lo == std::string_view::npos) throw ParseError("empty matrix entry", position + 1);
    piece = piece.substr(lo, hi - lo + 1);
    bool ok = true;
    for (std::size_t i = 0; i < piece.size(); ++i) {
        if (i == 0 && (piece[i] == '+' || piece[i] == '-') && piece.size() > 1) continue;
        if (!std::isdigit(static_cast<unsigned char>(piece[i]))) ok = false;
    }
    if (!ok) throw ParseError("bad integer '" + std::string(piece) + "' in matrix text", position + 1);
    return int_from_decimal(piece);
}

}  // namespace

Mat2Z Mat2Z::parse(std::string_view text) {
    std::vector<std::pair<std::string_view, std::size_t>> pieces;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        pieces.emplace_back(text.substr(start, comma - start), start);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (pieces.size() != 4)
        throw ParseError("matrix text must have 4 comma-separated entries, got " +
                         std::to_string(pieces.size()));
    std::vector<Int> entries;
    for (const auto& [piece, pos] : pieces) entries.push_back(parse_big_int(piece, pos));
    return Mat2Z(entries[0], entries[1], entries[2], entries[3]);
}

Mat2Z inverse(const Mat2Z& m) {
    return Mat2Z(m.d(), -m.b(), -m.c(), m.a());
}

Mat2Z power(const Mat2Z& m, Int n) {
    Mat2Z base = m;
    if (n < 0) {
        base = inverse(m);
        n = -n;
    }
    Mat2Z acc;  // identity
    while (n > 0) {
        if ((n & 1) != 0) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return acc;
}

Mat2Z conjugate(const Mat2Z& a, const Mat2Z& m) {
    return m * a * inverse(m);
}

bool is_reduced(const Mat2Z& m) {
    return m.a() > 0 && m.a() <= m.c() && m.c() < m.d();
}

double SpectralRadius::value() const {
    if (is_one()) return 1.0;
    const Int t = boost::multiprecision::abs(trace_);
    if (t < (Int(1) << 500)) {
        const double td = t.convert_to<double>();
        return (td + std::sqrt(td * td - 4.0)) / 2.0;
    }
    return std::exp(log_value());
}

double SpectralRadius::log_value() const {
    if (is_one()) return 0.0;
    const Int t = boost::multiprecision::abs(trace_);
    // log((|t| + sqrt(t^2-4))/2) = log|t| + log((1 + sqrt(1 - 4/t^2))/2)
    const double log_t = log_big(t);
    double eps = 0.0;
    if (t < (Int(1) << 500)) {
        const double td = t.convert_to<double>();
        eps = 4.0 / (td * td);
    }
    return log_t + std::log((1.0 + std::sqrt(1.0 - eps)) / 2.0);
}

SpectralRadius spectral_radius(const Mat2Z& m) {
    return SpectralRadius(m.trace());
}

std::size_t Mat2ZHash::operator()(const Mat2Z& m) const {
    std::size_t seed = 0;
    boost::hash_combine(seed, m.a());
    boost::hash_combine(seed, m.b());
    boost::hash_combine(seed, m.c());
    boost::hash_combine(seed, m.d());
    return seed;
}

}  // namespace catent
