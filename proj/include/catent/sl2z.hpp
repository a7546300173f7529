#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "catent/errors.hpp"
#include "catent/numeric.hpp"

namespace catent {

/// A 2x2 integer matrix ((a,b),(c,d)) of determinant 1, entries of
/// arbitrary precision. Immutable after construction; construction with
/// determinant != 1 throws DeterminantError.
class Mat2Z {
public:
    Mat2Z() : a_(1), b_(0), c_(0), d_(1) {}
    Mat2Z(Int a, Int b, Int c, Int d);

    static const Mat2Z& identity();
    /// Induced matrix of the Fourier-Mukai transform S: ((0,1),(-1,0)).
    static const Mat2Z& gen_s();
    /// Induced matrix of the degree-one twist T: ((1,0),(1,1)).
    static const Mat2Z& gen_t();

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    Int trace() const { return a_ + d_; }

    Mat2Z operator*(const Mat2Z& rhs) const;
    Mat2Z operator-() const { return Mat2Z(-a_, -b_, -c_, -d_); }
    bool operator==(const Mat2Z& rhs) const = default;

    /// Row-major "a,b,c,d".
    std::string str() const;
    /// Parses "a,b,c,d" (optional whitespace, optional signs).
    static Mat2Z parse(std::string_view text);

private:
    Int a_, b_, c_, d_;
};

inline Mat2Z compose(const Mat2Z& lhs, const Mat2Z& rhs) { return lhs * rhs; }

/// ((d,-b),(-c,a)); exact since det = 1.
Mat2Z inverse(const Mat2Z& m);

/// A^n by binary exponentiation; negative n goes through the inverse.
Mat2Z power(const Mat2Z& m, Int n);

/// M * A * M^-1.
Mat2Z conjugate(const Mat2Z& a, const Mat2Z& m);

/// 0 < a <= c < d.
bool is_reduced(const Mat2Z& m);

inline bool is_hyperbolic(const Mat2Z& m) { return boost::multiprecision::abs(m.trace()) > 2; }

/// The largest absolute eigenvalue of a determinant-1 matrix, kept exact
/// as a function of the trace: 1 when |t| <= 2, else (|t| + sqrt(t^2-4))/2.
class SpectralRadius {
public:
    explicit SpectralRadius(Int trace) : trace_(std::move(trace)) {}

    const Int& trace() const { return trace_; }
    bool is_one() const { return boost::multiprecision::abs(trace_) <= 2; }
    Int discriminant() const { return trace_ * trace_ - 4; }

    /// Floating view of the surd; may overflow to +inf for gigantic traces.
    double value() const;
    /// log of value(); exact 0 when the radius is 1.
    double log_value() const;

    /// Exact equality of the algebraic values: the surd is strictly
    /// increasing in |trace|, so equal values means equal |trace| (or both 1).
    bool operator==(const SpectralRadius& rhs) const {
        using boost::multiprecision::abs;
        if (is_one() || rhs.is_one()) return is_one() && rhs.is_one();
        return abs(trace_) == abs(rhs.trace_);
    }

private:
    Int trace_;
};

SpectralRadius spectral_radius(const Mat2Z& m);

struct Mat2ZHash {
    std::size_t operator()(const Mat2Z& m) const;
};

}  // namespace catent
