#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catent/sl2z.hpp"

namespace catent {

/// Odd-length tuple (a_1,...,a_k) of positive integers representing the
/// continued fraction a_1 + 1/(a_2 + 1/(...)).
using ContinuedFraction = std::vector<Int>;

/// Canonical odd-length continued fraction of p/q (p >= q > 0; reduction
/// by the gcd happens internally). A final Euclidean term a_k >= 2 of an
/// even-length expansion is rewritten as (a_k - 1, 1).
ContinuedFraction cf_odd(const Int& p, const Int& q);

/// Exact value of the continued fraction, in lowest terms.
Rational cf_eval(const ContinuedFraction& cf);

/// Even-length cyclic sequence of positive integers attached to a
/// hyperbolic conjugacy class. Entries are kept in extraction order;
/// comparison and serialization use the canonical rotation, the
/// lexicographically least tuple among rotations by even offsets.
class LLSPeriod {
public:
    explicit LLSPeriod(std::vector<Int> entries);

    /// Entries as extracted (continued fraction order).
    const std::vector<Int>& entries() const { return entries_; }
    /// Lexicographically least even rotation.
    const std::vector<Int>& canonical() const { return canonical_; }
    std::size_t size() const { return entries_.size(); }

    /// Comma-separated canonical rotation, e.g. "1,1,1,1".
    std::string str() const;

    bool operator==(const LLSPeriod& rhs) const { return canonical_ == rhs.canonical_; }

private:
    std::vector<Int> entries_;
    std::vector<Int> canonical_;
};

/// True iff q is a rotation of p by an even offset (lengths must match).
bool cyclic_equal(const LLSPeriod& p, const LLSPeriod& q);

/// Period of a reduced matrix: cf_odd(c, a) extended by floor((d-1)/c).
/// Throws DomainError if the matrix is not reduced (or trace <= 2, which
/// a reduced matrix cannot have).
LLSPeriod lls_of_reduced(const Mat2Z& m);

struct Reduction {
    Mat2Z reduced;
    Mat2Z conjugator;  // reduced == conjugator * input * conjugator^-1
};

inline constexpr int kDefaultReduceDepth = 24;

/// Conjugates a trace > 2 matrix into reduced form. Breadth-first search
/// over conjugating words in {S, T, T^-1} with memoization on visited
/// matrices; an already reduced input returns the identity conjugator,
/// and the a = 0 form ((0,-1),(1,d)) takes the explicit unipotent
/// conjugation. The returned conjugator is re-verified by multiplication.
/// Throws DomainError if trace <= 2, or if the search exhausts max_depth
/// (which signals a bug or an insufficient bound, not impossibility).
Reduction reduce_hyperbolic(const Mat2Z& m, int max_depth = kDefaultReduceDepth);

/// LLS-period of any |trace| > 2 matrix; trace < -2 uses the period of -A.
/// Throws DomainError when |trace| <= 2.
LLSPeriod lls_period(const Mat2Z& m);

/// Complete conjugacy test for trace > 2 matrices: equality of LLS-periods
/// up to even rotation. Throws DomainError outside that regime.
bool is_conjugate(const Mat2Z& a, const Mat2Z& b);

/// Independent conjugacy oracle: breadth-first search over conjugators of
/// word length <= bound over {S, T, T^-1}, deduplicated by matrix value.
/// Returns a witness M with M * a * M^-1 == b, or nullopt.
std::optional<Mat2Z> brute_force_conjugate(const Mat2Z& a, const Mat2Z& b, int bound);

/// All conjugates reachable with conjugator words of length <= bound,
/// each mapped to a shortest witness conjugator. Batch form of the oracle.
std::unordered_map<Mat2Z, Mat2Z, Mat2ZHash> conjugates_within(const Mat2Z& a, int bound);

}  // namespace catent
