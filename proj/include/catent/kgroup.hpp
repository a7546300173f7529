#pragma once

#include <map>
#include <string>
#include <vector>

#include "catent/entropy.hpp"
#include "catent/sl2z.hpp"
#include "catent/words.hpp"

namespace catent {

/// A numerical class (rank, degree) in the basis ([O_E], [O_{x0}]).
struct KClass {
    Int rank;
    Int degree;

    bool operator==(const KClass&) const = default;
};

/// Antisymmetric Euler pairing r_v d_w - d_v r_w.
inline Int euler_form(const KClass& v, const KClass& w) {
    return v.rank * w.degree - v.degree * w.rank;
}

/// Matrix action on class coordinates.
inline KClass act(const Mat2Z& m, const KClass& v) {
    return {m.a() * v.rank + m.b() * v.degree, m.c() * v.rank + m.d() * v.degree};
}

/// Classes of the standard split generator O(1) + O(2) (with O(1) of
/// degree 3) and of its dual.
inline const KClass kGeneratorClass{2, 9};
inline const KClass kDualGeneratorClass{2, -9};

struct GrowthRow {
    long long l = 0;
    Int chi_abs;       // |chi_l|, exact
    double estimate;   // (1/l) log|chi_l|
    double rate;       // log|chi_l| - log|chi_{l-1}|, the growth-rate estimator
    double gap;        // |rate - target|
};

/// Numerical witness that the pairing growth rate recovers log(rho).
struct GrowthReport {
    std::vector<GrowthRow> rows;
    double target = 0.0;     // log of the spectral radius of A
    double final_gap = 0.0;  // gap of the last row

    /// "l,chi_abs,estimate,rate,gap" table.
    std::string csv() const;
};

/// chi_l = euler_form(v, A^l w) for l = 1..steps, exact; the report rows
/// carry both the (1/l) log estimate and the one-step growth rate, whose
/// gap against log(rho) is the convergence measure. Throws DomainError if
/// some chi_l vanishes (degenerate class choice), naming the offending l.
GrowthReport growth_sequence(const Mat2Z& a, const KClass& v, const KClass& w, long long steps);

struct QuadrantStep {
    int block = 0;       // 1-based, counted from the right end of the word
    Int t_exponent;      // signed exponent of the T factor in this block
    KClass value;        // class after applying the block
    int sign_rank = 0;   // +1 / -1
    int sign_degree = 0; // +1 / -1
};

struct QuadrantTrace {
    std::vector<QuadrantStep> steps;
    KClass final_class;  // after the global sign from S^2 when n is odd
};

/// Applies the blocks [T^{-m_{2i-1}}S], [T^{m_{2i}}S] right to left to a
/// strictly positive class and records the sign pair after each block.
/// The signs must follow the cycle (+,+) -> (+,-) -> (-,-) -> (-,+) ->
/// (+,+); a deviation throws std::logic_error naming the block, and a
/// non-positive start throws DomainError.
QuadrantTrace quadrant_trace(const TypeMSequence& m, const KClass& v);

/// Sum of dims[l] * exp(-l*t) over the finitely many nonzero entries;
/// at t = 0 this is the total dimension. Negative dimensions are rejected.
double graded_complexity(const std::map<long long, long long>& dims, double t);

}  // namespace catent
