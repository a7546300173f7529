#pragma once

#include <vector>

#include "catent/lls.hpp"
#include "catent/sl2z.hpp"
#include "catent/words.hpp"

namespace catent {

/// Entropy of an autoequivalence through its induced matrix: exactly zero
/// when the spectral radius is 1, otherwise log of the exact surd.
class EntropyValue {
public:
    explicit EntropyValue(SpectralRadius radius) : radius_(std::move(radius)) {}

    bool is_zero() const { return radius_.is_one(); }
    double value() const { return radius_.log_value(); }
    const SpectralRadius& radius() const { return radius_; }

    bool operator==(const EntropyValue& rhs) const { return radius_ == rhs.radius_; }

private:
    SpectralRadius radius_;
};

EntropyValue entropy_of_matrix(const Mat2Z& m);
EntropyValue entropy_of_word(const Word& w);

/// An element of Aut(C) |x (Pic(C) x Z[1]): pullback along an automorphism
/// (trivial on numerical classes), twist by a degree-k line bundle, and a
/// shift. Induced matrix is (-1)^shift * ((1,0),(k,1)).
struct StandardDescriptor {
    Int genus;         // >= 0
    Int twist_degree;  // degree k of the line bundle
    Int shift;         // translation [n]
    bool automorphism = false;

    Mat2Z induced_matrix() const;
};

struct StandardEntropy {
    EntropyValue value;
    Mat2Z induced;
};

/// Always zero; the induced matrix is returned for inspection.
/// Throws DomainError for negative genus.
StandardEntropy entropy_of_curve_autoeq(const StandardDescriptor& d);

/// The LLS-period of a trace > 2 matrix read as a type-m sequence; the
/// type-m word of the result evaluates to a conjugate of the input, which
/// is re-checked internally. Throws DomainError when trace <= 2 (negative
/// traces are rejected, not negated).
TypeMSequence type_m_representative(const Mat2Z& m);

/// One induction step of the five-property certificate: the partial
/// matrix after i block pairs and the derived quantities
/// alpha_i = b_i - m_1 a_i, beta_i = d_i - m_1 c_i.
struct TypeMPrefix {
    int index = 0;  // 1-based number of block pairs consumed
    Mat2Z matrix;
    Int alpha;
    Int beta;
    bool a_positive = false;       // (i)   0 < a_i
    bool a_le_c = false;           // (ii)  a_i <= c_i
    bool cf_matches = false;       // (iii) c_i/a_i = [m_{2i}; m_{2i-1},...,m_2]
    bool alpha_in_range = false;   // (iv)  0 <= alpha_i < a_i
    bool beta_in_range = false;    // (v)   0 < beta_i <= c_i

    bool ok() const { return a_positive && a_le_c && cf_matches && alpha_in_range && beta_in_range; }
};

struct TypeMCertificate {
    TypeMSequence m;
    std::vector<TypeMPrefix> prefixes;
    std::vector<Int> lls;   // extraction-order period of the full matrix
    bool lls_matches = false;  // lls == m as tuples

    bool ok() const {
        if (!lls_matches) return false;
        for (const auto& p : prefixes)
            if (!p.ok()) return false;
        return true;
    }
};

/// Checks properties (i)-(v) on every prefix of the block decomposition
/// and the final equality of the LLS-period with m itself.
TypeMCertificate verify_type_m(const TypeMSequence& m);

}  // namespace catent
