#include "catent/entropy.hpp"

#include <stdexcept>

#include "catent/errors.hpp"

namespace catent {

EntropyValue entropy_of_matrix(const Mat2Z& m) {
    return EntropyValue(spectral_radius(m));
}

EntropyValue entropy_of_word(const Word& w) {
    return entropy_of_matrix(evaluate(w));
}

Mat2Z StandardDescriptor::induced_matrix() const {
    Mat2Z twist(1, 0, twist_degree, 1);
    return shift % 2 == 0 ? twist : -twist;
}

StandardEntropy entropy_of_curve_autoeq(const StandardDescriptor& d) {
    if (d.genus < 0) throw DomainError("genus must be >= 0, got " + d.genus.str());
    Mat2Z induced = d.induced_matrix();
    return {entropy_of_matrix(induced), induced};
}

TypeMSequence type_m_representative(const Mat2Z& m) {
    if (m.trace() <= 2)
        throw DomainError("type-m representatives exist only for trace > 2, got trace " +
                          m.trace().str());
    TypeMSequence result = lls_period(m).entries();
    if (!is_conjugate(evaluate(type_m_word(result)), m))
        throw std::logic_error("type-m representative failed the conjugacy check");
    return result;
}

namespace {

// Block matrix ((1, m_odd), (m_even, m_odd*m_even + 1)), the product
// [T^{m_even} S][T^{-m_odd} S] with its sign normalized away.
Mat2Z block_matrix(const Int& m_even, const Int& m_odd) {
    return Mat2Z(1, m_odd, m_even, m_odd * m_even + 1);
}

}  // namespace

TypeMCertificate verify_type_m(const TypeMSequence& m) {
    validate_type_m(m);
    const std::size_t n = m.size() / 2;
    const Int& m1 = m.back();

    TypeMCertificate cert;
    cert.m = m;

    Mat2Z partial;  // identity; becomes B_i * ... * B_1
    for (std::size_t i = 1; i <= n; ++i) {
        // B_i uses m_{2i} = m[2n - 2i] and m_{2i-1} = m[2n - 2i + 1]
        const Int& m_even = m[m.size() - 2 * i];
        const Int& m_odd = m[m.size() - 2 * i + 1];
        partial = block_matrix(m_even, m_odd) * partial;

        TypeMPrefix prefix;
        prefix.index = static_cast<int>(i);
        prefix.matrix = partial;
        prefix.alpha = partial.b() - m1 * partial.a();
        prefix.beta = partial.d() - m1 * partial.c();
        prefix.a_positive = partial.a() > 0;
        prefix.a_le_c = partial.a() <= partial.c();
        // (iii): c_i/a_i = [m_{2i}; m_{2i-1}, ..., m_2], the odd-length
        // tail of the sequence stopping before m_1.
        ContinuedFraction cf(m.end() - 2 * i, m.end() - 1);
        prefix.cf_matches = cf_eval(cf) == Rational(partial.c(), partial.a());
        prefix.alpha_in_range = prefix.alpha >= 0 && prefix.alpha < partial.a();
        prefix.beta_in_range = prefix.beta > 0 && prefix.beta <= partial.c();
        cert.prefixes.push_back(std::move(prefix));
    }

    if (is_reduced(partial)) {
        cert.lls = lls_of_reduced(partial).entries();
        cert.lls_matches = cert.lls == m;
    }
    return cert;
}

}  // namespace catent
