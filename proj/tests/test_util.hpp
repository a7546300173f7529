#pragma once

#include <random>

#include "catent/entropy.hpp"
#include "catent/kgroup.hpp"
#include "catent/lls.hpp"
#include "catent/sl2z.hpp"
#include "catent/words.hpp"

namespace catent::testutil {

using Rng = std::mt19937_64;

// Random product of `len` factors from {S, T, T^-1}.
inline Mat2Z random_generator_matrix(Rng& rng, int len) {
    std::uniform_int_distribution<int> pick(0, 2);
    Mat2Z acc;
    for (int i = 0; i < len; ++i) {
        switch (pick(rng)) {
            case 0: acc = acc * Mat2Z::gen_s(); break;
            case 1: acc = acc * Mat2Z::gen_t(); break;
            default: acc = acc * inverse(Mat2Z::gen_t()); break;
        }
    }
    return acc;
}

// Random word; with_kernel adds shift/L0/AUT tokens that act trivially
// or by a sign.
inline Word random_word(Rng& rng, int len, bool with_kernel = false) {
    std::uniform_int_distribution<int> kind(0, with_kernel ? 4 : 1);
    std::uniform_int_distribution<int> expo(-4, 4);
    Word w;
    for (int i = 0; i < len; ++i) {
        int e = expo(rng);
        if (e == 0) e = 1;
        switch (kind(rng)) {
            case 0: w.tokens.push_back({TokenKind::S, e}); break;
            case 1: w.tokens.push_back({TokenKind::T, e}); break;
            case 2: w.tokens.push_back({TokenKind::Shift, expo(rng)}); break;
            case 3: w.tokens.push_back({TokenKind::Twist0, 0}); break;
            default: w.tokens.push_back({TokenKind::Auto, 0}); break;
        }
    }
    return w;
}

inline TypeMSequence random_type_m(Rng& rng, int max_pairs, int max_entry) {
    std::uniform_int_distribution<int> pairs(1, max_pairs);
    std::uniform_int_distribution<int> entry(1, max_entry);
    TypeMSequence m;
    const int n = pairs(rng);
    for (int i = 0; i < 2 * n; ++i) m.emplace_back(entry(rng));
    return m;
}

// Random hyperbolic matrix with trace in (2, max_trace]: a small type-m
// matrix scrambled by a random conjugation.
inline Mat2Z random_hyperbolic(Rng& rng, const Int& max_trace, int scramble_len) {
    while (true) {
        Mat2Z seed = evaluate(type_m_word(random_type_m(rng, 3, 4)));
        if (seed.trace() > max_trace) continue;
        return conjugate(seed, random_generator_matrix(rng, scramble_len));
    }
}

}  // namespace catent::testutil
