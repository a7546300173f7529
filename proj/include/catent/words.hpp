#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catent/sl2z.hpp"

namespace catent {

/// Generator tokens for autoequivalence words. S and T carry a nonzero
/// exponent, Shift carries the translation amount [n]; Twist0 (a degree-0
/// line bundle twist) and Auto (pullback along a curve automorphism) act
/// trivially on the numerical class and carry no exponent.
enum class TokenKind { S, T, Shift, Twist0, Auto };

struct Token {
    TokenKind kind;
    Int exponent;  // S/T exponent or shift amount; 0 for Twist0/Auto

    bool operator==(const Token&) const = default;
};

/// A word is read left to right; the rightmost token is applied first and
/// the induced matrix is the left-to-right product of token matrices.
struct Word {
    std::vector<Token> tokens;

    bool empty() const { return tokens.empty(); }
    std::size_t size() const { return tokens.size(); }
    bool operator==(const Word&) const = default;
};

/// Grammar (whitespace-separated): "S" | "T" | "[" int "]" | "L0" | "AUT",
/// with an optional "^" int suffix (nonzero) on S and T.
/// Throws ParseError with the 1-based character position on bad input.
Word parse_word(std::string_view text);

/// Canonical printer; exponent 1 is emitted without the "^" suffix.
/// parse_word(print_word(w)) == w.
std::string print_word(const Word& w);

/// Left-to-right product of token matrices:
///   S -> ((0,1),(-1,0)), T -> ((1,0),(1,1)), [n] -> (-I)^n, L0/AUT -> I.
Mat2Z evaluate(const Word& w);

/// Merges adjacent tokens of equal kind, drops Twist0/Auto and zero
/// exponents, reduces S exponents mod 4 and shifts mod 2. Valid only
/// modulo the kernel of the induced action: evaluation is preserved, the
/// functor-level isomorphism class need not be.
Word simplify(const Word& w);

inline Word concat(const Word& lhs, const Word& rhs) {
    Word out = lhs;
    out.tokens.insert(out.tokens.end(), rhs.tokens.begin(), rhs.tokens.end());
    return out;
}

/// Ordered tuple (m_{2n},...,m_1) of positive integers, even length >= 2.
using TypeMSequence = std::vector<Int>;

/// Throws DomainError unless the length is even >= 2 and all entries >= 1.
void validate_type_m(const TypeMSequence& m);

/// The word S^2 T^{m_{2n}} S T^{-m_{2n-1}} S ... T^{m_2} S T^{-m_1} S,
/// with the leading S^2 present exactly when n is odd.
Word type_m_word(const TypeMSequence& m);

/// Parses "m1,m2,..." (entries listed in the stored order m_{2n},...,m_1).
TypeMSequence parse_m_sequence(std::string_view text);
std::string print_m_sequence(const TypeMSequence& m);

}  // namespace catent
