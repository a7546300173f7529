#include "catent/words.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "catent/errors.hpp"

namespace catent {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Token parse_token(std::string_view piece, std::size_t pos) {
    const std::size_t column = pos + 1;  // 1-based for messages
    if (piece == "L0") return {TokenKind::Twist0, 0};
    if (piece == "AUT") return {TokenKind::Auto, 0};
    if (piece.front() == '[') {
        if (piece.back() != ']' || piece.size() < 3)
            throw ParseError("unterminated shift token '" + std::string(piece) + "'", column);
        std::string_view body = piece.substr(1, piece.size() - 2);
        if (!is_integer_literal(body))
            throw ParseError("bad shift amount '" + std::string(body) + "'", column);
        return {TokenKind::Shift, int_from_decimal(body)};
    }
    if (piece[0] == 'S' || piece[0] == 'T') {
        const TokenKind kind = piece[0] == 'S' ? TokenKind::S : TokenKind::T;
        if (piece.size() == 1) return {kind, 1};
        if (piece[1] != '^')
            throw ParseError("unknown token '" + std::string(piece) + "'", column);
        std::string_view body = piece.substr(2);
        if (!is_integer_literal(body))
            throw ParseError("bad exponent '" + std::string(body) + "'", column);
        Int exponent = int_from_decimal(body);
        if (exponent == 0) throw ParseError("zero exponent in '" + std::string(piece) + "'", column);
        return {kind, std::move(exponent)};
    }
    throw ParseError("unknown token '" + std::string(piece) + "'", column);
}

}  // namespace

Word parse_word(std::string_view text) {
    Word word;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        word.tokens.push_back(parse_token(text.substr(start, i - start), start));
    }
    return word;
}

std::string print_word(const Word& w) {
    std::ostringstream out;
    bool first = true;
    for (const Token& tok : w.tokens) {
        if (!first) out << ' ';
        first = false;
        switch (tok.kind) {
            case TokenKind::S:
            case TokenKind::T:
                out << (tok.kind == TokenKind::S ? 'S' : 'T');
                if (tok.exponent != 1) out << '^' << tok.exponent;
                break;
            case TokenKind::Shift:
                out << '[' << tok.exponent << ']';
                break;
            case TokenKind::Twist0:
                out << "L0";
                break;
            case TokenKind::Auto:
                out << "AUT";
                break;
        }
    }
    return out.str();
}

namespace {

// [S]^e for e reduced mod 4; [S]^2 = -I.
Mat2Z s_power(const Int& e) {
    int r = static_cast<int>(e % 4);
    if (r < 0) r += 4;
    switch (r) {
        case 0: return Mat2Z::identity();
        case 1: return Mat2Z::gen_s();
        case 2: return -Mat2Z::identity();
        default: return -Mat2Z::gen_s();
    }
}

Mat2Z token_matrix(const Token& tok) {
    switch (tok.kind) {
        case TokenKind::S: return s_power(tok.exponent);
        case TokenKind::T: return Mat2Z(1, 0, tok.exponent, 1);  // [T]^e
        case TokenKind::Shift: return tok.exponent % 2 == 0 ? Mat2Z::identity() : -Mat2Z::identity();
        case TokenKind::Twist0:
        case TokenKind::Auto: return Mat2Z::identity();
    }
    throw std::logic_error("unreachable token kind");
}

}  // namespace

Mat2Z evaluate(const Word& w) {
    Mat2Z acc;  // identity
    for (const Token& tok : w.tokens) acc = acc * token_matrix(tok);
    return acc;
}

namespace {

// Residue normalization after merging: S mod 4, Shift mod 2, drop zeros
// and the trivially acting kinds. Returns false when the token dies.
bool normalize_token(Token& tok) {
    switch (tok.kind) {
        case TokenKind::Twist0:
        case TokenKind::Auto:
            return false;
        case TokenKind::S:
            tok.exponent %= 4;
            if (tok.exponent < 0) tok.exponent += 4;
            return tok.exponent != 0;
        case TokenKind::Shift:
            tok.exponent %= 2;
            if (tok.exponent < 0) tok.exponent += 2;
            return tok.exponent != 0;
        case TokenKind::T:
            return tok.exponent != 0;
    }
    return false;
}

}  // namespace

Word simplify(const Word& w) {
    std::vector<Token> stack;
    for (Token tok : w.tokens) {
        if (!normalize_token(tok)) continue;
        stack.push_back(std::move(tok));
        // merge backwards as long as the top two agree in kind
        while (stack.size() >= 2 && stack[stack.size() - 2].kind == stack.back().kind) {
            Token merged = stack[stack.size() - 2];
            merged.exponent += stack.back().exponent;
            stack.pop_back();
            stack.pop_back();
            if (normalize_token(merged)) stack.push_back(std::move(merged));
        }
    }
    return Word{std::move(stack)};
}

void validate_type_m(const TypeMSequence& m) {
    if (m.size() < 2 || m.size() % 2 != 0)
        throw DomainError("type-m sequence must have even length >= 2, got length " +
                          std::to_string(m.size()));
    for (const Int& entry : m)
        if (entry < 1) throw DomainError("type-m entries must be positive integers");
}

Word type_m_word(const TypeMSequence& m) {
    validate_type_m(m);
    const std::size_t n = m.size() / 2;
    Word word;
    if (n % 2 == 1) word.tokens.push_back({TokenKind::S, 2});
    for (std::size_t j = 0; j < m.size(); ++j) {
        const bool negated = j % 2 == 1;  // T^{m_{2n}}, T^{-m_{2n-1}}, ...
        word.tokens.push_back({TokenKind::T, negated ? -m[j] : m[j]});
        word.tokens.push_back({TokenKind::S, 1});
    }
    return word;
}

TypeMSequence parse_m_sequence(std::string_view text) {
    TypeMSequence m;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma - start);
        std::size_t lo = piece.find_first_not_of(" \t");
        if (lo == std::string_view::npos)
            throw ParseError("empty entry in m-sequence", start + 1);
        std::size_t hi = piece.find_last_not_of(" \t");
        piece = piece.substr(lo, hi - lo + 1);
        if (!is_integer_literal(piece))
            throw ParseError("bad integer '" + std::string(piece) + "' in m-sequence", start + 1);
        m.push_back(int_from_decimal(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return m;
}

std::string print_m_sequence(const TypeMSequence& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out << ',';
        out << m[i];
    }
    return out.str();
}

}  // namespace catent
