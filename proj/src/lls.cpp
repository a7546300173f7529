#include "catent/lls.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "catent/errors.hpp"

namespace catent {

ContinuedFraction cf_odd(const Int& p, const Int& q) {
    if (p <= 0 || q <= 0) throw DomainError("cf_odd requires positive arguments");
    if (p < q) throw DomainError("cf_odd requires p >= q (value >= 1)");
    Int num = p, den = q;
    const Int g = boost::multiprecision::gcd(num, den);
    num /= g;
    den /= g;
    ContinuedFraction cf;
    while (den != 0) {
        cf.push_back(num / den);
        Int r = num % den;
        num = den;
        den = r;
    }
    // Euclidean expansions of values >= 1 end with a term >= 2 unless the
    // whole expansion is a single term; an even length is rewritten by
    // splitting the last term as (a_k - 1, 1).
    if (cf.size() % 2 == 0) {
        cf.back() -= 1;
        cf.push_back(1);
    }
    return cf;
}

Rational cf_eval(const ContinuedFraction& cf) {
    if (cf.empty()) throw DomainError("empty continued fraction");
    for (const Int& a : cf)
        if (a < 1) throw DomainError("continued fraction entries must be positive");
    Rational value = cf.back();
    for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) value = *it + 1 / value;
    return value;
}

namespace {

std::vector<Int> canonical_even_rotation(const std::vector<Int>& entries) {
    std::vector<Int> best = entries;
    std::vector<Int> candidate(entries.size());
    for (std::size_t offset = 2; offset < entries.size(); offset += 2) {
        for (std::size_t i = 0; i < entries.size(); ++i)
            candidate[i] = entries[(offset + i) % entries.size()];
        if (std::lexicographical_compare(candidate.begin(), candidate.end(), best.begin(),
                                         best.end()))
            best = candidate;
    }
    return best;
}

}  // namespace

LLSPeriod::LLSPeriod(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2 || entries_.size() % 2 != 0)
        throw DomainError("LLS-period must have even length >= 2, got length " +
                          std::to_string(entries_.size()));
    for (const Int& a : entries_)
        if (a < 1) throw DomainError("LLS-period entries must be positive integers");
    canonical_ = canonical_even_rotation(entries_);
}

std::string LLSPeriod::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < canonical_.size(); ++i) {
        if (i) out << ',';
        out << canonical_[i];
    }
    return out.str();
}

bool cyclic_equal(const LLSPeriod& p, const LLSPeriod& q) {
    return p == q;
}

LLSPeriod lls_of_reduced(const Mat2Z& m) {
    if (!is_reduced(m))
        throw DomainError("lls_of_reduced requires a reduced matrix, got " + m.str());
    if (m.trace() <= 2) throw DomainError("lls_of_reduced requires trace > 2");
    std::vector<Int> period = cf_odd(m.c(), m.a());
    period.push_back((m.d() - 1) / m.c());
    return LLSPeriod(std::move(period));
}

namespace {

struct SearchNode {
    Mat2Z value;
    Mat2Z conjugator;
};

// Breadth-first search over g * X * g^-1 for g in {S, T, T^-1}, starting
// from `start`, visiting each matrix once. `visit` sees every reached
// node (including the start, with identity conjugator) and stops the
// search by returning true.
bool bfs_conjugates(const Mat2Z& start, int bound,
                    const std::function<bool(const SearchNode&)>& visit) {
    const Mat2Z s = Mat2Z::gen_s();
    const Mat2Z t = Mat2Z::gen_t();
    const Mat2Z t_inv = inverse(t);
    const Mat2Z* generators[3] = {&s, &t, &t_inv};

    std::unordered_set<Mat2Z, Mat2ZHash> seen;
    std::deque<SearchNode> frontier;
    frontier.push_back({start, Mat2Z::identity()});
    seen.insert(start);
    if (visit(frontier.front())) return true;

    for (int depth = 0; depth < bound && !frontier.empty(); ++depth) {
        std::deque<SearchNode> next;
        for (const SearchNode& node : frontier) {
            for (const Mat2Z* g : generators) {
                Mat2Z image = conjugate(node.value, *g);
                if (!seen.insert(image).second) continue;
                SearchNode child{std::move(image), *g * node.conjugator};
                if (visit(child)) return true;
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return false;
}

}  // namespace

Reduction reduce_hyperbolic(const Mat2Z& m, int max_depth) {
    if (m.trace() <= 2)
        throw DomainError("reduce_hyperbolic requires trace > 2, got trace " +
                          m.trace().str());
    if (is_reduced(m)) return {m, Mat2Z::identity()};

    // Explicit unipotent conjugation for the a = 0 form ((0,-1),(1,d)).
    if (m.a() == 0 && m.b() == -1 && m.c() == 1) {
        const Mat2Z conj(1, 1, 0, 1);
        Reduction result{Mat2Z(1, m.d() - 2, 1, m.d() - 1), conj};
        if (conjugate(m, conj) != result.reduced)
            throw std::logic_error("unipotent fast path produced a wrong conjugator");
        return result;
    }

    std::optional<Reduction> found;
    bfs_conjugates(m, max_depth, [&](const SearchNode& node) {
        if (!is_reduced(node.value)) return false;
        found = Reduction{node.value, node.conjugator};
        return true;
    });
    if (!found)
        throw DomainError("reduce_hyperbolic exhausted the search at conjugator length " +
                          std::to_string(max_depth) + " for " + m.str());
    if (conjugate(m, found->conjugator) != found->reduced)
        throw std::logic_error("reduction conjugator failed verification");
    return *found;
}

LLSPeriod lls_period(const Mat2Z& m) {
    const Int t = m.trace();
    if (boost::multiprecision::abs(t) <= 2)
        throw DomainError("LLS-period undefined for |trace| <= 2, got trace " + t.str());
    if (t < 0) return lls_period(-m);
    return lls_of_reduced(reduce_hyperbolic(m).reduced);
}

bool is_conjugate(const Mat2Z& a, const Mat2Z& b) {
    if (a.trace() <= 2 || b.trace() <= 2)
        throw DomainError("is_conjugate requires both traces > 2");
    return cyclic_equal(lls_period(a), lls_period(b));
}

std::optional<Mat2Z> brute_force_conjugate(const Mat2Z& a, const Mat2Z& b, int bound) {
    std::optional<Mat2Z> witness;
    bfs_conjugates(a, bound, [&](const SearchNode& node) {
        if (node.value != b) return false;
        witness = node.conjugator;
        return true;
    });
    if (witness && conjugate(a, *witness) != b)
        throw std::logic_error("brute-force conjugator failed verification");
    return witness;
}

std::unordered_map<Mat2Z, Mat2Z, Mat2ZHash> conjugates_within(const Mat2Z& a, int bound) {
    std::unordered_map<Mat2Z, Mat2Z, Mat2ZHash> reached;
    bfs_conjugates(a, bound, [&](const SearchNode& node) {
        reached.emplace(node.value, node.conjugator);
        return false;
    });
    return reached;
}

}  // namespace catent
