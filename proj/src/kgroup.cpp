#include "catent/kgroup.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "catent/errors.hpp"

namespace catent {

namespace {

std::string format_sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

std::string GrowthReport::csv() const {
    std::ostringstream out;
    out << "l,chi_abs,estimate,rate,gap\n";
    for (const GrowthRow& row : rows) {
        out << row.l << ',' << row.chi_abs << ',' << format_sig12(row.estimate) << ','
            << format_sig12(row.rate) << ',' << format_sig12(row.gap) << '\n';
    }
    return out.str();
}

GrowthReport growth_sequence(const Mat2Z& a, const KClass& v, const KClass& w, long long steps) {
    if (steps < 1) throw DomainError("growth_sequence needs steps >= 1");

    GrowthReport report;
    report.target = entropy_of_matrix(a).value();
    report.rows.reserve(static_cast<std::size_t>(steps));

    const Int chi0 = euler_form(v, w);
    double prev_log = chi0 != 0 ? log_big(boost::multiprecision::abs(chi0))
                                : std::numeric_limits<double>::quiet_NaN();

    KClass iterate = w;
    for (long long l = 1; l <= steps; ++l) {
        iterate = act(a, iterate);
        Int chi = euler_form(v, iterate);
        if (chi == 0)
            throw DomainError("pairing vanished at l = " + std::to_string(l) +
                              "; pick a different class pair");
        GrowthRow row;
        row.l = l;
        row.chi_abs = boost::multiprecision::abs(chi);
        const double log_chi = log_big(row.chi_abs);
        row.estimate = log_chi / static_cast<double>(l);
        row.rate = std::isnan(prev_log) ? row.estimate : log_chi - prev_log;
        row.gap = std::abs(row.rate - report.target);
        prev_log = log_chi;
        report.rows.push_back(std::move(row));
    }
    report.final_gap = report.rows.back().gap;
    return report;
}

QuadrantTrace quadrant_trace(const TypeMSequence& m, const KClass& v) {
    validate_type_m(m);
    if (v.rank <= 0 || v.degree <= 0)
        throw DomainError("quadrant_trace needs a strictly positive class (r > 0, d > 0)");

    // Sign cycle after block j = 1, 2, 3, ...: (+,-), (-,-), (-,+), (+,+).
    static constexpr int kCycle[4][2] = {{1, -1}, {-1, -1}, {-1, 1}, {1, 1}};

    QuadrantTrace trace;
    KClass current = v;
    const std::size_t count = m.size();
    for (std::size_t j = 1; j <= count; ++j) {
        // Block j consumes m_j = m[2n - j]; odd j carries T^{-m_j}.
        const Int& entry = m[count - j];
        const bool negated = j % 2 == 1;
        const Int exponent = negated ? -entry : entry;
        // [T^e S] maps (r, d) to (d, -r + e*d).
        current = KClass{current.degree, -current.rank + exponent * current.degree};

        QuadrantStep step;
        step.block = static_cast<int>(j);
        step.t_exponent = exponent;
        step.value = current;
        step.sign_rank = sign_of(current.rank);
        step.sign_degree = sign_of(current.degree);
        const int* expected = kCycle[(j - 1) % 4];
        if (step.sign_rank != expected[0] || step.sign_degree != expected[1]) {
            std::ostringstream msg;
            msg << "sign pattern broke at block " << j << ": got (" << step.sign_rank << ","
                << step.sign_degree << "), expected (" << expected[0] << "," << expected[1]
                << ")";
            throw std::logic_error(msg.str());
        }
        trace.steps.push_back(std::move(step));
    }

    const std::size_t n = count / 2;
    trace.final_class = n % 2 == 1 ? KClass{-current.rank, -current.degree} : current;
    return trace;
}

double graded_complexity(const std::map<long long, long long>& dims, double t) {
    double total = 0.0;
    for (const auto& [degree, dim] : dims) {
        if (dim < 0) throw DomainError("dimensions must be non-negative");
        total += static_cast<double>(dim) * std::exp(-static_cast<double>(degree) * t);
    }
    return total;
}

}  // namespace catent
