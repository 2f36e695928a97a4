#include "grec/stats.hpp"

#include <stdexcept>

#include "grec/clumps.hpp"
#include "grec/errors.hpp"

namespace grec {

Distribution distribution(int n, Statistic stat) {
    if (n > 10) throw size_guard_error("distribution is guarded at n <= 10");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    Distribution result;
    result.n = n;
    result.stat = stat;
    for_each_permutation(n, [&](const std::vector<int>& word) {
        const Permutation perm(word);
        if (!is_k_clumped(perm, 2)) return;
        const PermStatistics stats = statistics(perm);
        int value = 0;
        switch (stat) {
            case Statistic::right_descents: value = stats.right_descents; break;
            case Statistic::left_descents: value = stats.left_descents; break;
            case Statistic::right_ascents: value = stats.right_ascents; break;
            case Statistic::left_ascents: value = stats.left_ascents; break;
        }
        result.counts[value] += 1;
    });
    return result;
}

mpq_class RationalPolynomial::evaluate(long n) const {
    mpq_class value = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        value = value * n + *it;
    return value;
}

ConjecturePolynomial ptilde_reference(int d) {
    auto q = [](long num, long den) {
        mpq_class value(num, den);
        value.canonicalize();
        return value;
    };
    switch (d) {
        case 0:
            return {0, {{q(1, 1)}}};
        case 1:
            return {1, {{q(3, 3), q(-2, 3), q(1, 3)}}};
        case 2:
            // The linear coefficient is -297, not the sometimes-quoted -279
            // (a digit transposition): only -297 fits the exact counts.
            return {2, {{q(270, 180), q(-297, 180), q(142, 180), q(-36, 180), q(5, 180)}}};
        case 3:
            return {3,
                    {{q(37800, 15120), q(-46884, 15120), q(26000, 15120), q(-8361, 15120),
                      q(1688, 15120), q(-213, 15120), q(14, 15120)}}};
        default:
            throw std::invalid_argument("reference polynomials exist for d = 0..3 only");
    }
}

mpq_class conjecture_value(int d, long n) {
    const ConjecturePolynomial poly = ptilde_reference(d);
    mpq_class value = poly.ptilde.evaluate(n);
    for (int i = 1; i <= d; ++i) value *= (n - i);
    return value;
}

ConjectureReport check_conjecture(int d, int n_lo, int n_hi) {
    if (n_hi > 10) throw size_guard_error("check_conjecture is guarded at n <= 10");
    if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("bad n range");
    ConjectureReport report;
    report.d = d;
    for (int n = n_lo; n <= n_hi; ++n) {
        const Distribution dist = distribution(n, Statistic::right_descents);
        ConjectureReport::Row row;
        row.n = n;
        const auto it = dist.counts.find(d);
        row.brute = it == dist.counts.end() ? BigCount(0) : it->second;
        row.formula = conjecture_value(d, n);
        row.formula.canonicalize();
        row.match = mpq_class(row.brute) == row.formula;
        report.all_match = report.all_match && row.match;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace grec
