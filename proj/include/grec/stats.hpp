#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "grec/enumerate.hpp"

namespace grec {

enum class Statistic { right_descents, left_descents, right_ascents, left_ascents };

/// Exact histogram of a statistic over the 2-clumped permutations of S_n.
struct Distribution {
    int n = 0;
    Statistic stat = Statistic::right_descents;
    std::map<int, BigCount> counts;

    friend bool operator==(const Distribution& a, const Distribution& b) {
        return a.n == b.n && a.counts == b.counts;
    }
};

/// Brute force over S_n filtered by the 2-clumped test. Guarded at n <= 10.
Distribution distribution(int n, Statistic stat);

/// Polynomial with exact rational coefficients, ascending order.
struct RationalPolynomial {
    std::vector<mpq_class> coefficients;

    mpq_class evaluate(long n) const;
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// The reduced polynomial p~_d; the full count polynomial is
/// p_d(n) = (n-1)(n-2)...(n-d) * p~_d(n), of degree 3d.
struct ConjecturePolynomial {
    int d = 0;
    RationalPolynomial ptilde;
};

/// The four stated reference polynomials, d in 0..3.
ConjecturePolynomial ptilde_reference(int d);

/// p_d(n) as an exact rational.
mpq_class conjecture_value(int d, long n);

struct ConjectureReport {
    struct Row {
        int n;
        BigCount brute;
        mpq_class formula;
        bool match;
    };

    int d = 0;
    std::vector<Row> rows;
    bool all_match = true;
};

/// Compares the brute-force right-descent counts against the polynomial for
/// each n in [n_lo, n_hi]. Guarded at n_hi <= 10.
ConjectureReport check_conjecture(int d, int n_lo, int n_hi);

}  // namespace grec
