#pragma once

#include <vector>

#include "grec/permutation.hpp"

namespace grec {

/// Selects a cover-equivalence test. k = 1 is the rho test, k = 2 the gamma
/// test; larger k is an extrapolation validated only against k = 1 and 2.
struct CoverTest {
    int k;

    static CoverTest rho_test() { return CoverTest{1}; }
    static CoverTest gamma_test() { return CoverTest{2}; }
    static CoverTest clumped(int k);
};

/// Cover x <. y with swapped values e > a is gamma-equivalent iff there are
/// values a < b < c < d < e with b, d on one side of the adjacent pair and c
/// on the other.
bool gamma_cover_equivalent(const Permutation& y, const CoverMove& move);

/// Rho-equivalent iff there are values a < b < c < d on opposite sides of the
/// adjacent pair (d, a).
bool rho_cover_equivalent(const Permutation& y, const CoverMove& move);

/// Extrapolated form: k+1 values strictly between the swapped pair with
/// strictly alternating sides. Reduces to the rho test at k=1 and the gamma
/// test at k=2; treat larger k as a conjecture, not established behavior.
bool k_cover_equivalent(const Permutation& y, const CoverMove& move, int k);

bool cover_equivalent(const Permutation& y, const CoverMove& move, CoverTest test);

struct CongruenceClass {
    std::vector<Permutation> members;  // sorted lexicographically
    Permutation minimum;
};

/// Closure of {perm} under equivalent covers in both directions.
/// Guarded at n <= 12.
CongruenceClass congruence_class(const Permutation& perm, CoverTest test);

/// Greedy descent along equivalent down-covers; classes are intervals, so the
/// result does not depend on the descent order.
Permutation class_minimum(const Permutation& perm, CoverTest test);

}  // namespace grec
