#include "grec/clumps.hpp"

#include <stdexcept>

namespace grec {

std::vector<Clump> clumps_of_descent(const Permutation& perm, int index) {
    if (index < 0 || index + 1 >= perm.size())
        throw std::invalid_argument("descent index out of range");
    const int high = perm[index];
    const int low = perm[index + 1];
    if (high < low) throw std::invalid_argument("not a descent");

    std::vector<Clump> clumps;
    for (int value = low + 1; value < high; ++value) {
        const ClumpSide side = perm.position_of(value) < index
                                   ? ClumpSide::before_descent_pair
                                   : ClumpSide::after_descent_pair;
        if (!clumps.empty() && clumps.back().hi == value - 1 && clumps.back().side == side)
            clumps.back().hi = value;
        else
            clumps.push_back(Clump{value, value, side});
    }
    return clumps;
}

namespace {

// Clump count of the descent at position i, without materializing the clumps.
int descent_clump_count(const Permutation& perm, int i) {
    const int high = perm[i];
    const int low = perm[i + 1];
    int count = 0;
    bool have_previous = false;
    bool previous_before = false;
    for (int value = low + 1; value < high; ++value) {
        const bool before = perm.position_of(value) < i;
        if (!have_previous || before != previous_before) ++count;
        have_previous = true;
        previous_before = before;
    }
    return count;
}

}  // namespace

int max_clump_count(const Permutation& perm) {
    int max_count = 0;
    for (int i = 0; i + 1 < perm.size(); ++i) {
        if (perm[i] <= perm[i + 1]) continue;
        const int count = descent_clump_count(perm, i);
        if (count > max_count) max_count = count;
    }
    return max_count;
}

bool is_k_clumped(const Permutation& perm, int k) {
    if (k == -1) return perm.is_identity();
    if (k < -1) throw std::invalid_argument("k must be at least -1");
    for (int i = 0; i + 1 < perm.size(); ++i) {
        if (perm[i] <= perm[i + 1]) continue;
        if (descent_clump_count(perm, i) > k) return false;
    }
    return true;
}

std::uint64_t k_clumped_pattern_count(int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    auto factorial = [](int m) {
        std::uint64_t f = 1;
        for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    if (k % 2 == 0) return 2 * factorial(k / 2) * factorial(k / 2 + 1);
    return 2 * factorial((k + 1) / 2) * factorial((k + 1) / 2);
}

}  // namespace grec
