#pragma once

#include <cstdint>
#include <vector>

#include "grec/permutation.hpp"

namespace grec {

enum class ClumpSide { before_descent_pair, after_descent_pair };

/// A maximal run of consecutive values strictly between a descent's entries,
/// all on the same side of the adjacent descent pair.
struct Clump {
    int lo;
    int hi;
    ClumpSide side;

    friend bool operator==(const Clump&, const Clump&) = default;
};

/// The clumps of the descent at the given 0-based position, ordered by value.
/// Throws std::invalid_argument if the position is not a descent.
std::vector<Clump> clumps_of_descent(const Permutation& perm, int index);

/// Largest clump count over all descents (0 if perm has no descent).
int max_clump_count(const Permutation& perm);

/// Every descent has at most k clumps. For k = -1, true only for the identity.
bool is_k_clumped(const Permutation& perm, int k);

/// Number of generalized patterns whose avoidance defines the k-clumped
/// permutations: 2(k/2)!((k/2)+1)! for even k, 2(((k+1)/2)!)^2 for odd k.
std::uint64_t k_clumped_pattern_count(int k);

}  // namespace grec
