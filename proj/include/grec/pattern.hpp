#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grec/permutation.hpp"

namespace grec {

/// A dashed (vincular) pattern: a word of ranks together with adjacency
/// flags. adjacent[j] == true means positions j and j+1 of an occurrence
/// must be adjacent (no dash was written between the letters).
class DashedPattern {
public:
    DashedPattern(std::vector<int> ranks, std::vector<bool> adjacent);

    /// Parses e.g. "3-51-2-4": digits are ranks, a missing dash marks adjacency.
    static DashedPattern parse(std::string_view text);

    int length() const { return static_cast<int>(ranks_.size()); }
    int rank(int j) const { return ranks_[static_cast<std::size_t>(j)]; }
    bool adjacent(int j) const { return adjacent_[static_cast<std::size_t>(j)]; }
    std::string str() const;

private:
    std::vector<int> ranks_;
    std::vector<bool> adjacent_;
};

/// Lexicographically smallest occurrence of pattern in perm as a 0-based
/// position sequence, or nullopt if perm avoids the pattern.
std::optional<std::vector<int>> find_occurrence(const DashedPattern& pattern,
                                                const Permutation& perm);

bool contains(const Permutation& perm, const DashedPattern& pattern);
bool avoids_all(const Permutation& perm, std::span<const DashedPattern> patterns);

/// The four patterns whose avoiders are the 2-clumped permutations.
const std::vector<DashedPattern>& two_clumped_patterns();
/// 2-41-3 and 3-41-2 (twisted Baxter).
const std::vector<DashedPattern>& one_clumped_patterns();
/// 31-2 and 2-31.
const std::vector<DashedPattern>& zero_clumped_patterns();
/// 3-14-2 and 2-41-3.
const std::vector<DashedPattern>& baxter_patterns();

bool is_baxter(const Permutation& perm);

}  // namespace grec
