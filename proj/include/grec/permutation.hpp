#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grec {

/// A permutation of {1,...,n} in one-line notation. Immutable value type;
/// positions are 0-based, values are 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);
    /// Parses comma-separated one-line notation, e.g. "2,4,1,3".
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int pos) const { return entries_[static_cast<std::size_t>(pos)]; }
    /// 0-based position of a value.
    int position_of(int value) const { return positions_[static_cast<std::size_t>(value - 1)]; }
    const std::vector<int>& entries() const { return entries_; }

    Permutation inverse() const;
    bool is_identity() const;
    /// Copy with entries at positions pos, pos+1 swapped.
    Permutation with_adjacent_swapped(int pos) const;
    /// Comma-separated one-line notation.
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
    std::vector<int> positions_;  // positions_[v-1] = position of value v
};

/// A weak-order cover move: swapping the adjacent pair (high, low) at
/// positions (index, index+1), with high > low.
struct CoverMove {
    int index;
    int high;
    int low;

    friend bool operator==(const CoverMove&, const CoverMove&) = default;
};

struct PermStatistics {
    int left_ascents = 0;
    int left_descents = 0;
    int right_ascents = 0;
    int right_descents = 0;

    friend bool operator==(const PermStatistics&, const PermStatistics&) = default;
};

/// 0-based positions i with x_i > x_{i+1}.
std::vector<int> descents(const Permutation& perm);

/// Right ascents/descents count adjacent positions; left ascents/descents
/// count value pairs (i-1, i) by relative order.
PermStatistics statistics(const Permutation& perm);

/// All weak-order covers below perm, one per descent.
std::vector<std::pair<Permutation, CoverMove>> covers_down(const Permutation& perm);

int inversion_count(const Permutation& perm);

/// Calls fn with each element of S_n in lexicographic order, as const std::vector<int>&.
template <typename F>
void for_each_permutation(int n, F&& fn) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    const std::vector<int>& view = word;
    do {
        fn(view);
    } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace grec

template <>
struct std::hash<grec::Permutation> {
    std::size_t operator()(const grec::Permutation& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.entries()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};
