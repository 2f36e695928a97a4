#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grec/diagrect.hpp"
#include "grec/permutation.hpp"

namespace grec {

/// The two sequences whose interleavings are the legal shuffles of a wall.
/// Vertical: ids with their right edge in the wall excluding the bottom one,
/// and ids with their left edge in the wall excluding the top one, both
/// bottom-to-top (hence decreasing). Horizontal: ids with their bottom edge
/// in the wall excluding the rightmost, and ids with their top edge in the
/// wall excluding the leftmost, both left-to-right (hence increasing).
std::pair<std::vector<int>, std::vector<int>> shuffle_alphabets(const Wall& wall);

/// True iff sequence is an interleaving of the wall's two alphabet sequences.
bool is_legal_shuffle(const Wall& wall, const std::vector<int>& sequence);

/// A canonical generic rectangulation: a diagonal rectangulation plus one
/// wall shuffle per wall, stored in the canonical wall order.
class GenRect {
public:
    GenRect() = default;
    GenRect(DiagRect diag, std::vector<std::vector<int>> shuffles);

    const DiagRect& diag() const { return diag_; }
    int size() const { return diag_.size(); }
    const std::vector<std::vector<int>>& shuffles() const { return shuffles_; }
    const std::vector<int>& shuffle(int wall_index) const {
        return shuffles_[static_cast<std::size_t>(wall_index)];
    }

    /// Compact text key; equal keys iff equal GenRects.
    std::string key() const;

    friend bool operator==(const GenRect& a, const GenRect& b) {
        return a.diag_ == b.diag_ && a.shuffles_ == b.shuffles_;
    }

private:
    DiagRect diag_;
    std::vector<std::vector<int>> shuffles_;
};

/// The map from permutations to generic rectangulations: rho(perm) together
/// with, per wall, the subsequence of perm over the wall's alphabet.
GenRect gamma(const Permutation& perm);

/// Same underlying diagonal rectangulation, i.e. related by wall slides.
bool is_mosaic_equivalent(const GenRect& a, const GenRect& b);

/// Swaps entries pos, pos+1 of one wall's shuffle. They must come from
/// opposite alphabet sequences.
GenRect wall_slide(const GenRect& g, int wall_index, int pos);

/// A permutation x with gamma(x) == g, built greedily: at each step pick the
/// top-left-most staircase candidate whose edges lie in the drawn region and
/// whose choice every incident wall shuffle permits.
Permutation any_compatible_permutation(const GenRect& g);

/// The unique 2-clumped preimage of g under gamma.
Permutation inverse_gamma(const GenRect& g);

/// All permutations mapping to g under gamma. Guarded at n <= 8.
std::vector<Permutation> fiber_gamma(const GenRect& g);

}  // namespace grec
