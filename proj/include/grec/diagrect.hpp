#pragma once

#include <span>
#include <vector>

#include "grec/permutation.hpp"

namespace grec {

/// Axis-aligned rectangle with integer corners (x0,y0) bottom-left and
/// (x1,y1) top-right, carrying its rectangle number.
struct Rect {
    int id;
    int x0;
    int y0;
    int x1;
    int y1;

    friend bool operator==(const Rect&, const Rect&) = default;
};

enum class Orientation { vertical, horizontal };

/// A maximal interior segment meeting no rectangle's interior. For vertical
/// walls side_a lists the rectangles on the left (bottom-to-top) and side_b
/// those on the right; for horizontal walls side_a lists the rectangles below
/// (left-to-right) and side_b those above.
struct Wall {
    Orientation orientation;
    int coord;
    int lo;
    int hi;
    std::vector<int> side_a;
    std::vector<int> side_b;

    friend bool operator==(const Wall&, const Wall&) = default;
};

/// A diagonal rectangulation of the square [0,n] x [0,n], rectangles numbered
/// 1..n by diagonal order, with diagonal point i at (i, n-i). The coordinate
/// convention makes the tiling its own canonical form: equality is plain
/// coordinate comparison.
class DiagRect {
public:
    DiagRect() = default;
    DiagRect(int n, std::vector<Rect> rects);

    int size() const { return n_; }
    const std::vector<Rect>& rects() const { return rects_; }
    const Rect& rect(int id) const { return rects_[static_cast<std::size_t>(id - 1)]; }
    /// Walls in canonical order: vertical before horizontal, then by coord, then lo.
    const std::vector<Wall>& walls() const { return walls_; }

    friend bool operator==(const DiagRect& a, const DiagRect& b) {
        return a.n_ == b.n_ && a.rects_ == b.rects_;
    }

private:
    int n_ = 0;
    std::vector<Rect> rects_;  // indexed by id - 1
    std::vector<Wall> walls_;
};

/// The recursive insertion map from permutations to diagonal rectangulations.
DiagRect rho(const Permutation& perm);

/// True iff drawing the rectangles in perm order keeps the drawn union left-
/// and bottom-justified at every step.
bool is_compatible(const Permutation& perm, const DiagRect& r);

/// All permutations compatible with r, i.e. the fiber of rho over r.
/// Guarded at n <= 10.
std::vector<Permutation> fiber_rho(const DiagRect& r);

/// True iff no point is a corner of four distinct rectangles. Throws
/// std::invalid_argument if the rectangles do not tile their bounding box.
bool is_generic_tiling(std::span<const Rect> rects);

/// Maximal walls of an arbitrary rectangle tiling, in canonical order.
std::vector<Wall> extract_walls(std::span<const Rect> rects);

}  // namespace grec
