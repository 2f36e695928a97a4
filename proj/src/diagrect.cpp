#include "grec/diagrect.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "grec/errors.hpp"

namespace grec {

namespace {

// Staircase of the drawn region: heights[c] is the covered height over the
// open column (c, c+1). The region stays left- and bottom-justified, so
// heights are weakly decreasing.
class Staircase {
public:
    explicit Staircase(int n) : n_(n), heights_(static_cast<std::size_t>(n), 0) {}

    int height(int column) const { return heights_[static_cast<std::size_t>(column)]; }

    // Number of columns covered to height at least q (q >= 1); this is also
    // the x-coordinate of the rightmost point of the region on the line y = q.
    int extent_at(int q) const {
        int count = 0;
        while (count < n_ && heights_[static_cast<std::size_t>(count)] >= q) ++count;
        return count;
    }

    // Place a rectangle spanning columns [x0, x1) with top y1; its bottom
    // must sit exactly on the staircase.
    void place(int x0, int x1, int y0, int y1) {
        for (int c = x0; c < x1; ++c) {
            if (heights_[static_cast<std::size_t>(c)] != y0)
                throw internal_error("rectangle bottom does not rest on the staircase");
            heights_[static_cast<std::size_t>(c)] = y1;
        }
    }

private:
    int n_;
    std::vector<int> heights_;
};

}  // namespace

DiagRect rho(const Permutation& perm) {
    const int n = perm.size();
    Staircase stairs(n);
    std::vector<Rect> rects(static_cast<std::size_t>(n));

    for (int step = 0; step < n; ++step) {
        const int v = perm[step];
        const int q_above = n - v + 1;  // y of the diagonal point above/left of cell v
        const int q_below = n - v;      // y of the diagonal point below/right of cell v

        // Top-left corner from the diagonal point p = (v-1, n-v+1).
        int tlx;
        int tly;
        const bool p_in_T =
            v == 1 || std::max(stairs.height(v - 2), stairs.height(v - 1)) >= q_above;
        if (!p_in_T) {
            tlx = stairs.extent_at(q_above);
            tly = q_above;
        } else if (v == 1) {
            tlx = 0;
            tly = n;
        } else {
            tlx = v - 1;
            tly = std::max(stairs.height(v - 2), stairs.height(v - 1));
        }

        // Bottom-right corner from the diagonal point p' = (v, n-v).
        int brx;
        int bry;
        const bool pp_in_T =
            v == n || std::max(stairs.height(v - 1), stairs.height(v)) >= q_below;
        if (!pp_in_T) {
            brx = v;
            bry = std::max(stairs.height(v - 1), stairs.height(v));
        } else if (v == n) {
            brx = n;
            bry = 0;
        } else {
            brx = stairs.extent_at(q_below);
            bry = q_below;
        }

        if (!(tlx < brx && bry < tly))
            throw internal_error("degenerate rectangle in rho construction");
        stairs.place(tlx, brx, bry, tly);
        rects[static_cast<std::size_t>(v - 1)] = Rect{v, tlx, bry, brx, tly};
    }

    return DiagRect(n, std::move(rects));
}

DiagRect::DiagRect(int n, std::vector<Rect> rects) : n_(n), rects_(std::move(rects)) {
    walls_ = extract_walls(rects_);
}

namespace {

struct DrawState {
    explicit DrawState(int n) : heights(static_cast<std::size_t>(n), 0) {}

    std::vector<int> heights;

    bool drawable(const Rect& r) const {
        if (r.x0 > 0 && heights[static_cast<std::size_t>(r.x0 - 1)] < r.y1) return false;
        for (int c = r.x0; c < r.x1; ++c)
            if (heights[static_cast<std::size_t>(c)] != r.y0) return false;
        return true;
    }

    void draw(const Rect& r) {
        for (int c = r.x0; c < r.x1; ++c) heights[static_cast<std::size_t>(c)] = r.y1;
    }
};

void fiber_search(const DiagRect& r, DrawState& state, std::vector<bool>& drawn,
                  std::vector<int>& order, std::vector<Permutation>& out) {
    const int n = r.size();
    if (static_cast<int>(order.size()) == n) {
        out.emplace_back(order);
        return;
    }
    for (int id = 1; id <= n; ++id) {
        if (drawn[static_cast<std::size_t>(id - 1)]) continue;
        const Rect& rect = r.rect(id);
        if (!state.drawable(rect)) continue;
        drawn[static_cast<std::size_t>(id - 1)] = true;
        order.push_back(id);
        DrawState saved = state;
        state.draw(rect);
        fiber_search(r, state, drawn, order, out);
        state = saved;
        order.pop_back();
        drawn[static_cast<std::size_t>(id - 1)] = false;
    }
}

}  // namespace

bool is_compatible(const Permutation& perm, const DiagRect& r) {
    if (perm.size() != r.size())
        throw std::invalid_argument("permutation and rectangulation sizes differ");
    DrawState state(r.size());
    for (int i = 0; i < perm.size(); ++i) {
        const Rect& rect = r.rect(perm[i]);
        if (!state.drawable(rect)) return false;
        state.draw(rect);
    }
    return true;
}

std::vector<Permutation> fiber_rho(const DiagRect& r) {
    if (r.size() > 10) throw size_guard_error("fiber_rho is guarded at n <= 10");
    DrawState state(r.size());
    std::vector<bool> drawn(static_cast<std::size_t>(r.size()), false);
    std::vector<int> order;
    std::vector<Permutation> out;
    fiber_search(r, state, drawn, order, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void check_tiling(std::span<const Rect> rects) {
    if (rects.empty()) throw std::invalid_argument("empty tiling");
    int x_lo = rects[0].x0, x_hi = rects[0].x1, y_lo = rects[0].y0, y_hi = rects[0].y1;
    long long area = 0;
    for (const Rect& r : rects) {
        if (r.x0 >= r.x1 || r.y0 >= r.y1)
            throw std::invalid_argument("not a tiling: rectangle with nonpositive extent");
        x_lo = std::min(x_lo, r.x0);
        x_hi = std::max(x_hi, r.x1);
        y_lo = std::min(y_lo, r.y0);
        y_hi = std::max(y_hi, r.y1);
        area += static_cast<long long>(r.x1 - r.x0) * (r.y1 - r.y0);
    }
    for (std::size_t i = 0; i < rects.size(); ++i)
        for (std::size_t j = i + 1; j < rects.size(); ++j) {
            const Rect& a = rects[i];
            const Rect& b = rects[j];
            if (a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1)
                throw std::invalid_argument("not a tiling: overlapping rectangles");
        }
    if (area != static_cast<long long>(x_hi - x_lo) * (y_hi - y_lo))
        throw std::invalid_argument("not a tiling: coverage gap");
}

}  // namespace

bool is_generic_tiling(std::span<const Rect> rects) {
    check_tiling(rects);
    std::map<std::pair<int, int>, int> corner_counts;
    for (const Rect& r : rects) {
        ++corner_counts[{r.x0, r.y0}];
        ++corner_counts[{r.x0, r.y1}];
        ++corner_counts[{r.x1, r.y0}];
        ++corner_counts[{r.x1, r.y1}];
    }
    for (const auto& [corner, count] : corner_counts)
        if (count >= 4) return false;
    return true;
}

namespace {

struct EdgeSegment {
    int lo;
    int hi;
    int id;
    bool on_side_a;  // vertical: rect left of the wall; horizontal: rect below
};

std::vector<Wall> merge_segments(Orientation orientation,
                                 std::map<int, std::vector<EdgeSegment>>& by_coord) {
    std::vector<Wall> walls;
    for (auto& [coord, segments] : by_coord) {
        std::sort(segments.begin(), segments.end(),
                  [](const EdgeSegment& a, const EdgeSegment& b) {
                      return std::tie(a.lo, a.hi, a.id) < std::tie(b.lo, b.hi, b.id);
                  });
        std::size_t i = 0;
        while (i < segments.size()) {
            Wall wall{orientation, coord, segments[i].lo, segments[i].hi, {}, {}};
            std::size_t j = i;
            while (j < segments.size() && segments[j].lo <= wall.hi) {
                wall.hi = std::max(wall.hi, segments[j].hi);
                ++j;
            }
            for (std::size_t s = i; s < j; ++s) {
                (segments[s].on_side_a ? wall.side_a : wall.side_b).push_back(segments[s].id);
            }
            walls.push_back(std::move(wall));
            i = j;
        }
    }
    return walls;
}

}  // namespace

std::vector<Wall> extract_walls(std::span<const Rect> rects) {
    int x_lo = rects[0].x0, x_hi = rects[0].x1, y_lo = rects[0].y0, y_hi = rects[0].y1;
    for (const Rect& r : rects) {
        x_lo = std::min(x_lo, r.x0);
        x_hi = std::max(x_hi, r.x1);
        y_lo = std::min(y_lo, r.y0);
        y_hi = std::max(y_hi, r.y1);
    }

    std::map<int, std::vector<EdgeSegment>> vertical;
    std::map<int, std::vector<EdgeSegment>> horizontal;
    for (const Rect& r : rects) {
        if (r.x1 < x_hi) vertical[r.x1].push_back({r.y0, r.y1, r.id, true});
        if (r.x0 > x_lo) vertical[r.x0].push_back({r.y0, r.y1, r.id, false});
        if (r.y1 < y_hi) horizontal[r.y1].push_back({r.x0, r.x1, r.id, true});
        if (r.y0 > y_lo) horizontal[r.y0].push_back({r.x0, r.x1, r.id, false});
    }

    std::vector<Wall> walls = merge_segments(Orientation::vertical, vertical);
    std::vector<Wall> more = merge_segments(Orientation::horizontal, horizontal);
    walls.insert(walls.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
    std::sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) {
        return std::tie(a.orientation, a.coord, a.lo) < std::tie(b.orientation, b.coord, b.lo);
    });
    return walls;
}

}  // namespace grec
