#include "grec/genrect.hpp"

#include <algorithm>
#include <stdexcept>

#include "grec/congruence.hpp"
#include "grec/errors.hpp"

namespace grec {

std::pair<std::vector<int>, std::vector<int>> shuffle_alphabets(const Wall& wall) {
    if (wall.side_a.empty() || wall.side_b.empty())
        throw internal_error("wall with an empty side list");
    std::vector<int> seq_a;
    std::vector<int> seq_b;
    if (wall.orientation == Orientation::vertical) {
        // Left-side rects have their right edge in the wall; drop the bottom
        // one. Right-side rects have their left edge in the wall; drop the top.
        seq_a.assign(wall.side_a.begin() + 1, wall.side_a.end());
        seq_b.assign(wall.side_b.begin(), wall.side_b.end() - 1);
    } else {
        // Above rects have their bottom edge in the wall; drop the rightmost.
        // Below rects have their top edge in the wall; drop the leftmost.
        seq_a.assign(wall.side_b.begin(), wall.side_b.end() - 1);
        seq_b.assign(wall.side_a.begin() + 1, wall.side_a.end());
    }
    return {std::move(seq_a), std::move(seq_b)};
}

bool is_legal_shuffle(const Wall& wall, const std::vector<int>& sequence) {
    const auto [seq_a, seq_b] = shuffle_alphabets(wall);
    std::size_t a = 0;
    std::size_t b = 0;
    for (int id : sequence) {
        if (a < seq_a.size() && seq_a[a] == id)
            ++a;
        else if (b < seq_b.size() && seq_b[b] == id)
            ++b;
        else
            return false;
    }
    return a == seq_a.size() && b == seq_b.size();
}

GenRect::GenRect(DiagRect diag, std::vector<std::vector<int>> shuffles)
    : diag_(std::move(diag)), shuffles_(std::move(shuffles)) {
    if (shuffles_.size() != diag_.walls().size())
        throw std::invalid_argument("one shuffle per wall required");
    for (std::size_t w = 0; w < shuffles_.size(); ++w)
        if (!is_legal_shuffle(diag_.walls()[w], shuffles_[w]))
            throw std::invalid_argument("illegal wall shuffle");
}

std::string GenRect::key() const {
    std::string out = std::to_string(size());
    for (const Rect& r : diag_.rects()) {
        out += '|';
        out += std::to_string(r.x0) + ',' + std::to_string(r.y0) + ',' +
               std::to_string(r.x1) + ',' + std::to_string(r.y1);
    }
    for (const auto& shuffle : shuffles_) {
        out += '/';
        for (int id : shuffle) {
            out += std::to_string(id);
            out += ' ';
        }
    }
    return out;
}

GenRect gamma(const Permutation& perm) {
    DiagRect diag = rho(perm);
    const int n = perm.size();
    std::vector<std::vector<int>> shuffles;
    shuffles.reserve(diag.walls().size());
    std::vector<bool> in_alphabet(static_cast<std::size_t>(n) + 1);
    for (const Wall& wall : diag.walls()) {
        const auto [seq_a, seq_b] = shuffle_alphabets(wall);
        std::fill(in_alphabet.begin(), in_alphabet.end(), false);
        for (int id : seq_a) in_alphabet[static_cast<std::size_t>(id)] = true;
        for (int id : seq_b) in_alphabet[static_cast<std::size_t>(id)] = true;
        std::vector<int> shuffle;
        shuffle.reserve(seq_a.size() + seq_b.size());
        for (int i = 0; i < n; ++i)
            if (in_alphabet[static_cast<std::size_t>(perm[i])]) shuffle.push_back(perm[i]);
        shuffles.push_back(std::move(shuffle));
    }
    return GenRect(std::move(diag), std::move(shuffles));
}

bool is_mosaic_equivalent(const GenRect& a, const GenRect& b) {
    return a.diag() == b.diag();
}

GenRect wall_slide(const GenRect& g, int wall_index, int pos) {
    if (wall_index < 0 || wall_index >= static_cast<int>(g.shuffles().size()))
        throw std::invalid_argument("wall index out of range");
    const std::vector<int>& shuffle = g.shuffle(wall_index);
    if (pos < 0 || pos + 1 >= static_cast<int>(shuffle.size()))
        throw std::invalid_argument("slide position out of range");

    const Wall& wall = g.diag().walls()[static_cast<std::size_t>(wall_index)];
    const auto [seq_a, seq_b] = shuffle_alphabets(wall);
    auto side_of = [&](int id) {
        return std::find(seq_a.begin(), seq_a.end(), id) != seq_a.end();
    };
    if (side_of(shuffle[static_cast<std::size_t>(pos)]) ==
        side_of(shuffle[static_cast<std::size_t>(pos) + 1]))
        throw std::invalid_argument("illegal slide: entries come from the same side");

    std::vector<std::vector<int>> shuffles = g.shuffles();
    std::swap(shuffles[static_cast<std::size_t>(wall_index)][static_cast<std::size_t>(pos)],
              shuffles[static_cast<std::size_t>(wall_index)][static_cast<std::size_t>(pos) + 1]);
    return GenRect(g.diag(), std::move(shuffles));
}

Permutation any_compatible_permutation(const GenRect& g) {
    const DiagRect& diag = g.diag();
    const int n = diag.size();
    const std::vector<Wall>& walls = diag.walls();

    // walls_of[id] lists the walls whose shuffle alphabet contains id.
    std::vector<std::vector<int>> walls_of(static_cast<std::size_t>(n) + 1);
    for (std::size_t w = 0; w < walls.size(); ++w) {
        const auto [seq_a, seq_b] = shuffle_alphabets(walls[w]);
        for (int id : seq_a) walls_of[static_cast<std::size_t>(id)].push_back(static_cast<int>(w));
        for (int id : seq_b) walls_of[static_cast<std::size_t>(id)].push_back(static_cast<int>(w));
    }

    std::vector<std::size_t> consumed(walls.size(), 0);
    std::vector<int> heights(static_cast<std::size_t>(n), 0);
    std::vector<bool> drawn(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));

    auto drawable = [&](const Rect& r) {
        if (r.x0 > 0 && heights[static_cast<std::size_t>(r.x0 - 1)] < r.y1) return false;
        for (int c = r.x0; c < r.x1; ++c)
            if (heights[static_cast<std::size_t>(c)] != r.y0) return false;
        return true;
    };

    for (int step = 0; step < n; ++step) {
        // Candidates scanned top-left to bottom-right; drawable rectangles sit
        // at distinct staircase corners, so x0 orders them.
        std::vector<int> candidates;
        for (int id = 1; id <= n; ++id)
            if (!drawn[static_cast<std::size_t>(id)] && drawable(diag.rect(id)))
                candidates.push_back(id);
        std::sort(candidates.begin(), candidates.end(),
                  [&](int a, int b) { return diag.rect(a).x0 < diag.rect(b).x0; });

        int picked = 0;
        for (int id : candidates) {
            bool permitted = true;
            for (int w : walls_of[static_cast<std::size_t>(id)]) {
                const std::vector<int>& shuffle = g.shuffle(w);
                if (consumed[static_cast<std::size_t>(w)] >= shuffle.size() ||
                    shuffle[consumed[static_cast<std::size_t>(w)]] != id) {
                    permitted = false;
                    break;
                }
            }
            if (permitted) {
                picked = id;
                break;
            }
        }
        if (picked == 0)
            throw internal_error("no candidate rectangle consistent with the wall shuffles");

        const Rect& rect = diag.rect(picked);
        for (int c = rect.x0; c < rect.x1; ++c)
            heights[static_cast<std::size_t>(c)] = rect.y1;
        drawn[static_cast<std::size_t>(picked)] = true;
        for (int w : walls_of[static_cast<std::size_t>(picked)])
            ++consumed[static_cast<std::size_t>(w)];
        order.push_back(picked);
    }
    return Permutation(std::move(order));
}

Permutation inverse_gamma(const GenRect& g) {
    return class_minimum(any_compatible_permutation(g), CoverTest::gamma_test());
}

std::vector<Permutation> fiber_gamma(const GenRect& g) {
    if (g.size() > 8) throw size_guard_error("fiber_gamma is guarded at n <= 8");
    std::vector<Permutation> fiber;
    for (Permutation& candidate : fiber_rho(g.diag()))
        if (gamma(candidate) == g) fiber.push_back(std::move(candidate));
    return fiber;
}

}  // namespace grec
