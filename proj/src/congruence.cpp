#include "grec/congruence.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "grec/errors.hpp"

namespace grec {

CoverTest CoverTest::clumped(int k) {
    if (k < 1) throw std::invalid_argument("cover test requires k >= 1");
    return CoverTest{k};
}

namespace {

void check_move(const Permutation& y, const CoverMove& move) {
    if (move.index < 0 || move.index + 1 >= y.size() || y[move.index] != move.high ||
        y[move.index + 1] != move.low || move.high <= move.low)
        throw std::invalid_argument("invalid cover move: cited positions are not that descent");
}

// Number of side changes in the value-ordered side sequence of the values
// strictly between the swapped pair. An alternating chain of m+1 values
// exists iff there are at least m changes.
int side_changes(const Permutation& y, const CoverMove& move) {
    int changes = 0;
    bool have_previous = false;
    bool previous_before = false;
    for (int value = move.low + 1; value < move.high; ++value) {
        const bool before = y.position_of(value) < move.index;
        if (have_previous && before != previous_before) ++changes;
        have_previous = true;
        previous_before = before;
    }
    return changes;
}

}  // namespace

bool gamma_cover_equivalent(const Permutation& y, const CoverMove& move) {
    check_move(y, move);
    return side_changes(y, move) >= 2;
}

bool rho_cover_equivalent(const Permutation& y, const CoverMove& move) {
    check_move(y, move);
    return side_changes(y, move) >= 1;
}

bool k_cover_equivalent(const Permutation& y, const CoverMove& move, int k) {
    if (k < 1) throw std::invalid_argument("cover test requires k >= 1");
    check_move(y, move);
    return side_changes(y, move) >= k;
}

bool cover_equivalent(const Permutation& y, const CoverMove& move, CoverTest test) {
    return k_cover_equivalent(y, move, test.k);
}

namespace {

// Members reachable by one equivalent cover, in either direction.
std::vector<Permutation> equivalent_neighbors(const Permutation& perm, CoverTest test) {
    std::vector<Permutation> neighbors;
    for (int i = 0; i + 1 < perm.size(); ++i) {
        if (perm[i] > perm[i + 1]) {
            const CoverMove move{i, perm[i], perm[i + 1]};
            if (cover_equivalent(perm, move, test))
                neighbors.push_back(perm.with_adjacent_swapped(i));
        } else {
            Permutation upper = perm.with_adjacent_swapped(i);
            const CoverMove move{i, upper[i], upper[i + 1]};
            if (cover_equivalent(upper, move, test)) neighbors.push_back(std::move(upper));
        }
    }
    return neighbors;
}

bool has_equivalent_down_cover(const Permutation& perm, CoverTest test, int* index = nullptr) {
    for (int i = 0; i + 1 < perm.size(); ++i) {
        if (perm[i] <= perm[i + 1]) continue;
        const CoverMove move{i, perm[i], perm[i + 1]};
        if (cover_equivalent(perm, move, test)) {
            if (index) *index = i;
            return true;
        }
    }
    return false;
}

}  // namespace

CongruenceClass congruence_class(const Permutation& perm, CoverTest test) {
    if (perm.size() > 12)
        throw size_guard_error("congruence_class is guarded at n <= 12");

    std::unordered_set<Permutation> visited{perm};
    std::deque<Permutation> frontier{perm};
    while (!frontier.empty()) {
        Permutation current = std::move(frontier.front());
        frontier.pop_front();
        for (Permutation& neighbor : equivalent_neighbors(current, test)) {
            if (visited.insert(neighbor).second) frontier.push_back(std::move(neighbor));
        }
    }

    CongruenceClass result;
    result.members.assign(visited.begin(), visited.end());
    std::sort(result.members.begin(), result.members.end());

    int minima_found = 0;
    for (const Permutation& member : result.members) {
        if (!has_equivalent_down_cover(member, test)) {
            result.minimum = member;
            ++minima_found;
        }
    }
    if (minima_found != 1)
        throw internal_error("congruence class does not have a unique minimum");
    return result;
}

Permutation class_minimum(const Permutation& perm, CoverTest test) {
    Permutation current = perm;
    int index = 0;
    while (has_equivalent_down_cover(current, test, &index))
        current = current.with_adjacent_swapped(index);
    return current;
}

}  // namespace grec
