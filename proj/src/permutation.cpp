#include "grec/permutation.hpp"

#include <charconv>
#include <stdexcept>

namespace grec {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = size();
    if (n == 0) throw std::invalid_argument("permutation must be nonempty");
    positions_.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int v = entries_[static_cast<std::size_t>(i)];
        if (v < 1 || v > n) throw std::invalid_argument("permutation entry out of range 1..n");
        if (positions_[static_cast<std::size_t>(v - 1)] != -1)
            throw std::invalid_argument("permutation entry repeated");
        positions_[static_cast<std::size_t>(v - 1)] = i;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::iota(entries.begin(), entries.end(), 1);
    return Permutation(std::move(entries));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("cannot parse permutation entry '" + std::string(token) + "'");
        entries.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return Permutation(std::move(entries));
}

Permutation Permutation::inverse() const {
    std::vector<int> entries(positions_.size());
    for (std::size_t i = 0; i < positions_.size(); ++i)
        entries[i] = positions_[i] + 1;
    return Permutation(std::move(entries));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (entries_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

Permutation Permutation::with_adjacent_swapped(int pos) const {
    std::vector<int> entries = entries_;
    std::swap(entries[static_cast<std::size_t>(pos)], entries[static_cast<std::size_t>(pos) + 1]);
    return Permutation(std::move(entries));
}

std::string Permutation::str() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<int> descents(const Permutation& perm) {
    std::vector<int> result;
    for (int i = 0; i + 1 < perm.size(); ++i)
        if (perm[i] > perm[i + 1]) result.push_back(i);
    return result;
}

PermStatistics statistics(const Permutation& perm) {
    PermStatistics stats;
    const int n = perm.size();
    for (int i = 0; i + 1 < n; ++i) {
        if (perm[i] < perm[i + 1])
            ++stats.right_ascents;
        else
            ++stats.right_descents;
    }
    for (int v = 2; v <= n; ++v) {
        if (perm.position_of(v - 1) < perm.position_of(v))
            ++stats.left_ascents;
        else
            ++stats.left_descents;
    }
    return stats;
}

std::vector<std::pair<Permutation, CoverMove>> covers_down(const Permutation& perm) {
    std::vector<std::pair<Permutation, CoverMove>> result;
    for (int i : descents(perm))
        result.emplace_back(perm.with_adjacent_swapped(i), CoverMove{i, perm[i], perm[i + 1]});
    return result;
}

int inversion_count(const Permutation& perm) {
    int count = 0;
    for (int i = 0; i < perm.size(); ++i)
        for (int j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++count;
    return count;
}

}  // namespace grec
