#include "grec/pattern.hpp"

#include <stdexcept>

namespace grec {

DashedPattern::DashedPattern(std::vector<int> ranks, std::vector<bool> adjacent)
    : ranks_(std::move(ranks)), adjacent_(std::move(adjacent)) {
    const int k = length();
    if (k == 0) throw std::invalid_argument("pattern must be nonempty");
    if (static_cast<int>(adjacent_.size()) != k - 1)
        throw std::invalid_argument("pattern needs exactly k-1 adjacency flags");
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int r : ranks_) {
        if (r < 1 || r > k || seen[static_cast<std::size_t>(r - 1)])
            throw std::invalid_argument("pattern ranks must be a permutation of 1..k");
        seen[static_cast<std::size_t>(r - 1)] = true;
    }
}

DashedPattern DashedPattern::parse(std::string_view text) {
    std::vector<int> ranks;
    std::vector<bool> adjacent;
    bool previous_was_digit = false;
    for (char c : text) {
        if (c == '-') {
            if (!previous_was_digit) throw std::invalid_argument("misplaced dash in pattern");
            previous_was_digit = false;
        } else if (c >= '1' && c <= '9') {
            if (previous_was_digit) adjacent.push_back(true);
            else if (!ranks.empty()) adjacent.push_back(false);
            ranks.push_back(c - '0');
            previous_was_digit = true;
        } else {
            throw std::invalid_argument("invalid character in pattern");
        }
    }
    if (!previous_was_digit) throw std::invalid_argument("pattern may not end with a dash");
    return DashedPattern(std::move(ranks), std::move(adjacent));
}

std::string DashedPattern::str() const {
    std::string out;
    for (int j = 0; j < length(); ++j) {
        if (j && !adjacent(j - 1)) out += '-';
        out += static_cast<char>('0' + rank(j));
    }
    return out;
}

namespace {

// Depth-first over increasing positions, smallest candidate first, so the
// first complete witness is the lexicographically smallest one.
bool search(const DashedPattern& pattern, const Permutation& perm, int j,
            std::vector<int>& chosen) {
    const int k = pattern.length();
    const int n = perm.size();
    if (j == k) return true;
    const bool forced = j > 0 && pattern.adjacent(j - 1);
    int first = j == 0 ? 0 : chosen[static_cast<std::size_t>(j) - 1] + 1;
    int last = n - (k - j);
    if (forced) last = std::min(last, first);
    for (int pos = first; pos <= last; ++pos) {
        const int value = perm[pos];
        bool ok = true;
        for (int l = 0; l < j; ++l) {
            const bool value_less = value < perm[chosen[static_cast<std::size_t>(l)]];
            const bool rank_less = pattern.rank(j) < pattern.rank(l);
            if (value_less != rank_less) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(pos);
        if (search(pattern, perm, j + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

std::vector<DashedPattern> parse_all(std::initializer_list<const char*> texts) {
    std::vector<DashedPattern> patterns;
    for (const char* text : texts) patterns.push_back(DashedPattern::parse(text));
    return patterns;
}

}  // namespace

std::optional<std::vector<int>> find_occurrence(const DashedPattern& pattern,
                                                const Permutation& perm) {
    if (pattern.length() > perm.size()) return std::nullopt;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(pattern.length()));
    if (search(pattern, perm, 0, chosen)) return chosen;
    return std::nullopt;
}

bool contains(const Permutation& perm, const DashedPattern& pattern) {
    return find_occurrence(pattern, perm).has_value();
}

bool avoids_all(const Permutation& perm, std::span<const DashedPattern> patterns) {
    for (const DashedPattern& pattern : patterns)
        if (contains(perm, pattern)) return false;
    return true;
}

const std::vector<DashedPattern>& two_clumped_patterns() {
    static const std::vector<DashedPattern> patterns =
        parse_all({"3-51-2-4", "3-51-4-2", "2-4-51-3", "4-2-51-3"});
    return patterns;
}

const std::vector<DashedPattern>& one_clumped_patterns() {
    static const std::vector<DashedPattern> patterns = parse_all({"2-41-3", "3-41-2"});
    return patterns;
}

const std::vector<DashedPattern>& zero_clumped_patterns() {
    static const std::vector<DashedPattern> patterns = parse_all({"31-2", "2-31"});
    return patterns;
}

const std::vector<DashedPattern>& baxter_patterns() {
    static const std::vector<DashedPattern> patterns = parse_all({"3-14-2", "2-41-3"});
    return patterns;
}

bool is_baxter(const Permutation& perm) {
    return avoids_all(perm, baxter_patterns());
}

}  // namespace grec
