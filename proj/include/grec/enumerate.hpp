#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "grec/permutation.hpp"

namespace grec {

using BigCount = mpz_class;

/// Letter word over {n, e, f, l, u}; every string reachable from the seed
/// carries exactly one 'n'.
using LetterString = std::string;

/// Multiset of letter strings for one generating-tree level; the total
/// multiplicity is the number of permutations at that level.
struct CountMap {
    std::unordered_map<LetterString, BigCount> entries;
    int level = 1;

    BigCount total() const;
};

struct GrowOptions {
    int threads = 1;
    std::size_t max_distinct = 20'000'000;
};

/// Letter encoding of a 2-clumped permutation. Per entry a (left to right),
/// with B the set of values above a placed before a: 'n' if a is the largest
/// value, 'e' if B is empty, 'f' if B is everything above a, 'l' if B is a
/// proper prefix interval, 'u' if B is a proper suffix interval; entries
/// matching none contribute no letter.
LetterString encode_2clumped(const Permutation& perm);

/// Children of a string in the 2-clumped generating tree, one per insertion
/// position (before each letter and at the end).
std::vector<LetterString> children_2clumped(const LetterString& s);

/// Children in the 1-clumped (twisted Baxter) tree; all strings have the
/// form e^i n f^j.
std::vector<LetterString> children_1clumped(const LetterString& s);

/// The seed level: {"n": 1} at level 1.
CountMap initial_count_map();

enum class Engine { two_clumped, one_clumped };

/// One growth step. With several threads the level is grown in buckets and
/// merged; the result is identical to the single-threaded map.
CountMap grow(const CountMap& level, Engine engine, const GrowOptions& options = {});

/// Level totals for n = 1..n_max of the 2-clumped string engine.
std::vector<BigCount> count_2clumped(int n_max, const GrowOptions& options = {});

/// Level totals for the 1-clumped string engine.
std::vector<BigCount> count_1clumped(int n_max, const GrowOptions& options = {});

/// Same numbers from the collapsed (i, j) state table; the string engine and
/// this table engine must agree.
std::vector<BigCount> count_1clumped_table(int n_max);

/// B(n) = C(n+1,1)^-1 C(n+1,2)^-1 sum_k C(n+1,k-1) C(n+1,k) C(n+1,k+1).
BigCount baxter_closed_form(int n);

/// |{x in S_n : x is k-clumped}| by exhaustive filter. Guarded at n <= 10.
BigCount brute_count_k_clumped(int n, int k);

/// Checkpoint format: sorted lines "string<TAB>decimal-multiplicity".
std::string count_map_checkpoint(const CountMap& level);
CountMap parse_count_map_checkpoint(std::string_view text, int level);

}  // namespace grec
