#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "grec/clumps.hpp"
#include "grec/enumerate.hpp"
#include "grec/errors.hpp"
#include "grec/pattern.hpp"

using namespace grec;

namespace {

Permutation perm_of(std::initializer_list<int> entries) {
    return Permutation(std::vector<int>(entries));
}

// Positions where n+1 may be inserted into perm: before entry 0..n-1, or n
// for the end. Returns the lengthened permutation.
Permutation insert_top(const Permutation& perm, int position) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(perm.size()) + 1);
    for (int i = 0; i < perm.size(); ++i) {
        if (i == position) word.push_back(perm.size() + 1);
        word.push_back(perm[i]);
    }
    if (position == perm.size()) word.push_back(perm.size() + 1);
    return Permutation(std::move(word));
}

std::map<LetterString, long> brute_encoding_histogram(int n) {
    std::map<LetterString, long> histogram;
    for_each_permutation(n, [&](const std::vector<int>& word) {
        const Permutation perm(word);
        if (is_k_clumped(perm, 2)) ++histogram[encode_2clumped(perm)];
    });
    return histogram;
}

// For each entry position, the index of its letter in the encoding, or -1 if
// the entry writes no letter. Straight from the beta-set definition.
std::vector<int> letter_of_entries(const Permutation& perm) {
    const int n = perm.size();
    std::vector<int> letter_of(static_cast<std::size_t>(n), -1);
    std::vector<bool> before(static_cast<std::size_t>(n) + 1, false);
    int cursor = 0;
    for (int i = 0; i < n; ++i) {
        const int a = perm[i];
        int present = 0;
        for (int b = a + 1; b <= n; ++b)
            if (before[static_cast<std::size_t>(b)]) ++present;
        bool has_letter = a == n || present == 0 || present == n - a;
        if (!has_letter && present > 0) {
            bool prefix = true;
            for (int b = a + 1; b <= a + present; ++b)
                if (!before[static_cast<std::size_t>(b)]) prefix = false;
            bool suffix = true;
            for (int b = n - present + 1; b <= n; ++b)
                if (!before[static_cast<std::size_t>(b)]) suffix = false;
            has_letter = prefix || suffix;
        }
        if (has_letter) letter_of[static_cast<std::size_t>(i)] = cursor++;
        before[static_cast<std::size_t>(a)] = true;
    }
    return letter_of;
}

const std::vector<long> table_one = {1, 2, 6, 24, 116, 642, 3938, 26194, 186042};

}  // namespace

TEST_CASE("letter encoding of the worked examples") {
    CHECK(encode_2clumped(perm_of({2, 4, 1, 3})) == "enf");
    CHECK(encode_2clumped(perm_of({4, 2, 1, 3})) == "nuf");
    CHECK(encode_2clumped(perm_of({3, 1, 2, 4})) == "eln");
    CHECK(encode_2clumped(perm_of({3, 1, 4, 2})) == "enf");
    CHECK(encode_2clumped(Permutation::identity(1)) == "n");
    CHECK(encode_2clumped(perm_of({1, 2})) == "en");
    CHECK(encode_2clumped(perm_of({2, 1})) == "nf");
    CHECK_THROWS_AS(encode_2clumped(perm_of({3, 5, 1, 2, 4})), std::invalid_argument);
}

TEST_CASE("children of small strings") {
    auto sorted = [](std::vector<LetterString> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(children_2clumped("n")) == std::vector<LetterString>{"en", "nf"});
    CHECK(sorted(children_2clumped("en")) == std::vector<LetterString>{"een", "enf", "nuf"});
    CHECK(children_2clumped("eln")[1] == "enf");  // inserting after the e
}

TEST_CASE("insertion soundness of the string rewrite") {
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [&](const std::vector<int>& word) {
            const Permutation perm(word);
            if (!is_k_clumped(perm, 2)) return;
            const LetterString code = encode_2clumped(perm);
            const auto children = children_2clumped(code);
            const std::vector<int> letter_of = letter_of_entries(perm);

            for (int position = 0; position <= n; ++position) {
                const Permutation grown = insert_top(perm, position);
                const bool stays_clumped = is_k_clumped(grown, 2);
                const bool allowed =
                    position == n || letter_of[static_cast<std::size_t>(position)] != -1;
                CHECK(stays_clumped == allowed);
                if (allowed) {
                    const int string_position =
                        position == n ? static_cast<int>(code.size())
                                      : letter_of[static_cast<std::size_t>(position)];
                    CHECK(encode_2clumped(grown) ==
                          children[static_cast<std::size_t>(string_position)]);
                }
            }
        });
    }
}

TEST_CASE("entries without a letter never regain one") {
    for (int n = 2; n <= 7; ++n) {
        for_each_permutation(n, [&](const std::vector<int>& word) {
            const Permutation perm(word);
            if (!is_k_clumped(perm, 2)) return;
            auto letterless = [](const Permutation& p) {
                std::set<int> values;
                const std::vector<int> letters = letter_of_entries(p);
                for (int i = 0; i < p.size(); ++i)
                    if (letters[static_cast<std::size_t>(i)] == -1) values.insert(p[i]);
                return values;
            };
            const std::set<int> before_insert = letterless(perm);
            for (int position = 0; position <= n; ++position) {
                const Permutation grown = insert_top(perm, position);
                if (!is_k_clumped(grown, 2)) continue;
                const std::set<int> after_insert = letterless(grown);
                for (int value : before_insert) CHECK(after_insert.contains(value));
            }
        });
    }
}

TEST_CASE("level growth reproduces the counting table") {
    const auto counts = count_2clumped(9);
    REQUIRE(counts.size() == 9);
    for (std::size_t i = 0; i < counts.size(); ++i)
        CHECK(counts[i] == table_one[i]);
}

TEST_CASE("level 4 has 15 distinct strings totaling 24") {
    CountMap level = initial_count_map();
    for (int i = 1; i < 4; ++i) level = grow(level, Engine::two_clumped);
    CHECK(level.level == 4);
    CHECK(level.entries.size() == 15);
    CHECK(level.total() == 24);
}

TEST_CASE("string multiplicities equal brute-force encoding histograms") {
    for (int n = 1; n <= 7; ++n) {
        CountMap level = initial_count_map();
        for (int i = 1; i < n; ++i) level = grow(level, Engine::two_clumped);
        const auto histogram = brute_encoding_histogram(n);
        REQUIRE(level.entries.size() == histogram.size());
        for (const auto& [code, count] : histogram) {
            REQUIRE(level.entries.contains(code));
            CHECK(level.entries.at(code) == count);
        }
    }
}

TEST_CASE("totals match the brute-force clumped counts") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(count_2clumped(n).back() == brute_count_k_clumped(n, 2));
        CHECK(count_1clumped(n).back() == brute_count_k_clumped(n, 1));
    }
}

TEST_CASE("one-clumped engines and the closed form agree") {
    const auto strings = count_1clumped(12);
    const auto table = count_1clumped_table(12);
    REQUIRE(strings.size() == table.size());
    for (std::size_t i = 0; i < strings.size(); ++i) {
        CHECK(strings[i] == table[i]);
        CHECK(strings[i] == baxter_closed_form(static_cast<int>(i) + 1));
    }
    const std::vector<long> expected = {1, 2, 6, 22, 92, 422};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(strings[i] == expected[i]);
}

TEST_CASE("one-clumped strings stay in the e^i n f^j family") {
    CountMap level = initial_count_map();
    for (int i = 1; i < 7; ++i) level = grow(level, Engine::one_clumped);
    for (const auto& [code, count] : level.entries) {
        CHECK(count > 0);
        const std::size_t n_at = code.find('n');
        REQUIRE(n_at != std::string::npos);
        for (std::size_t i = 0; i < code.size(); ++i)
            CHECK(code[i] == (i < n_at ? 'e' : i == n_at ? 'n' : 'f'));
    }
    // after one step: e n and n f, multiplicity 1 each
    CountMap first = grow(initial_count_map(), Engine::one_clumped);
    REQUIRE(first.entries.size() == 2);
    CHECK(first.entries.at("en") == 1);
    CHECK(first.entries.at("nf") == 1);
}

TEST_CASE("baxter closed form small values and the pattern oracle") {
    CHECK(baxter_closed_form(1) == 1);
    CHECK(baxter_closed_form(2) == 2);
    CHECK(baxter_closed_form(3) == 6);
    CHECK(baxter_closed_form(4) == 22);
    for (int n = 1; n <= 6; ++n) {
        long brute = 0;
        for_each_permutation(n, [&](const std::vector<int>& word) {
            if (is_baxter(Permutation(word))) ++brute;
        });
        CHECK(baxter_closed_form(n) == brute);
    }
}

TEST_CASE("brute counts of k-clumped permutations") {
    // Cross-validated three ways: clump counting, an independent run-count
    // reimplementation, and avoidance of the eight length-6 patterns below.
    const std::vector<long> three_clumped = {1, 2, 6, 24, 120, 712, 4824};
    for (int n = 1; n <= 7; ++n) {
        CHECK(brute_count_k_clumped(n, 3) == three_clumped[static_cast<std::size_t>(n - 1)]);
        BigCount power = 1;
        power <<= (n - 1);
        CHECK(brute_count_k_clumped(n, 0) == power);
        CHECK(brute_count_k_clumped(n, -1) == 1);
    }
    CHECK_THROWS_AS(brute_count_k_clumped(11, 2), size_guard_error);
}

TEST_CASE("3-clumped equals avoidance of the eight alternation patterns") {
    // A descent with four or more clumps is witnessed by four values between
    // the adjacent pair whose sides alternate, in every position order.
    std::vector<DashedPattern> banned;
    for (const char* text : {"3-5-61-2-4", "3-5-61-4-2", "5-3-61-2-4", "5-3-61-4-2",
                             "2-4-61-3-5", "2-4-61-5-3", "4-2-61-3-5", "4-2-61-5-3"})
        banned.push_back(DashedPattern::parse(text));
    for (int n = 1; n <= 7; ++n) {
        long avoiders = 0;
        for_each_permutation(n, [&](const std::vector<int>& word) {
            if (avoids_all(Permutation(word), banned)) ++avoiders;
        });
        CHECK(brute_count_k_clumped(n, 3) == avoiders);
    }
}

TEST_CASE("parallel growth merges to the sequential result") {
    CountMap level = initial_count_map();
    for (int i = 1; i < 9; ++i) level = grow(level, Engine::two_clumped);
    for (int threads : {2, 3, 8}) {
        CountMap sequential = grow(level, Engine::two_clumped);
        CountMap parallel = grow(level, Engine::two_clumped, GrowOptions{threads, 20'000'000});
        REQUIRE(sequential.entries.size() == parallel.entries.size());
        for (const auto& [code, count] : sequential.entries) {
            REQUIRE(parallel.entries.contains(code));
            CHECK(parallel.entries.at(code) == count);
        }
    }
}

TEST_CASE("memory cap aborts with the level reached") {
    try {
        count_2clumped(9, GrowOptions{1, 10});
        FAIL("expected memory_cap_error");
    } catch (const memory_cap_error& error) {
        CHECK(error.level_reached >= 2);
        CHECK(error.level_reached < 9);
    }
}

TEST_CASE("checkpoint round trip is sorted and exact") {
    CountMap level = initial_count_map();
    for (int i = 1; i < 6; ++i) level = grow(level, Engine::two_clumped);
    const std::string text = count_map_checkpoint(level);
    const CountMap parsed = parse_count_map_checkpoint(text, level.level);
    CHECK(parsed.entries.size() == level.entries.size());
    CHECK(parsed.total() == level.total());
    CHECK(count_map_checkpoint(parsed) == text);

    std::string previous;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = text.find('\n', pos);
        const std::string line = text.substr(pos, end - pos);
        CHECK(previous < line);
        previous = line;
        pos = end + 1;
    }
}
