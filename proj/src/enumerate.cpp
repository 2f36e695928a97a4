#include "grec/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "grec/clumps.hpp"
#include "grec/errors.hpp"

namespace grec {

BigCount CountMap::total() const {
    BigCount sum = 0;
    for (const auto& [string, multiplicity] : entries) sum += multiplicity;
    return sum;
}

LetterString encode_2clumped(const Permutation& perm) {
    if (!is_k_clumped(perm, 2))
        throw std::invalid_argument("encode_2clumped requires a 2-clumped permutation");
    const int n = perm.size();
    LetterString out;
    std::vector<bool> before(static_cast<std::size_t>(n) + 1, false);
    for (int i = 0; i < n; ++i) {
        const int a = perm[i];
        if (a == n) {
            out += 'n';
            before[static_cast<std::size_t>(a)] = true;
            continue;
        }
        // Classify {b > a : b before a} as empty, everything, a proper prefix
        // interval [a+1, c], or a proper suffix interval [d, n].
        int present = 0;
        for (int b = a + 1; b <= n; ++b)
            if (before[static_cast<std::size_t>(b)]) ++present;
        if (present == 0) {
            out += 'e';
        } else if (present == n - a) {
            out += 'f';
        } else {
            bool prefix = true;
            for (int b = a + 1; b <= a + present; ++b)
                if (!before[static_cast<std::size_t>(b)]) {
                    prefix = false;
                    break;
                }
            bool suffix = true;
            for (int b = n - present + 1; b <= n; ++b)
                if (!before[static_cast<std::size_t>(b)]) {
                    suffix = false;
                    break;
                }
            if (prefix)
                out += 'l';
            else if (suffix)
                out += 'u';
        }
        before[static_cast<std::size_t>(a)] = true;
    }
    return out;
}

namespace {

// Letter rewrites applied around an insertion; 0 deletes the letter.
struct RewriteRules {
    char prefix[5];  // n e f l u
    char suffix[5];
};

constexpr RewriteRules two_clumped_rules = {
    {'e', 'e', 'l', 'l', 0},  // n->e, e->e, f->l, l->l, u deleted
    {'f', 'u', 'f', 0, 'u'},  // n->f, e->u, f->f, l deleted, u->u
};

constexpr RewriteRules one_clumped_rules = {
    {'e', 'e', 0, 0, 0},  // n->e, e->e, f deleted
    {'f', 0, 'f', 0, 0},  // n->f, e deleted, f->f
};

int letter_slot(char c) {
    switch (c) {
        case 'n': return 0;
        case 'e': return 1;
        case 'f': return 2;
        case 'l': return 3;
        case 'u': return 4;
    }
    throw std::invalid_argument("letter outside the alphabet {n,e,f,l,u}");
}

std::vector<LetterString> children(const LetterString& s, const RewriteRules& rules) {
    std::vector<LetterString> result;
    const std::size_t len = s.size();
    result.reserve(len + 1);
    for (std::size_t at = 0; at <= len; ++at) {
        LetterString child;
        child.reserve(len + 1);
        for (std::size_t j = 0; j < at; ++j) {
            const char mapped = rules.prefix[letter_slot(s[j])];
            if (mapped) child += mapped;
        }
        child += 'n';
        for (std::size_t j = at; j < len; ++j) {
            const char mapped = rules.suffix[letter_slot(s[j])];
            if (mapped) child += mapped;
        }
        result.push_back(std::move(child));
    }
    return result;
}

const RewriteRules& rules_for(Engine engine) {
    return engine == Engine::two_clumped ? two_clumped_rules : one_clumped_rules;
}

}  // namespace

std::vector<LetterString> children_2clumped(const LetterString& s) {
    return children(s, two_clumped_rules);
}

std::vector<LetterString> children_1clumped(const LetterString& s) {
    return children(s, one_clumped_rules);
}

CountMap initial_count_map() {
    CountMap seed;
    seed.level = 1;
    seed.entries.emplace("n", 1);
    return seed;
}

CountMap grow(const CountMap& level, Engine engine, const GrowOptions& options) {
    const RewriteRules& rules = rules_for(engine);
    const int threads = std::max(1, options.threads);

    std::vector<const std::pair<const LetterString, BigCount>*> items;
    items.reserve(level.entries.size());
    for (const auto& entry : level.entries) items.push_back(&entry);

    CountMap next;
    next.level = level.level + 1;
    if (threads == 1) {
        for (const auto* item : items)
            for (LetterString& child : children(item->first, rules))
                next.entries[std::move(child)] += item->second;
    } else {
        std::vector<std::unordered_map<LetterString, BigCount>> partial(
            static_cast<std::size_t>(threads));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                auto& local = partial[static_cast<std::size_t>(t)];
                for (std::size_t i = static_cast<std::size_t>(t); i < items.size();
                     i += static_cast<std::size_t>(threads))
                    for (LetterString& child : children(items[i]->first, rules))
                        local[std::move(child)] += items[i]->second;
            });
        }
        for (std::thread& worker : pool) worker.join();
        for (const auto& local : partial)
            for (const auto& [child, multiplicity] : local)
                next.entries[child] += multiplicity;
    }

    if (next.entries.size() > options.max_distinct)
        throw memory_cap_error("distinct-string cap exceeded", level.level);
    return next;
}

namespace {

std::vector<BigCount> count_levels(int n_max, Engine engine, const GrowOptions& options) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    std::vector<BigCount> totals;
    totals.reserve(static_cast<std::size_t>(n_max));
    CountMap level = initial_count_map();
    totals.push_back(level.total());
    while (level.level < n_max) {
        level = grow(level, engine, options);
        totals.push_back(level.total());
    }
    return totals;
}

}  // namespace

std::vector<BigCount> count_2clumped(int n_max, const GrowOptions& options) {
    return count_levels(n_max, Engine::two_clumped, options);
}

std::vector<BigCount> count_1clumped(int n_max, const GrowOptions& options) {
    return count_levels(n_max, Engine::one_clumped, options);
}

std::vector<BigCount> count_1clumped_table(int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    // G[i][j] is the multiplicity of e^i n f^j; children of (i,j) are (p, j+1)
    // for p <= i and (i+1, j') for j' <= j.
    std::vector<BigCount> totals;
    totals.reserve(static_cast<std::size_t>(n_max));
    std::vector<std::vector<BigCount>> table{{BigCount(1)}};
    totals.emplace_back(1);
    for (int level = 2; level <= n_max; ++level) {
        std::vector<std::vector<BigCount>> next(
            static_cast<std::size_t>(level),
            std::vector<BigCount>(static_cast<std::size_t>(level), BigCount(0)));
        for (std::size_t i = 0; i < table.size(); ++i)
            for (std::size_t j = 0; j < table[i].size(); ++j) {
                if (table[i][j] == 0) continue;
                for (std::size_t p = 0; p <= i; ++p) next[p][j + 1] += table[i][j];
                for (std::size_t jp = 0; jp <= j; ++jp) next[i + 1][jp] += table[i][j];
            }
        table = std::move(next);
        BigCount total = 0;
        for (const auto& row : table)
            for (const BigCount& value : row) total += value;
        totals.push_back(std::move(total));
    }
    return totals;
}

BigCount baxter_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    mpz_class sum = 0;
    mpz_class term;
    for (int k = 1; k <= n; ++k) {
        mpz_class a, b, c;
        mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(n + 1),
                     static_cast<unsigned long>(k - 1));
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + 1),
                     static_cast<unsigned long>(k));
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + 1),
                     static_cast<unsigned long>(k + 1));
        term = a * b * c;
        sum += term;
    }
    const mpz_class divisor = mpz_class(n + 1) * mpz_class((n + 1) * n / 2);
    if (!mpz_divisible_p(sum.get_mpz_t(), divisor.get_mpz_t()))
        throw internal_error("Baxter formula division is not exact");
    return sum / divisor;
}

BigCount brute_count_k_clumped(int n, int k) {
    if (n > 10) throw size_guard_error("brute_count_k_clumped is guarded at n <= 10");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    long count = 0;
    for_each_permutation(n, [&](const std::vector<int>& word) {
        if (is_k_clumped(Permutation(word), k)) ++count;
    });
    return BigCount(count);
}

std::string count_map_checkpoint(const CountMap& level) {
    std::vector<const std::pair<const LetterString, BigCount>*> items;
    items.reserve(level.entries.size());
    for (const auto& entry : level.entries) items.push_back(&entry);
    std::sort(items.begin(), items.end(),
              [](const auto* a, const auto* b) { return a->first < b->first; });
    std::string out;
    for (const auto* item : items) {
        out += item->first;
        out += '\t';
        out += item->second.get_str();
        out += '\n';
    }
    return out;
}

CountMap parse_count_map_checkpoint(std::string_view text, int level) {
    CountMap map;
    map.level = level;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw std::invalid_argument("checkpoint line lacks a tab separator");
        LetterString key(line.substr(0, tab));
        for (char c : key) letter_slot(c);
        mpz_class value(std::string(line.substr(tab + 1)), 10);
        if (value <= 0) throw std::invalid_argument("checkpoint multiplicity must be positive");
        map.entries[std::move(key)] = std::move(value);
    }
    return map;
}

}  // namespace grec
