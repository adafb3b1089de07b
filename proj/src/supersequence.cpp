#include "switchsim/supersequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "switchsim/errors.hpp"
#include "switchsim/perm.hpp"

namespace switchsim {

namespace {

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
    std::vector<std::size_t> base(n);
    std::iota(base.begin(), base.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> perms;
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return perms;
}

struct Search {
    std::size_t n;
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> progress;  // matched prefix length per permutation
    GateSequence current;
    std::size_t limit = 0;
    GateSequence witness;
    bool found = false;

    explicit Search(std::size_t n_in) : n(n_in), perms(all_permutations(n_in)) {
        progress.assign(perms.size(), 0);
    }

    std::size_t max_remaining() const {
        std::size_t worst = 0;
        for (std::size_t p : progress) worst = std::max(worst, n - p);
        return worst;
    }

    void dfs(std::size_t distinct_used) {
        if (found) return;
        if (max_remaining() == 0) {
            found = true;
            witness = current;
            return;
        }
        if (current.size() + max_remaining() > limit) return;
        // Relabeling symmetry: a symbol unseen so far may only enter as
        // the smallest unused one. Adjacent repeats never extend any
        // subsequence, so skip them.
        const std::size_t symbol_cap = std::min(n, distinct_used + 1);
        for (std::size_t s = 0; s < symbol_cap; ++s) {
            if (!current.empty() && current.back() == s) continue;
            std::vector<std::size_t> advanced;
            for (std::size_t p = 0; p < perms.size(); ++p) {
                if (progress[p] < n && perms[p][progress[p]] == s) {
                    ++progress[p];
                    advanced.push_back(p);
                }
            }
            current.push_back(s);
            dfs(std::max(distinct_used, s + 1));
            current.pop_back();
            for (std::size_t p : advanced) --progress[p];
            if (found) return;
        }
    }
};

}  // namespace

bool contains_all_permutations(const GateSequence& seq, std::size_t n) {
    if (n < 1) throw std::invalid_argument("contains_all_permutations: n must be at least 1");
    for (std::size_t s : seq)
        if (s >= n) throw std::invalid_argument("contains_all_permutations: symbol out of range");
    for (const auto& perm : all_permutations(n)) {
        std::size_t matched = 0;
        for (std::size_t s : seq) {
            if (matched < n && perm[matched] == s) ++matched;
        }
        if (matched < n) return false;
    }
    return true;
}

SupersequenceResult minimal_supersequence_length(std::size_t n) {
    if (n < 1) throw std::invalid_argument("minimal_supersequence_length: n must be at least 1");
    if (n > 4)
        throw BudgetError("minimal_supersequence_length: exhaustive search capped at n = 4");
    Search search(n);
    for (std::size_t limit = n; limit <= supersequence_upper_bound(n); ++limit) {
        search.limit = limit;
        search.dfs(0);
        if (search.found) return SupersequenceResult{limit, search.witness};
    }
    // the upper bound is a theorem, so the loop above always returns
    throw std::logic_error("minimal_supersequence_length: bound violated");
}

std::size_t supersequence_upper_bound(std::size_t n) {
    if (n < 1) throw std::invalid_argument("supersequence_upper_bound: n must be at least 1");
    // ceil((3n^2 - 7n + 19) / 3); 3n^2 + 19 > 7n for all n >= 1
    const std::size_t numerator = (3 * n * n + 19) - 7 * n;
    return (numerator + 2) / 3;
}

}  // namespace switchsim
