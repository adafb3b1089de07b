#ifndef SWITCHSIM_SUPERSEQUENCE_HPP
#define SWITCHSIM_SUPERSEQUENCE_HPP

#include <cstddef>
#include <vector>

namespace switchsim {

/// Operator indices in query order.
using GateSequence = std::vector<std::size_t>;

/// True iff every permutation of (0..n-1) occurs as a (not necessarily
/// contiguous) subsequence of seq.
bool contains_all_permutations(const GateSequence& seq, std::size_t n);

struct SupersequenceResult {
    std::size_t length = 0;
    GateSequence witness;
};

/// Exact minimum length of a sequence containing all n! permutations as
/// subsequences, with a witness, by iterative-deepening DFS. Search is
/// budget-capped at n <= 4 (BudgetError beyond).
SupersequenceResult minimal_supersequence_length(std::size_t n);

/// ceil(n^2 - 7n/3 + 19/3), an upper bound on the minimum above.
std::size_t supersequence_upper_bound(std::size_t n);

}  // namespace switchsim

#endif
