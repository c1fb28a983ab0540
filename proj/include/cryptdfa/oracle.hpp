#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cryptdfa/dfa.hpp"

namespace cryptdfa {

// Brute-force reference semantics, independent of the automata machinery.

// All injections theta from the letters of c into 0..k-1 with
// theta(w1)+theta(w2)=theta(w3) under base-k positional value and a nonzero
// leading digit for each term. Sorted by assigned digit vector.
// naive_full forces plain enumeration of every injection instead of the
// column-pruned backtracking, to de-correlate the two in tests.
std::vector<Assignment> oracle_solutions(const Cryptarithm& c, int k, bool naive_full = false);

SolveOutcome oracle_classify(const Cryptarithm& c, int k);

// All canonical sequences over the s-letter alphabet of size <= max_size
// whose cryptarithms are base-k solvable (any) or uniquely solvable (unique),
// in length-lexicographic order. Enumerates canonical term triples directly.
std::vector<Sequence> oracle_catalogue(int k, int s, int max_size, AcceptClass cls,
                                       std::uint64_t budget = 100'000'000);

// Independent column-addition re-check of a claimed solution.
bool check_column_addition(const Cryptarithm& c, const Assignment& a, int k);

// Every canonical cryptarithm (third term longest) over a_1..a_s of size
// <= max_size, with its sequential form, in no particular order.
void for_each_canonical(int s, int max_size,
                        const std::function<void(const Cryptarithm&, const Sequence&)>& fn);

}  // namespace cryptdfa
