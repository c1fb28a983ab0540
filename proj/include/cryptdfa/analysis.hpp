#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <vector>

#include "cryptdfa/dfa.hpp"

namespace cryptdfa {

using BigInt = boost::multiprecision::cpp_int;

// Number of length-(n+1) trigram paths from the initial state to f1 (unique)
// or to f1 and f2 combined (any): the number of canonical solvable
// cryptarithm sequences of size n. Exact; naive and compressed automata of
// the same parameters agree.
BigInt count_solvable(const Dfa& d, int n, AcceptClass cls);

// Same number via powers of the adjacency matrix; cross-check backend for
// small automata.
BigInt count_solvable_matrix(const Dfa& d, int n, AcceptClass cls);

// Explicit formulas, available for base 2 (n >= 2, both classes coincide)
// and base 3 class any (n >= 1). Everything else is unsupported.
std::optional<BigInt> closed_form(int k, int n, AcceptClass cls);

// Accepted sequences in length-lexicographic order; the sink returns false
// to stop early. Bounded by max_size when >= 0 and by limit when > 0.
void enumerate_solvable(const Dfa& d, AcceptClass cls, int max_size,
                        const std::function<bool(const Sequence&)>& sink);
std::vector<Sequence> enumerate_solvable(const Dfa& d, AcceptClass cls, std::uint64_t limit,
                                         int max_size = -1);

// 1-based position of s in the enumeration order, via suffix-count tables.
// Throws not_accepted if s is not in the chosen class language.
BigInt rank_sequence(const Dfa& d, const Sequence& s, AcceptClass cls);

// Inverse of rank_sequence. Throws index_out_of_range when i < 1 or the
// sequence would exceed the size cap.
Sequence unrank_sequence(const Dfa& d, const BigInt& i, AcceptClass cls, int max_size_cap = 64);

// Structural content digest used as the suffix-table cache key.
std::uint64_t content_digest(const Dfa& d);

}  // namespace cryptdfa
