#pragma once

#include <cstdint>
#include <utility>

#include "cryptdfa/dfa.hpp"

namespace cryptdfa {

// How the representative of a permutative-variant class is searched.
// brute tries all m! letter permutations; refined first partitions letters by
// an invariant color refinement and only permutes within color classes (same
// quotient, required for the larger bases). auto_select picks brute for small
// domains and refined above.
enum class CanonMode { brute, refined, auto_select };

// Variant-class representative of a configuration: the permutation of the
// assignment-domain letters minimizing the canonical serialization, returned
// together with a pi satisfying pi(q) == representative.
std::pair<Config, Perm> canonicalize_config(const Config& q,
                                            CanonMode mode = CanonMode::auto_select);

// Explores from the initial configuration, canonicalizing every successor and
// labeling each edge with the trigram and the canonicalizing permutation;
// the terminal trigram routes to f1/f2 with the identity label.
Dfa build_compressed(int k, int s, std::uint64_t state_cap = 50'000'000,
                     CanonMode mode = CanonMode::auto_select);

}  // namespace cryptdfa
