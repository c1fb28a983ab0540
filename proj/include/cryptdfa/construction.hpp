#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cryptdfa/dfa.hpp"

namespace cryptdfa {

// Context for stepping a single survivor entry: the active base, the shared
// assignment domain size before the step, and the final domain size after it
// (larger than the letters read only under promotion). Letters above mdom are
// the fresh ones; canonical gating guarantees they are mdom+1, mdom+2, ...
struct EntryCtx {
  int k;
  int mdom;
  int msz;
};

// All successors of one survivor entry under a trigram: injective assignment
// extensions satisfying the column equation with carry, updated leading-zero
// guards, and the sum-leading-zero filter (both summands ended with carry 0
// would force every remaining sum digit to 0).
std::vector<std::uint64_t> entry_step(std::uint64_t entry, const Trigram& t, const EntryCtx& ctx);

// One step of the configuration relation: trigram well-formedness, ended-term
// and canonicity gates, then the merged, deduplicated survivor set. Returns
// nothing when any gate fails or no entry survives. The terminal trigram
// yields the final configuration whose survivor count selects f1 or f2.
std::optional<Config> config_step(const Config& q, const Trigram& t, int k, int s);

// Exhaustive closure of config_step from <0,0,1,{[empty,0,0,0]}>, breadth
// first; equal configurations share one state. Throws resource_limit when
// the state count exceeds the cap.
Dfa build_naive(int k, int s, std::uint64_t state_cap = 50'000'000);

// Runs a canonical sequence through a built automaton (either kind) and
// extracts the full solution set from the pre-terminal configuration.
SolveOutcome run_dfa(const Dfa& d, const Sequence& s);

// Partition-refinement minimization with the two accept classes kept
// distinguished; no sink state is added, so states are equivalent only if
// they agree on which trigrams have transitions. Result is topology-only.
Dfa minimize(const Dfa& d);

// States from which an accepting state is reachable (trimness check).
std::vector<bool> coaccessible(const Dfa& d);

}  // namespace cryptdfa
