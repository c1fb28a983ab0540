#pragma once

#include <string>
#include <string_view>

#include "cryptdfa/dfa.hpp"

namespace cryptdfa {

// Versioned line-oriented text format (CRYPTDFA 1). Saving the same automaton
// twice yields byte-identical output; full mode carries the configuration
// payloads, topology mode only the graph.
std::string save_dfa(const Dfa& d, Payload mode);

// Inverse of save_dfa; validates determinism, accept ids and permutation
// bijectivity. Throws format_error (with a line number) or
// version_unsupported.
Dfa load_dfa(std::string_view bytes);

// DOT rendering; accept states are shaped distinctly. Throws too_large
// beyond the node cap.
std::string export_graph(const Dfa& d, std::size_t node_cap = 2000);

}  // namespace cryptdfa
