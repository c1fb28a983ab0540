#include "cryptdfa/dfa.hpp"

#include <algorithm>

namespace cryptdfa {

namespace pentry {

std::uint64_t pack(const std::vector<int>& digits, int c, int b1, int b2) {
  std::uint64_t e = flags(c, b1, b2);
  for (std::size_t i = 0; i < digits.size(); ++i) e = with_digit(e, static_cast<int>(i), digits[i]);
  return e;
}

}  // namespace pentry

Config initial_config() { return Config{0, 0, 1, 0, {pentry::flags(0, 0, 0)}}; }

const Edge* Dfa::find_edge(std::uint32_t src, std::uint16_t tri) const {
  const auto& es = out[src];
  auto it = std::lower_bound(es.begin(), es.end(), tri,
                             [](const Edge& e, std::uint16_t t) { return e.tri < t; });
  if (it == es.end() || it->tri != tri) return nullptr;
  return &*it;
}

}  // namespace cryptdfa
