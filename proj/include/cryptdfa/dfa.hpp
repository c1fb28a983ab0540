#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cryptdfa/core.hpp"

namespace cryptdfa {

// A survivable assignment state [theta, c, b1, b2] packed into one word.
// theta is an injection from the letter prefix a_1..a_m to numerals; the
// domain size m is shared by all entries of a configuration and kept there.
// Layout: digit of a_i in the nibble at shift 56-4*(i-1), then c, b1, b2 in
// the three low bits. Integer compare therefore equals lexicographic compare
// on (digits, c, b1, b2), which is the normative entry order.
namespace pentry {

inline constexpr int digit_shift(int i) { return 56 - 4 * i; }  // i = 0-based letter index

inline int digit(std::uint64_t e, int i) { return static_cast<int>((e >> digit_shift(i)) & 0xF); }
inline std::uint64_t with_digit(std::uint64_t e, int i, int d) {
  return (e & ~(std::uint64_t{0xF} << digit_shift(i))) | (std::uint64_t(d) << digit_shift(i));
}
inline int carry(std::uint64_t e) { return static_cast<int>((e >> 2) & 1); }
inline int b1(std::uint64_t e) { return static_cast<int>((e >> 1) & 1); }
inline int b2(std::uint64_t e) { return static_cast<int>(e & 1); }
inline std::uint64_t flags(int c, int b1, int b2) {
  return static_cast<std::uint64_t>(c << 2 | b1 << 1 | b2);
}
inline std::uint64_t strip_flags(std::uint64_t e) { return e & ~std::uint64_t{7}; }

std::uint64_t pack(const std::vector<int>& digits, int c, int b1, int b2);

}  // namespace pentry

// DFA state payload <d1, d2, ell, P>. m is the shared assignment domain size
// (k once promoted, the number of letters read otherwise). Field order of the
// default comparison is the normative canonical serialization order.
struct Config {
  std::uint8_t d1 = 0, d2 = 0, ell = 1, m = 0;
  std::vector<std::uint64_t> entries;  // sorted, duplicate-free

  auto operator<=>(const Config&) const = default;
};

struct ConfigHash {
  std::size_t operator()(const Config& q) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(q.d1 | (q.d2 << 8) | (q.ell << 16) | (std::uint32_t(q.m) << 24));
    for (std::uint64_t e : q.entries) mix(e);
    return static_cast<std::size_t>(h);
  }
};

Config initial_config();

// Bijection on the letters, with '$' fixed; identity outside the active base.
struct Perm {
  std::array<Symbol, max_base + 1> img;

  static Perm identity() {
    Perm p;
    for (int i = 0; i <= max_base; ++i) p.img[i] = static_cast<Symbol>(i);
    return p;
  }
  Symbol operator()(Symbol x) const { return x == pad ? pad : img[x]; }
  Trigram operator()(const Trigram& t) const { return {(*this)(t.x1), (*this)(t.x2), (*this)(t.x3)}; }
  // (a.then_after(b))(x) = a(b(x))
  Perm compose(const Perm& inner) const {
    Perm r;
    r.img[0] = 0;
    for (int i = 1; i <= max_base; ++i) r.img[i] = (*this)(inner.img[i]);
    return r;
  }
  Perm inverse() const {
    Perm r;
    r.img[0] = 0;
    for (int i = 1; i <= max_base; ++i) r.img[img[i]] = static_cast<Symbol>(i);
    return r;
  }
  bool is_identity() const {
    for (int i = 1; i <= max_base; ++i)
      if (img[i] != i) return false;
    return true;
  }
  auto operator<=>(const Perm&) const = default;
};

enum class Kind { naive, compressed };
enum class Payload { full, topology };
enum class AcceptClass { unique, any };

struct Edge {
  std::uint16_t tri;       // Trigram::code()
  std::int32_t perm = -1;  // index into Dfa::perms, -1 for naive edges
  std::uint32_t dst;
};

inline constexpr std::int64_t no_state = -1;

// Automaton over trigram symbols. Naive and compressed variants share the
// representation; compressed edges carry a permutation label.
struct Dfa {
  int k = 0, s = 0;
  Kind kind = Kind::naive;
  Payload payload = Payload::full;
  std::uint32_t num_states = 0;
  std::uint32_t initial = 0;
  std::int64_t f1 = no_state, f2 = no_state;
  std::vector<std::vector<Edge>> out;  // per state, sorted by trigram code
  std::vector<Config> configs;         // per state; unused for accept states / topology mode
  std::vector<bool> has_config;
  std::vector<Perm> perms;

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& es : out) n += es.size();
    return n;
  }
  bool is_accept(std::uint32_t id) const {
    return static_cast<std::int64_t>(id) == f1 || static_cast<std::int64_t>(id) == f2;
  }
  bool accepts(std::uint32_t id, AcceptClass cls) const {
    if (static_cast<std::int64_t>(id) == f1) return true;
    return cls == AcceptClass::any && static_cast<std::int64_t>(id) == f2;
  }
  // Binary search on the sorted edge list; returns nullptr if undefined.
  const Edge* find_edge(std::uint32_t src, std::uint16_t tri) const;
};

enum class Solvability { unsolvable, unique, multiple };

struct SolveOutcome {
  Solvability cls = Solvability::unsolvable;
  std::vector<Assignment> solutions;  // sorted by assigned digit vector
  std::uint64_t count = 0;
};

}  // namespace cryptdfa
