#include "cryptdfa/compressed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "cryptdfa/construction.hpp"

namespace cryptdfa {

namespace {

// p[i] = letter placed at position i+1; entries keep their flags, letter i+1
// takes the digit of p[i].
std::vector<std::uint64_t> remap_entries(const std::vector<std::uint64_t>& entries,
                                         const std::vector<int>& p) {
  std::vector<std::uint64_t> out;
  out.reserve(entries.size());
  for (std::uint64_t e : entries) {
    std::uint64_t ne = e & 7;
    for (std::size_t i = 0; i < p.size(); ++i)
      ne = pentry::with_digit(ne, static_cast<int>(i), pentry::digit(e, p[i] - 1));
    out.push_back(ne);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Perm perm_from_positions(const std::vector<int>& p) {
  Perm pi = Perm::identity();
  for (std::size_t i = 0; i < p.size(); ++i) pi.img[i + 1] = static_cast<Symbol>(p[i]);
  return pi;
}

struct Best {
  std::vector<std::uint64_t> entries;
  std::vector<int> p;
  bool set = false;

  void offer(const std::vector<std::uint64_t>& cand, const std::vector<int>& cp) {
    if (!set || cand < entries) {
      entries = cand;
      p = cp;
      set = true;
    }
  }
};

void canonicalize_brute(const Config& q, Best& best) {
  std::vector<int> p(q.m);
  std::iota(p.begin(), p.end(), 1);
  do {
    best.offer(remap_entries(q.entries, p), p);
  } while (std::next_permutation(p.begin(), p.end()));
}

// Invariant color refinement on letters: a letter's color is built from the
// digits it takes across entries, paired with entry colors; entry colors are
// built from flags, digit image, and the letter colors of their digits.
// Only permutations within a color class can map a configuration onto a
// variant, so the representative search permutes class blocks independently.
void canonicalize_refined(const Config& q, Best& best) {
  int m = q.m;
  std::size_t ne = q.entries.size();
  std::vector<std::uint32_t> eattr(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    std::uint32_t mask = 0;
    for (int i = 0; i < m; ++i) mask |= 1u << pentry::digit(q.entries[e], i);
    eattr[e] = static_cast<std::uint32_t>(q.entries[e] & 7) | (mask << 3);
  }
  std::vector<std::uint32_t> ecolor(eattr), lcolor(m, 0);
  std::size_t letter_classes = 0;
  for (;;) {
    // Ids must depend on the key values only (numbered in sorted key order),
    // never on the letter or entry numbering, so that variant configurations
    // get corresponding colors.
    std::map<std::vector<std::pair<std::uint32_t, int>>, std::uint32_t> lkeys;
    std::vector<std::vector<std::pair<std::uint32_t, int>>> lkey(m);
    for (int x = 0; x < m; ++x) {
      auto& key = lkey[x];
      key.resize(ne);
      for (std::size_t e = 0; e < ne; ++e) key[e] = {ecolor[e], pentry::digit(q.entries[e], x)};
      std::sort(key.begin(), key.end());
      lkeys.emplace(key, 0);
    }
    std::uint32_t next_id = 0;
    for (auto& [key, id] : lkeys) id = next_id++;
    for (int x = 0; x < m; ++x) lcolor[x] = lkeys[lkey[x]];
    std::size_t count = lkeys.size();
    if (count == letter_classes || count == static_cast<std::size_t>(m)) break;
    letter_classes = count;
    std::map<std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, int>>>, std::uint32_t>
        ekeys;
    std::vector<std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, int>>>> ekey(ne);
    for (std::size_t e = 0; e < ne; ++e) {
      std::vector<std::pair<std::uint32_t, int>> key(m);
      for (int x = 0; x < m; ++x) key[x] = {lcolor[x], pentry::digit(q.entries[e], x)};
      std::sort(key.begin(), key.end());
      ekey[e] = {eattr[e], std::move(key)};
      ekeys.emplace(ekey[e], 0);
    }
    next_id = 0;
    for (auto& [key, id] : ekeys) id = next_id++;
    for (std::size_t e = 0; e < ne; ++e) ecolor[e] = ekeys[ekey[e]];
  }
  // Letters grouped by color, classes in canonical (color id) order.
  std::uint32_t nc = *std::max_element(lcolor.begin(), lcolor.end()) + 1;
  std::vector<std::vector<int>> classes(nc);
  for (int x = 0; x < m; ++x) classes[lcolor[x]].push_back(x + 1);

  std::vector<int> p;
  p.reserve(m);
  auto rec = [&](auto&& self, std::size_t ci) -> void {
    if (ci == classes.size()) {
      best.offer(remap_entries(q.entries, p), p);
      return;
    }
    std::vector<int> block = classes[ci];
    do {
      std::size_t at = p.size();
      p.insert(p.end(), block.begin(), block.end());
      self(self, ci + 1);
      p.resize(at);
    } while (std::next_permutation(block.begin(), block.end()));
  };
  rec(rec, 0);
}

}  // namespace

std::pair<Config, Perm> canonicalize_config(const Config& q, CanonMode mode) {
  if (q.m <= 1) return {q, Perm::identity()};
  Best best;
  bool refined = mode == CanonMode::refined || (mode == CanonMode::auto_select && q.m >= 6);
  if (refined)
    canonicalize_refined(q, best);
  else
    canonicalize_brute(q, best);
  Config rep{q.d1, q.d2, q.ell, q.m, std::move(best.entries)};
  return {std::move(rep), perm_from_positions(best.p)};
}

Dfa build_compressed(int k, int s, std::uint64_t state_cap, CanonMode mode) {
  if (k < 2 || k > max_base) fail(Errc::wrong_alphabet, "base must be in 2..10");
  if (s < 1 || s > k) fail(Errc::wrong_alphabet, "letter limit must be in 1..k");
  Dfa d;
  d.k = k;
  d.s = s;
  d.kind = Kind::compressed;

  std::unordered_map<Config, std::uint32_t, ConfigHash> ids;
  std::vector<std::uint32_t> worklist;
  std::map<Perm, std::int32_t> perm_ids;
  auto perm_id = [&](const Perm& p) {
    auto it = perm_ids.find(p);
    if (it != perm_ids.end()) return it->second;
    std::int32_t id = static_cast<std::int32_t>(d.perms.size());
    d.perms.push_back(p);
    perm_ids.emplace(p, id);
    return id;
  };
  auto new_state = [&]() {
    std::uint32_t id = d.num_states++;
    if (d.num_states > state_cap) fail(Errc::resource_limit, "state cap exceeded");
    d.out.emplace_back();
    d.configs.emplace_back();
    d.has_config.push_back(false);
    return id;
  };
  auto config_state = [&](Config&& q) {
    auto it = ids.find(q);
    if (it != ids.end()) return it->second;
    std::uint32_t id = new_state();
    d.configs[id] = q;
    d.has_config[id] = true;
    ids.emplace(std::move(q), id);
    worklist.push_back(id);
    return id;
  };
  auto accept_state = [&](std::int64_t& f) {
    if (f == no_state) f = new_state();
    return static_cast<std::uint32_t>(f);
  };

  std::int32_t identity = perm_id(Perm::identity());
  d.initial = config_state(initial_config());
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    std::uint32_t src = worklist[head];
    for (Symbol x1 = 0; x1 <= s; ++x1)
      for (Symbol x2 = 0; x2 <= s; ++x2)
        for (Symbol x3 = 0; x3 <= s; ++x3) {
          Trigram t{x1, x2, x3};
          auto q2 = config_step(d.configs[src], t, k, s);
          if (!q2) continue;
          if (t.terminal()) {
            std::uint32_t dst = accept_state(q2->entries.size() == 1 ? d.f1 : d.f2);
            d.out[src].push_back(Edge{t.code(), identity, dst});
          } else {
            auto [rep, pi] = canonicalize_config(*q2, mode);
            std::uint32_t dst = config_state(std::move(rep));
            // pi maps the raw successor onto its representative; the run
            // accumulator needs the map back from representative letters to
            // raw ones, so the edge carries the inverse.
            d.out[src].push_back(Edge{t.code(), perm_id(pi.inverse()), dst});
          }
        }
  }
  return d;
}

}  // namespace cryptdfa
