#include "cryptdfa/construction.hpp"

#include <algorithm>
#include <unordered_map>

namespace cryptdfa {

std::vector<std::uint64_t> entry_step(std::uint64_t entry, const Trigram& t, const EntryCtx& ctx) {
  std::vector<std::uint64_t> out;
  int c = pentry::carry(entry);
  if ((pentry::b1(entry) == 0 && t.x1 == pad) || (pentry::b2(entry) == 0 && t.x2 == pad))
    return out;
  // Both summands ended with no carry: every further sum digit is forced to 0,
  // ending in a sum term whose leading digit is 0.
  if (t.x1 == pad && t.x2 == pad && t.x3 != pad && c == 0) return out;
  if (t.x3 == pad) {  // terminal trigram
    if (c != 0) return out;
    out.push_back(pentry::strip_flags(entry) | pentry::flags(0, 1, 1));
    return out;
  }

  int dg[max_base];
  std::uint16_t used = 0;
  for (int i = 0; i < ctx.mdom; ++i) {
    dg[i] = pentry::digit(entry, i);
    used |= static_cast<std::uint16_t>(1 << dg[i]);
  }
  for (int i = ctx.mdom; i < ctx.msz; ++i) dg[i] = -1;
  int assigned = ctx.mdom;

  // Enumerate feasible digits for one slot, assigning fresh letters in place.
  auto choices = [&](Symbol x, auto&& body) {
    if (x == pad) {
      body(0);
      return;
    }
    int i = x - 1;
    if (dg[i] >= 0) {
      body(dg[i]);
      return;
    }
    for (int d = 0; d < ctx.k; ++d) {
      if (used & (1 << d)) continue;
      dg[i] = d;
      used |= static_cast<std::uint16_t>(1 << d);
      ++assigned;
      body(d);
      dg[i] = -1;
      used &= static_cast<std::uint16_t>(~(1 << d));
      --assigned;
    }
  };

  choices(t.x1, [&](int v1) {
    choices(t.x2, [&](int v2) {
      int total = c + v1 + v2;
      int v3 = total % ctx.k;
      int carry_out = total / ctx.k;
      int i3 = t.x3 - 1;
      bool fresh3 = dg[i3] < 0;
      if (fresh3) {
        if (used & (1 << v3)) return;
        dg[i3] = v3;
        used |= static_cast<std::uint16_t>(1 << v3);
        ++assigned;
      } else if (dg[i3] != v3) {
        return;
      }
      // Promotion: one letter short of the full base leaves a single unused
      // numeral, so the remaining assignment is forced.
      bool promoted = assigned < ctx.msz;
      if (promoted) {
        int d = 0;
        while (used & (1 << d)) ++d;
        dg[ctx.msz - 1] = d;
        used |= static_cast<std::uint16_t>(1 << d);
        ++assigned;
      }
      int nb1 = (t.x1 != pad && dg[t.x1 - 1] == 0) ? 0 : 1;
      int nb2 = (t.x2 != pad && dg[t.x2 - 1] == 0) ? 0 : 1;
      std::uint64_t ne = pentry::flags(carry_out, nb1, nb2);
      for (int i = 0; i < ctx.msz; ++i) ne = pentry::with_digit(ne, i, dg[i]);
      out.push_back(ne);
      if (promoted) {
        used &= static_cast<std::uint16_t>(~(1 << dg[ctx.msz - 1]));
        dg[ctx.msz - 1] = -1;
        --assigned;
      }
      if (fresh3) {
        used &= static_cast<std::uint16_t>(~(1 << v3));
        dg[i3] = -1;
        --assigned;
      }
    });
  });
  return out;
}

std::optional<Config> config_step(const Config& q, const Trigram& t, int k, int s) {
  if (t.x3 == pad && !(t.x1 == pad && t.x2 == pad)) return std::nullopt;
  if ((q.d1 && t.x1 != pad) || (q.d2 && t.x2 != pad)) return std::nullopt;
  // Canonicity gate: a slot may use a seen letter or the next fresh one,
  // counting left to right across the three slots.
  int u = q.m;
  for (Symbol x : {t.x1, t.x2, t.x3}) {
    if (x == pad || x <= u) continue;
    if (x == u + 1 && u < s)
      ++u;
    else
      return std::nullopt;
  }
  int ell = std::min(k, u + 1);
  int msz = (s == k && ell == k) ? k : u;

  EntryCtx ctx{k, q.m, msz};
  std::vector<std::uint64_t> merged;
  for (std::uint64_t e : q.entries) {
    auto next = entry_step(e, t, ctx);
    merged.insert(merged.end(), next.begin(), next.end());
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  if (merged.empty()) return std::nullopt;
  return Config{static_cast<std::uint8_t>(t.x1 == pad), static_cast<std::uint8_t>(t.x2 == pad),
                static_cast<std::uint8_t>(ell), static_cast<std::uint8_t>(msz), std::move(merged)};
}

namespace {

void validate_base(int k, int s) {
  if (k < 2 || k > max_base) fail(Errc::wrong_alphabet, "base must be in 2..10");
  if (s < 1 || s > k) fail(Errc::wrong_alphabet, "letter limit must be in 1..k");
}

}  // namespace

Dfa build_naive(int k, int s, std::uint64_t state_cap) {
  validate_base(k, s);
  Dfa d;
  d.k = k;
  d.s = s;
  d.kind = Kind::naive;

  std::unordered_map<Config, std::uint32_t, ConfigHash> ids;
  std::vector<std::uint32_t> worklist;  // config states in discovery order

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

  d.initial = config_state(initial_config());
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    std::uint32_t src = worklist[head];
    for (Symbol x1 = 0; x1 <= s; ++x1)
      for (Symbol x2 = 0; x2 <= s; ++x2)
        for (Symbol x3 = 0; x3 <= s; ++x3) {
          Trigram t{x1, x2, x3};
          auto q2 = config_step(d.configs[src], t, k, s);
          if (!q2) continue;
          std::uint32_t dst;
          if (t.terminal())
            dst = accept_state(q2->entries.size() == 1 ? d.f1 : d.f2);
          else
            dst = config_state(std::move(*q2));
          d.out[src].push_back(Edge{t.code(), -1, dst});
        }
  }
  return d;
}

SolveOutcome run_dfa(const Dfa& d, const Sequence& s) {
  validate_sequence(s);
  if (!is_canonical(s)) fail(Errc::not_canonical, "sequence is not canonical");
  int used_letters = letter_count(s);
  if (used_letters > d.s) fail(Errc::wrong_alphabet, "letter beyond the automaton alphabet");
  if (d.payload != Payload::full)
    fail(Errc::format_error, "topology-mode automaton cannot extract solutions");

  std::uint32_t state = d.initial;
  Perm gamma = Perm::identity();
  std::uint32_t pre_state = state;
  Perm pre_gamma = gamma;
  for (std::size_t j = 0; j < s.t.size(); ++j) {
    pre_state = state;
    pre_gamma = gamma;
    Trigram mapped = gamma(s.t[j]);
    const Edge* e = d.find_edge(state, mapped.code());
    if (!e) return SolveOutcome{};
    state = e->dst;
    if (e->perm >= 0) gamma = d.perms[e->perm].compose(gamma);
  }
  SolveOutcome r;
  if (static_cast<std::int64_t>(state) == d.f1)
    r.cls = Solvability::unique;
  else if (static_cast<std::int64_t>(state) == d.f2)
    r.cls = Solvability::multiple;
  else
    return SolveOutcome{};  // cannot happen on a well-formed sequence

  const Config& q = d.configs[pre_state];
  for (std::uint64_t e : q.entries) {
    if (pentry::carry(e) != 0 || !pentry::b1(e) || !pentry::b2(e)) continue;
    Assignment a;
    for (Symbol x = 1; x <= used_letters; ++x)
      a.digit[x] = static_cast<std::int8_t>(pentry::digit(e, pre_gamma(x) - 1));
    r.solutions.push_back(a);
  }
  std::sort(r.solutions.begin(), r.solutions.end());
  r.count = r.solutions.size();
  return r;
}

Dfa minimize(const Dfa& d) {
  std::uint32_t n = d.num_states;
  std::vector<std::uint32_t> cls(n, 0);
  if (d.f1 != no_state) cls[d.f1] = 1;
  if (d.f2 != no_state) cls[d.f2] = 2;
  std::size_t num_classes = 1 + (d.f1 != no_state) + (d.f2 != no_state);

  for (;;) {
    std::unordered_map<std::size_t, std::vector<std::uint32_t>> buckets;  // sig hash -> states
    std::vector<std::uint32_t> next(n);
    std::size_t count = 0;
    // Group by (class, per-trigram successor classes); hash then confirm by
    // comparing against the bucket representative to dodge collisions.
    auto signature_equal = [&](std::uint32_t a, std::uint32_t b) {
      if (cls[a] != cls[b] || d.out[a].size() != d.out[b].size()) return false;
      for (std::size_t i = 0; i < d.out[a].size(); ++i)
        if (d.out[a][i].tri != d.out[b][i].tri || cls[d.out[a][i].dst] != cls[d.out[b][i].dst])
          return false;
      return true;
    };
    auto signature_hash = [&](std::uint32_t v) {
      std::uint64_t h = 1469598103934665603ull ^ cls[v];
      for (const Edge& e : d.out[v]) {
        h = (h * 1099511628211ull) ^ e.tri;
        h = (h * 1099511628211ull) ^ cls[e.dst];
      }
      return static_cast<std::size_t>(h);
    };
    std::vector<std::uint32_t> reps;
    for (std::uint32_t v = 0; v < n; ++v) {
      auto& bucket = buckets[signature_hash(v)];
      std::uint32_t found = UINT32_MAX;
      for (std::uint32_t rep : bucket)
        if (signature_equal(rep, v)) {
          found = next[rep];
          break;
        }
      if (found == UINT32_MAX) {
        found = static_cast<std::uint32_t>(count++);
        bucket.push_back(v);
        reps.push_back(v);
      }
      next[v] = found;
    }
    if (count == num_classes) {
      // Stable: build the quotient.
      Dfa m;
      m.k = d.k;
      m.s = d.s;
      m.kind = Kind::naive;
      m.payload = Payload::topology;
      m.num_states = static_cast<std::uint32_t>(count);
      m.out.resize(count);
      m.configs.resize(count);
      m.has_config.assign(count, false);
      m.initial = next[d.initial];
      if (d.f1 != no_state) m.f1 = next[d.f1];
      if (d.f2 != no_state) m.f2 = next[d.f2];
      for (std::size_t c = 0; c < count; ++c)
        for (const Edge& e : d.out[reps[c]])
          m.out[c].push_back(Edge{e.tri, -1, next[e.dst]});
      return m;
    }
    num_classes = count;
    cls = std::move(next);
  }
}

std::vector<bool> coaccessible(const Dfa& d) {
  std::vector<std::vector<std::uint32_t>> rev(d.num_states);
  for (std::uint32_t v = 0; v < d.num_states; ++v)
    for (const Edge& e : d.out[v]) rev[e.dst].push_back(v);
  std::vector<bool> ok(d.num_states, false);
  std::vector<std::uint32_t> stack;
  for (std::int64_t f : {d.f1, d.f2})
    if (f != no_state) {
      ok[f] = true;
      stack.push_back(static_cast<std::uint32_t>(f));
    }
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t u : rev[v])
      if (!ok[u]) {
        ok[u] = true;
        stack.push_back(u);
      }
  }
  return ok;
}

}  // namespace cryptdfa
