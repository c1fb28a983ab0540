#include "cryptdfa/analysis.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace cryptdfa {

namespace {

// Suffix counts: table[r][state] = number of r-edge paths from state to an
// accepting state of the class. Cached per automaton content digest.
struct CountTable {
  std::vector<std::vector<BigInt>> byr;
};

void extend_table(const Dfa& d, AcceptClass cls, CountTable& t, int r) {
  if (t.byr.empty()) {
    std::vector<BigInt> base(d.num_states, 0);
    if (d.f1 != no_state) base[d.f1] = 1;
    if (cls == AcceptClass::any && d.f2 != no_state) base[d.f2] = 1;
    t.byr.push_back(std::move(base));
  }
  while (static_cast<int>(t.byr.size()) <= r) {
    const auto& prev = t.byr.back();
    std::vector<BigInt> next(d.num_states, 0);
    for (std::uint32_t v = 0; v < d.num_states; ++v)
      for (const Edge& e : d.out[v]) next[v] += prev[e.dst];
    t.byr.push_back(std::move(next));
  }
}

std::shared_ptr<CountTable> table_for(const Dfa& d, AcceptClass cls) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, std::shared_ptr<CountTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{content_digest(d), static_cast<int>(cls)}];
  if (!slot) slot = std::make_shared<CountTable>();
  return slot;
}

// Input trigrams available from a state under the accumulated permutation,
// in input lexicographic order.
struct Candidate {
  std::uint16_t input;
  const Edge* edge;
};

std::vector<Candidate> input_candidates(const Dfa& d, std::uint32_t state, const Perm& gamma_inv) {
  std::vector<Candidate> cands;
  cands.reserve(d.out[state].size());
  for (const Edge& e : d.out[state])
    cands.push_back({gamma_inv(Trigram::from_code(e.tri)).code(), &e});
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) { return a.input < b.input; });
  return cands;
}

bool dfs_emit(const Dfa& d, const CountTable& t, std::uint32_t state, const Perm& gamma, int r,
              Sequence& prefix, const std::function<bool(const Sequence&)>& sink) {
  if (r == 0) return sink(prefix);
  Perm inv = gamma.inverse();
  for (const Candidate& c : input_candidates(d, state, inv)) {
    if (t.byr[r - 1][c.edge->dst] == 0) continue;
    prefix.t.push_back(Trigram::from_code(c.input));
    Perm next = c.edge->perm >= 0 ? d.perms[c.edge->perm].compose(gamma) : gamma;
    bool go_on = dfs_emit(d, t, c.edge->dst, next, r - 1, prefix, sink);
    prefix.t.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

std::uint64_t content_digest(const Dfa& d) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(d.k);
  mix(d.s);
  mix(static_cast<std::uint64_t>(d.kind));
  mix(d.num_states);
  mix(d.initial);
  mix(static_cast<std::uint64_t>(d.f1 + 1));
  mix(static_cast<std::uint64_t>(d.f2 + 1));
  for (std::uint32_t v = 0; v < d.num_states; ++v) {
    mix(d.out[v].size());
    for (const Edge& e : d.out[v]) {
      mix(e.tri);
      mix(e.dst);
      if (e.perm >= 0)
        for (int i = 1; i <= max_base; ++i) mix(d.perms[e.perm].img[i]);
    }
  }
  return h;
}

BigInt count_solvable(const Dfa& d, int n, AcceptClass cls) {
  // Forward vector iteration: v[q] = number of length-j paths initial -> q.
  std::vector<BigInt> v(d.num_states, 0), w(d.num_states);
  v[d.initial] = 1;
  for (int j = 0; j < n + 1; ++j) {
    std::fill(w.begin(), w.end(), 0);
    for (std::uint32_t q = 0; q < d.num_states; ++q) {
      if (v[q] == 0) continue;
      for (const Edge& e : d.out[q]) w[e.dst] += v[q];
    }
    std::swap(v, w);
  }
  BigInt total = d.f1 != no_state ? v[d.f1] : BigInt(0);
  if (cls == AcceptClass::any && d.f2 != no_state) total += v[d.f2];
  return total;
}

BigInt count_solvable_matrix(const Dfa& d, int n, AcceptClass cls) {
  std::size_t m = d.num_states;
  using Matrix = std::vector<std::vector<BigInt>>;
  Matrix a(m, std::vector<BigInt>(m, 0));
  for (std::uint32_t v = 0; v < m; ++v)
    for (const Edge& e : d.out[v]) a[v][e.dst] += 1;
  auto mul = [m](const Matrix& x, const Matrix& y) {
    Matrix r(m, std::vector<BigInt>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = 0; l < m; ++l) {
        if (x[i][l] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) r[i][j] += x[i][l] * y[l][j];
      }
    return r;
  };
  Matrix acc(m, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < m; ++i) acc[i][i] = 1;
  int e = n + 1;
  Matrix base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  BigInt total = d.f1 != no_state ? acc[d.initial][d.f1] : BigInt(0);
  if (cls == AcceptClass::any && d.f2 != no_state) total += acc[d.initial][d.f2];
  return total;
}

std::optional<BigInt> closed_form(int k, int n, AcceptClass cls) {
  auto pw = [](int b, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  if (k == 2 && n >= 2) return 6 * pw(4, n - 2) - 3 * pw(2, n - 2);
  if (k == 3 && cls == AcceptClass::any && n >= 1)
    return 4 * pw(9, n - 1) - 2 * pw(5, n - 1) - pw(3, n - 1);
  return std::nullopt;
}

void enumerate_solvable(const Dfa& d, AcceptClass cls, int max_size,
                        const std::function<bool(const Sequence&)>& sink) {
  auto table = table_for(d, cls);
  constexpr int hard_cap = 10000;
  int cap = max_size >= 0 ? max_size : hard_cap;
  for (int n = 1; n <= cap; ++n) {
    extend_table(d, cls, *table, n + 1);
    if (table->byr[n + 1][d.initial] == 0) continue;
    Sequence prefix;
    if (!dfs_emit(d, *table, d.initial, Perm::identity(), n + 1, prefix, sink)) return;
  }
}

std::vector<Sequence> enumerate_solvable(const Dfa& d, AcceptClass cls, std::uint64_t limit,
                                         int max_size) {
  std::vector<Sequence> out;
  enumerate_solvable(d, cls, max_size, [&](const Sequence& s) {
    out.push_back(s);
    return limit == 0 || out.size() < limit;
  });
  if (limit > 0 && out.size() > limit) out.resize(limit);
  return out;
}

BigInt rank_sequence(const Dfa& d, const Sequence& s, AcceptClass cls) {
  validate_sequence(s);
  auto table = table_for(d, cls);
  int n = static_cast<int>(s.size());
  extend_table(d, cls, *table, n + 1);

  BigInt rank = 0;
  for (int m = 1; m < n; ++m) rank += table->byr[m + 1][d.initial];

  std::uint32_t state = d.initial;
  Perm gamma = Perm::identity();
  for (int j = 0; j <= n; ++j) {
    int remaining = n + 1 - j;
    Perm inv = gamma.inverse();
    const Edge* chosen = nullptr;
    for (const Candidate& c : input_candidates(d, state, inv)) {
      if (c.input < s.t[j].code()) {
        rank += table->byr[remaining - 1][c.edge->dst];
      } else if (c.input == s.t[j].code()) {
        chosen = c.edge;
        break;
      } else {
        break;
      }
    }
    if (!chosen) fail(Errc::not_accepted, "sequence not accepted in the chosen class");
    state = chosen->dst;
    if (chosen->perm >= 0) gamma = d.perms[chosen->perm].compose(gamma);
  }
  if (!d.accepts(state, cls)) fail(Errc::not_accepted, "sequence not accepted in the chosen class");
  return rank + 1;
}

Sequence unrank_sequence(const Dfa& d, const BigInt& i, AcceptClass cls, int max_size_cap) {
  if (i < 1) fail(Errc::index_out_of_range, "index must be >= 1");
  auto table = table_for(d, cls);
  BigInt remaining_index = i;
  for (int n = 1; n <= max_size_cap; ++n) {
    extend_table(d, cls, *table, n + 1);
    const BigInt& total = table->byr[n + 1][d.initial];
    if (remaining_index > total) {
      remaining_index -= total;
      continue;
    }
    Sequence out;
    std::uint32_t state = d.initial;
    Perm gamma = Perm::identity();
    for (int j = 0; j <= n; ++j) {
      int remaining = n + 1 - j;
      Perm inv = gamma.inverse();
      bool stepped = false;
      for (const Candidate& c : input_candidates(d, state, inv)) {
        const BigInt& cnt = table->byr[remaining - 1][c.edge->dst];
        if (remaining_index > cnt) {
          remaining_index -= cnt;
          continue;
        }
        out.t.push_back(Trigram::from_code(c.input));
        state = c.edge->dst;
        if (c.edge->perm >= 0) gamma = d.perms[c.edge->perm].compose(gamma);
        stepped = true;
        break;
      }
      if (!stepped) fail(Errc::index_out_of_range, "inconsistent suffix counts");
    }
    return out;
  }
  fail(Errc::index_out_of_range, "index beyond the configured size cap");
}

}  // namespace cryptdfa
