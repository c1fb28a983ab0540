#include "cryptdfa/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace cryptdfa {

namespace {

// Column-wise backtracking: walk digit positions least-significant first,
// assigning letters as they first appear and pruning on the column sum.
struct ColumnSearch {
  const Cryptarithm& c;
  int k;
  std::size_t n;
  Assignment theta;
  std::uint16_t used = 0;  // digit bitmask
  std::vector<Assignment> found;

  ColumnSearch(const Cryptarithm& c, int k) : c(c), k(k), n(c.size()) {}

  Symbol at(int i, std::size_t j) const {  // j-th least significant, pad beyond
    const auto& w = c.terms[i];
    return j < w.size() ? w[w.size() - 1 - j] : pad;
  }
  bool leading(int i, std::size_t j) const { return j + 1 == c.terms[i].size(); }

  bool assign_ok(Symbol x, int d, std::size_t j, int term) {
    if (d == 0 && leading(term, j)) return false;
    if (theta.assigned(x)) return theta.digit[x] == d;
    if (used & (1 << d)) return false;
    return true;
  }

  void column(std::size_t j, int carry) {
    if (j == n) {
      if (carry == 0) found.push_back(theta);
      return;
    }
    Symbol s1 = at(0, j), s2 = at(1, j), s3 = at(2, j);
    // Enumerate digits for the (at most two) summand letters, derive the sum digit.
    auto try3 = [&](int v1, int v2) {
      int total = carry + v1 + v2;
      int v3 = total % k, cout = total / k;
      if (s3 == pad) {
        if (total != 0) return;
        column(j + 1, 0);
        return;
      }
      bool fresh = !theta.assigned(s3);
      if (!assign_ok(s3, v3, j, 2)) return;
      if (fresh) {
        theta.digit[s3] = static_cast<std::int8_t>(v3);
        used |= 1 << v3;
      }
      column(j + 1, cout);
      if (fresh) {
        theta.digit[s3] = -1;
        used &= ~(1 << v3);
      }
    };
    auto try2 = [&](int v1) {
      if (s2 == pad) {
        try3(v1, 0);
        return;
      }
      if (theta.assigned(s2)) {
        if (theta.digit[s2] != 0 || !leading(1, j)) try3(v1, theta.digit[s2]);
        return;
      }
      for (int d = 0; d < k; ++d) {
        if (!assign_ok(s2, d, j, 1)) continue;
        theta.digit[s2] = static_cast<std::int8_t>(d);
        used |= 1 << d;
        try3(v1, d);
        theta.digit[s2] = -1;
        used &= ~(1 << d);
      }
    };
    if (s1 == pad) {
      try2(0);
    } else if (theta.assigned(s1)) {
      if (theta.digit[s1] != 0 || !leading(0, j)) try2(theta.digit[s1]);
    } else {
      for (int d = 0; d < k; ++d) {
        if (!assign_ok(s1, d, j, 0)) continue;
        theta.digit[s1] = static_cast<std::int8_t>(d);
        used |= 1 << d;
        try2(d);
        theta.digit[s1] = -1;
        used &= ~(1 << d);
      }
    }
  }
};

bool is_solution(const Cryptarithm& c, const Assignment& a, int k) {
  // Value comparison via column addition with explicit carries.
  return check_column_addition(c, a, k);
}

void naive_enumerate(const Cryptarithm& c, const std::vector<Symbol>& letters, int k,
                     std::size_t idx, Assignment& theta, std::uint16_t used,
                     std::vector<Assignment>& out) {
  if (idx == letters.size()) {
    if (is_solution(c, theta, k)) out.push_back(theta);
    return;
  }
  Symbol x = letters[idx];
  for (int d = 0; d < k; ++d) {
    if (used & (1 << d)) continue;
    theta.digit[x] = static_cast<std::int8_t>(d);
    naive_enumerate(c, letters, k, idx + 1, theta, used | (1 << d), out);
    theta.digit[x] = -1;
  }
}

}  // namespace

bool check_column_addition(const Cryptarithm& c, const Assignment& a, int k) {
  std::size_t n = c.size();
  if (c.terms[2].size() < std::max(c.terms[0].size(), c.terms[1].size())) return false;
  for (int i = 0; i < 3; ++i) {
    for (Symbol x : c.terms[i])
      if (!a.assigned(x)) return false;
    if (a.digit[c.terms[i].front()] == 0) return false;  // leading digit
  }
  int carry = 0;
  for (std::size_t j = 0; j < n; ++j) {
    auto digit_at = [&](int i) -> int {
      const auto& w = c.terms[i];
      return j < w.size() ? a.digit[w[w.size() - 1 - j]] : 0;
    };
    int total = carry + digit_at(0) + digit_at(1);
    if (total % k != digit_at(2)) return false;
    carry = total / k;
  }
  return carry == 0;
}

std::vector<Assignment> oracle_solutions(const Cryptarithm& c, int k, bool naive_full) {
  for (int i = 0; i < 3; ++i)
    if (c.terms[i].empty()) fail(Errc::malformed_sequence, "empty term");
  std::vector<Symbol> letters = letters_of(c);
  if (static_cast<int>(letters.size()) > k)
    fail(Errc::base_too_small, "more distinct letters than numerals");
  std::vector<Assignment> out;
  if (naive_full) {
    Assignment theta;
    naive_enumerate(c, letters, k, 0, theta, 0, out);
  } else {
    ColumnSearch search(c, k);
    search.column(0, 0);
    out = std::move(search.found);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SolveOutcome oracle_classify(const Cryptarithm& c, int k) {
  SolveOutcome r;
  r.solutions = oracle_solutions(c, k);
  r.count = r.solutions.size();
  r.cls = r.count == 0 ? Solvability::unsolvable
                       : (r.count == 1 ? Solvability::unique : Solvability::multiple);
  return r;
}

void for_each_canonical(int s, int max_size,
                        const std::function<void(const Cryptarithm&, const Sequence&)>& fn) {
  std::vector<Symbol> w1, w2, w3;
  auto consider = [&]() {
    Cryptarithm c{{w1, w2, w3}};
    Sequence seq = encode_sequence(c);
    if (!is_canonical(seq) || letter_count(seq) > s) return;
    fn(c, seq);
  };
  // Nested enumeration of all strings of the given lengths over a_1..a_s.
  auto for_strings = [&](std::vector<Symbol>& w, int len, auto&& body) {
    w.assign(len, 1);
    for (;;) {
      body();
      int i = len - 1;
      while (i >= 0 && w[i] == s) w[i--] = 1;
      if (i < 0) break;
      ++w[i];
    }
  };
  for (int l3 = 1; l3 <= max_size; ++l3)
    for (int l1 = 1; l1 <= l3; ++l1)
      for (int l2 = 1; l2 <= l3; ++l2)
        for_strings(w3, l3, [&]() { for_strings(w1, l1, [&]() { for_strings(w2, l2, consider); }); });
}

std::vector<Sequence> oracle_catalogue(int k, int s, int max_size, AcceptClass cls,
                                       std::uint64_t budget) {
  if (s < 1 || s > k) fail(Errc::wrong_alphabet, "letter limit out of range");
  // Candidate count: term lengths l1, l2 <= l3 <= max_size over s letters.
  long double candidates = 0;
  for (int l3 = 1; l3 <= max_size; ++l3) {
    long double shorter = 0;
    for (int l = 1; l <= l3; ++l) shorter += std::pow(static_cast<long double>(s), l);
    candidates += std::pow(static_cast<long double>(s), l3) * shorter * shorter;
  }
  if (candidates > static_cast<long double>(budget))
    fail(Errc::budget_exceeded, "catalogue enumeration space exceeds budget");

  std::vector<Sequence> out;
  for_each_canonical(s, max_size, [&](const Cryptarithm& c, const Sequence& seq) {
    auto sols = oracle_solutions(c, k);
    bool keep = cls == AcceptClass::any ? !sols.empty() : sols.size() == 1;
    if (keep) out.push_back(seq);
  });
  std::sort(out.begin(), out.end(),
            [](const Sequence& a, const Sequence& b) { return compare_length_lex(a, b) < 0; });
  return out;
}

}  // namespace cryptdfa
