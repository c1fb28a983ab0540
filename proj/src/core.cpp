#include "cryptdfa/core.hpp"

#include <algorithm>
#include <sstream>

namespace cryptdfa {

char symbol_char(Symbol x) { return x == pad ? '$' : static_cast<char>('a' + x - 1); }

Symbol symbol_from_char(char c) {
  if (c == '$') return pad;
  if (c >= 'a' && c <= 'z') return static_cast<Symbol>(c - 'a' + 1);
  if (c >= 'A' && c <= 'Z') return static_cast<Symbol>(c - 'A' + 1);
  fail(Errc::parse_error, std::string("invalid symbol character '") + c + "'");
}

std::string to_text(const Trigram& t) {
  return {symbol_char(t.x1), symbol_char(t.x2), symbol_char(t.x3)};
}

std::size_t Cryptarithm::size() const {
  return std::max({terms[0].size(), terms[1].size(), terms[2].size()});
}

std::string to_text(const Cryptarithm& c) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (i) out += i == 1 ? '+' : '=';
    for (Symbol x : c.terms[i]) out += symbol_char(x);
  }
  return out;
}

std::string to_text(const Sequence& s) {
  std::string out;
  for (const Trigram& t : s.t) out += to_text(t);
  return out;
}

void validate_sequence(const Sequence& s) {
  if (s.t.empty() || !s.t.back().terminal())
    fail(Errc::malformed_sequence, "sequence must end with the all-pad trigram");
  bool done1 = false, done2 = false;
  for (std::size_t j = 0; j < s.t.size(); ++j) {
    const Trigram& t = s.t[j];
    bool last = j + 1 == s.t.size();
    if (t.terminal() && !last)
      fail(Errc::malformed_sequence, "all-pad trigram before the end");
    if (t.x3 == pad && !t.terminal())
      fail(Errc::malformed_sequence, "slot 3 pad requires slots 1 and 2 pad");
    if (done1 && t.x1 != pad) fail(Errc::malformed_sequence, "term 1 resumes after ending");
    if (done2 && t.x2 != pad) fail(Errc::malformed_sequence, "term 2 resumes after ending");
    done1 = done1 || t.x1 == pad;
    done2 = done2 || t.x2 == pad;
  }
}

Sequence sequence_from_text(std::string_view text) {
  std::vector<Symbol> syms;
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    try {
      syms.push_back(symbol_from_char(c));
    } catch (const Error&) {
      fail(Errc::malformed_sequence, std::string("invalid character '") + c + "' in sequence");
    }
  }
  if (syms.empty() || syms.size() % 3 != 0)
    fail(Errc::malformed_sequence, "sequence length must be a positive multiple of 3");
  Sequence s;
  for (std::size_t i = 0; i < syms.size(); i += 3)
    s.t.push_back(Trigram{syms[i], syms[i + 1], syms[i + 2]});
  validate_sequence(s);
  return s;
}

std::string to_text(const Assignment& a) {
  std::string out;
  for (Symbol x = 1; x <= max_letters; ++x) {
    if (!a.assigned(x)) continue;
    if (!out.empty()) out += ',';
    out += symbol_char(x);
    out += '=';
    out += static_cast<char>('0' + a.digit[x]);
  }
  return out;
}

Sequence encode_sequence(const Cryptarithm& c) {
  std::size_t n = c.size();
  Sequence s;
  s.t.reserve(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    auto at = [&](int i) -> Symbol {
      const auto& w = c.terms[i];
      return j < w.size() ? w[w.size() - 1 - j] : pad;  // j-th least significant
    };
    s.t.push_back(Trigram{at(0), at(1), at(2)});
  }
  s.t.push_back(Trigram{});
  return s;
}

Cryptarithm decode_sequence(const Sequence& s) {
  validate_sequence(s);
  Cryptarithm c;
  for (std::size_t j = 0; j + 1 < s.t.size(); ++j) {
    const Trigram& t = s.t[j];
    Symbol xs[3] = {t.x1, t.x2, t.x3};
    for (int i = 0; i < 3; ++i)
      if (xs[i] != pad) c.terms[i].insert(c.terms[i].begin(), xs[i]);
  }
  for (int i = 0; i < 3; ++i)
    if (c.terms[i].empty()) fail(Errc::malformed_sequence, "empty term");
  return c;
}

std::pair<Cryptarithm, LetterMap> canonicalize(const Cryptarithm& c, int k) {
  Sequence s = encode_sequence(c);
  LetterMap gamma{};
  int next = 0;
  for (const Trigram& t : s.t) {
    for (Symbol x : {t.x1, t.x2, t.x3}) {
      if (x == pad || gamma[x] != 0) continue;
      ++next;
      if (next > k) fail(Errc::too_many_letters, "more than k distinct letters");
      gamma[x] = static_cast<Symbol>(next);
    }
  }
  Cryptarithm out;
  for (int i = 0; i < 3; ++i) {
    out.terms[i].reserve(c.terms[i].size());
    for (Symbol x : c.terms[i]) out.terms[i].push_back(gamma[x]);
  }
  return {out, gamma};
}

bool is_canonical(const Sequence& s) {
  int seen = 0;
  for (const Trigram& t : s.t) {
    for (Symbol x : {t.x1, t.x2, t.x3}) {
      if (x == pad) continue;
      if (x == seen + 1)
        ++seen;
      else if (x > seen)
        return false;
    }
  }
  return true;
}

std::strong_ordering compare_length_lex(const Sequence& a, const Sequence& b) {
  if (a.t.size() != b.t.size()) return a.t.size() <=> b.t.size();
  for (std::size_t j = 0; j < a.t.size(); ++j)
    if (auto cmp = a.t[j] <=> b.t[j]; cmp != 0) return cmp;
  return std::strong_ordering::equal;
}

std::vector<Symbol> letters_of(const Cryptarithm& c) {
  std::array<bool, max_letters + 1> seen{};
  std::vector<Symbol> out;
  for (const auto& w : c.terms)
    for (Symbol x : w)
      if (!seen[x]) {
        seen[x] = true;
        out.push_back(x);
      }
  std::sort(out.begin(), out.end());
  return out;
}

int letter_count(const Sequence& s) {
  int hi = 0;
  for (const Trigram& t : s.t)
    for (Symbol x : {t.x1, t.x2, t.x3}) hi = std::max(hi, static_cast<int>(x));
  return hi;
}

}  // namespace cryptdfa
