#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cryptdfa/error.hpp"

namespace cryptdfa {

// Letters are numbered 1..26 and render as 'a'..'z'; 0 is the pad '$'.
// The symbol order $ < a < b < ... is the one used everywhere below.
using Symbol = std::uint8_t;

inline constexpr Symbol pad = 0;
inline constexpr int max_base = 10;  // numerals 0..9
inline constexpr int max_letters = 26;

char symbol_char(Symbol x);
Symbol symbol_from_char(char c);  // throws parse_error on anything else

// One digit position of the three terms: (term1, term2, sum).
struct Trigram {
  Symbol x1 = pad, x2 = pad, x3 = pad;

  // Order-preserving integer key: comparing codes == lexicographic compare.
  std::uint16_t code() const { return static_cast<std::uint16_t>((x1 << 10) | (x2 << 5) | x3); }
  static Trigram from_code(std::uint16_t c) {
    return Trigram{static_cast<Symbol>((c >> 10) & 31), static_cast<Symbol>((c >> 5) & 31),
                   static_cast<Symbol>(c & 31)};
  }
  bool terminal() const { return x1 == pad && x2 == pad && x3 == pad; }

  auto operator<=>(const Trigram&) const = default;
};

std::string to_text(const Trigram& t);

// Two summands and a sum, most-significant letter first.
struct Cryptarithm {
  std::array<std::vector<Symbol>, 3> terms;

  std::size_t size() const;
  bool operator==(const Cryptarithm&) const = default;
};

std::string to_text(const Cryptarithm& c);

// Trigram-encoded interleaved form; the last trigram is all-pad and no
// earlier one is.
struct Sequence {
  std::vector<Trigram> t;

  std::size_t size() const { return t.size() - 1; }
  bool operator==(const Sequence&) const = default;
};

std::string to_text(const Sequence& s);
// Parses the text rendering ('a'..'z', '$', cosmetic spaces allowed) and
// validates the Sequence invariants. Throws malformed_sequence.
Sequence sequence_from_text(std::string_view text);
// Invariant check used by parsing and decode.
void validate_sequence(const Sequence& s);

// Injective partial letter -> numeral map, indexed by letter code.
struct Assignment {
  std::array<std::int8_t, max_letters + 1> digit;  // -1 = unassigned

  Assignment() { digit.fill(-1); }
  bool assigned(Symbol x) const { return digit[x] >= 0; }

  auto operator<=>(const Assignment&) const = default;
};

std::string to_text(const Assignment& a);

// The interleaving psi: least-significant digits first, '$'-padded,
// terminated by the all-pad trigram.
Sequence encode_sequence(const Cryptarithm& c);

// Inverse of encode_sequence. Only sequences whose third term is at least as
// long as the other two are accepted (others can never be solvable).
Cryptarithm decode_sequence(const Sequence& s);

// Letter bijection, indexed by original letter code; 0 where undefined.
using LetterMap = std::array<Symbol, max_letters + 1>;

// Relabels so that the j-th distinct letter of the sequential form is a_j.
// Returns the canonical cryptarithm and the bijection gamma from original
// letters to canonical letters. Throws too_many_letters if more than k
// distinct letters occur.
std::pair<Cryptarithm, LetterMap> canonicalize(const Cryptarithm& c, int k);

bool is_canonical(const Sequence& s);

// Length-lexicographic order: shorter first, ties broken symbol-wise.
std::strong_ordering compare_length_lex(const Sequence& a, const Sequence& b);

// Distinct letters occurring in a cryptarithm / sequence.
std::vector<Symbol> letters_of(const Cryptarithm& c);
int letter_count(const Sequence& s);  // for canonical sequences: letters are a_1..a_u

}  // namespace cryptdfa
