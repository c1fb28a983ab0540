#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cryptdfa/oracle.hpp"

using namespace cryptdfa;

namespace {

Cryptarithm cry(const char* t1, const char* t2, const char* t3) {
  Cryptarithm c;
  const char* ts[3] = {t1, t2, t3};
  for (int i = 0; i < 3; ++i)
    for (const char* p = ts[i]; *p; ++p) c.terms[i].push_back(symbol_from_char(*p));
  return c;
}

}  // namespace

TEST_CASE("send+more=money has the one classic solution") {
  Cryptarithm c = cry("send", "more", "money");
  auto sols = oracle_solutions(c, 10);
  REQUIRE(sols.size() == 1);
  const Assignment& a = sols[0];
  CHECK(a.digit[symbol_from_char('s')] == 9);
  CHECK(a.digit[symbol_from_char('e')] == 5);
  CHECK(a.digit[symbol_from_char('n')] == 6);
  CHECK(a.digit[symbol_from_char('d')] == 7);
  CHECK(a.digit[symbol_from_char('m')] == 1);
  CHECK(a.digit[symbol_from_char('o')] == 0);
  CHECK(a.digit[symbol_from_char('r')] == 8);
  CHECK(a.digit[symbol_from_char('y')] == 2);
  CHECK(check_column_addition(c, a, 10));
  CHECK(oracle_classify(c, 10).cls == Solvability::unique);
}

TEST_CASE("p+p=pa solvable in binary only") {
  Cryptarithm c = cry("a", "a", "ab");  // p -> a, a -> b
  auto sols = oracle_solutions(c, 2);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].digit[1] == 1);
  CHECK(sols[0].digit[2] == 0);
  CHECK(oracle_solutions(c, 10).empty());
  CHECK(oracle_classify(c, 10).cls == Solvability::unsolvable);
}

TEST_CASE("leading zeros are rejected") {
  // a+b=c at base 3: candidates must keep every leading digit nonzero.
  Cryptarithm c = cry("a", "b", "c");
  auto sols = oracle_solutions(c, 3);
  REQUIRE(sols.size() == 0);  // 1+2=0 or 2+1=0 carry out; no carry-free sum fits
}

TEST_CASE("a+a=b at base 3") {
  Cryptarithm c = cry("a", "a", "b");
  auto sols = oracle_solutions(c, 3);
  REQUIRE(sols.size() == 1);  // a=1, b=2
  CHECK(sols[0].digit[1] == 1);
  CHECK(sols[0].digit[2] == 2);
}

TEST_CASE("pruned search equals naive enumeration") {
  for (int k = 2; k <= 4; ++k) {
    for_each_canonical(k, 3, [&](const Cryptarithm& c, const Sequence&) {
      auto fast = oracle_solutions(c, k);
      auto slow = oracle_solutions(c, k, true);
      REQUIRE(fast == slow);
      for (const Assignment& a : fast) REQUIRE(check_column_addition(c, a, k));
    });
  }
}

TEST_CASE("too many letters rejected") {
  Cryptarithm c = cry("send", "more", "money");
  CHECK_THROWS_AS(oracle_solutions(c, 7), Error);
}

TEST_CASE("catalogue matches published small counts") {
  auto any1 = oracle_catalogue(3, 3, 1, AcceptClass::any);
  REQUIRE(any1.size() == 1);  // G_3(1) = 1
  CHECK(to_text(any1[0]) == "aab$$$");
  auto any2 = oracle_catalogue(3, 3, 2, AcceptClass::any);
  CHECK(any2.size() == 1 + 23);  // G_3(1) + G_3(2)
  auto uniq2 = oracle_catalogue(3, 3, 2, AcceptClass::unique);
  CHECK(uniq2.size() == 1 + 19);  // F_3(1) + F_3(2)
  auto bin2 = oracle_catalogue(2, 2, 2, AcceptClass::any);
  CHECK(bin2.size() == 0 + 3);  // G_2(1) + G_2(2)
}

TEST_CASE("catalogue is length-lex sorted") {
  auto seqs = oracle_catalogue(3, 3, 3, AcceptClass::any);
  for (std::size_t i = 1; i < seqs.size(); ++i)
    REQUIRE(compare_length_lex(seqs[i - 1], seqs[i]) < 0);
}

TEST_CASE("catalogue budget guard") {
  CHECK_THROWS_AS(oracle_catalogue(10, 10, 12, AcceptClass::any, 1000), Error);
  CHECK_THROWS_AS(oracle_catalogue(3, 4, 2, AcceptClass::any), Error);  // s > k
}

TEST_CASE("column checker rejects wrong claims") {
  Cryptarithm c = cry("a", "a", "b");
  Assignment a;
  a.digit[1] = 1;
  a.digit[2] = 0;  // 1+1=0 is wrong at base 3
  CHECK_FALSE(check_column_addition(c, a, 3));
  a.digit[2] = 2;
  CHECK(check_column_addition(c, a, 3));
  Assignment partial;
  partial.digit[1] = 1;  // b unassigned
  CHECK_FALSE(check_column_addition(c, partial, 3));
}
