#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "cryptdfa/analysis.hpp"
#include "cryptdfa/compressed.hpp"
#include "cryptdfa/construction.hpp"
#include "cryptdfa/oracle.hpp"
#include "cryptdfa/persistence.hpp"

using namespace cryptdfa;

namespace {

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("full roundtrip is byte canonical") {
  for (int k = 2; k <= 4; ++k) {
    Dfa d = build_compressed(k, k);
    std::string bytes = save_dfa(d, Payload::full);
    Dfa loaded = load_dfa(bytes);
    CHECK(save_dfa(loaded, Payload::full) == bytes);
    CHECK(loaded.num_states == d.num_states);
    CHECK(loaded.edge_count() == d.edge_count());
    CHECK(loaded.k == d.k);
    CHECK(loaded.s == d.s);
    CHECK(loaded.f1 == d.f1);
    CHECK(loaded.f2 == d.f2);
  }
}

TEST_CASE("roundtrip preserves run outcomes") {
  for (Kind kind : {Kind::naive, Kind::compressed}) {
    Dfa d = kind == Kind::naive ? build_naive(3, 3) : build_compressed(3, 3);
    Dfa loaded = load_dfa(save_dfa(d, Payload::full));
    for_each_canonical(3, 3, [&](const Cryptarithm&, const Sequence& seq) {
      SolveOutcome a = run_dfa(d, seq);
      SolveOutcome b = run_dfa(loaded, seq);
      REQUIRE(a.solutions == b.solutions);
      REQUIRE(a.cls == b.cls);
    });
  }
}

TEST_CASE("topology roundtrip counts match") {
  Dfa naive = build_naive(3, 3);
  Dfa comp = build_compressed(3, 3);
  Dfa tn = load_dfa(save_dfa(naive, Payload::topology));
  Dfa tc = load_dfa(save_dfa(comp, Payload::topology));
  CHECK(tn.payload == Payload::topology);
  for (int n = 1; n <= 8; ++n)
    for (AcceptClass cls : {AcceptClass::unique, AcceptClass::any}) {
      BigInt expect = count_solvable(naive, n, cls);
      CHECK(count_solvable(tn, n, cls) == expect);
      CHECK(count_solvable(tc, n, cls) == expect);
    }
  // Topology payload cannot extract solutions or be re-saved in full mode.
  CHECK_THROWS_AS(run_dfa(tn, sequence_from_text("aab$$$")), Error);
  CHECK_THROWS_AS(save_dfa(tn, Payload::full), Error);
}

TEST_CASE("minimized automata survive the roundtrip") {
  Dfa m = minimize(build_naive(2, 2));
  std::string bytes = save_dfa(m, Payload::topology);
  Dfa loaded = load_dfa(bytes);
  CHECK(loaded.num_states == 27);
  CHECK(loaded.edge_count() == 111);
  CHECK(save_dfa(loaded, Payload::topology) == bytes);
}

TEST_CASE("format details") {
  Dfa d = build_compressed(2, 2);
  std::string bytes = save_dfa(d, Payload::full);
  CHECK(bytes.rfind("CRYPTDFA 1\n", 0) == 0);
  CHECK(bytes.find("base 2\n") != std::string::npos);
  CHECK(bytes.find("letters 2\n") != std::string::npos);
  CHECK(bytes.find("kind compressed\n") != std::string::npos);
  CHECK(bytes.find("mode full\n") != std::string::npos);
  // The initial configuration has the empty assignment prefix.
  CHECK(bytes.find("config 0 0 0 1 0 {:000}\n") != std::string::npos);
}

TEST_CASE("malformed files are rejected") {
  Dfa d = build_compressed(2, 2);
  std::string good = save_dfa(d, Payload::full);

  CHECK_THROWS_AS(load_dfa(""), Error);
  CHECK_THROWS_AS(load_dfa("CRYPTDFA 2\nbase 2\n"), Error);  // future version
  CHECK_THROWS_AS(load_dfa("NOTDFA 1\n"), Error);
  CHECK_THROWS_AS(load_dfa(good.substr(0, good.size() / 2)), Error);  // truncated
  CHECK_THROWS_AS(load_dfa(replace_once(good, "base 2", "base 99")), Error);
  CHECK_THROWS_AS(load_dfa(replace_once(good, "kind compressed", "kind weird")), Error);
  CHECK_THROWS_AS(load_dfa(good + "garbage record\n"), Error);
  // Permutation that is not a bijection.
  std::string twisted = good;
  auto at = twisted.find(" ab ");
  REQUIRE(at != std::string::npos);
  twisted.replace(at, 4, " aa ");
  CHECK_THROWS_AS(load_dfa(twisted), Error);
}

TEST_CASE("nondeterministic edge lists are rejected") {
  std::string text =
      "CRYPTDFA 1\n"
      "base 2\n"
      "letters 2\n"
      "kind naive\n"
      "mode topology\n"
      "initial 0\n"
      "accept1 1\n"
      "accept2 -\n"
      "edge 0 aab - 1\n"
      "edge 0 aab - 0\n";
  CHECK_THROWS_AS(load_dfa(text), Error);
  std::string out_of_accept =
      "CRYPTDFA 1\n"
      "base 2\n"
      "letters 2\n"
      "kind naive\n"
      "mode topology\n"
      "initial 0\n"
      "accept1 1\n"
      "accept2 -\n"
      "edge 1 aab - 0\n";
  CHECK_THROWS_AS(load_dfa(out_of_accept), Error);
}

TEST_CASE("full mode requires configurations everywhere") {
  std::string text =
      "CRYPTDFA 1\n"
      "base 2\n"
      "letters 2\n"
      "kind naive\n"
      "mode full\n"
      "initial 0\n"
      "accept1 1\n"
      "accept2 -\n"
      "edge 0 aab - 1\n";
  CHECK_THROWS_AS(load_dfa(text), Error);  // state 0 has no config record
}

TEST_CASE("dot export") {
  Dfa d = build_compressed(2, 2);
  std::string dot = export_graph(d);
  CHECK(dot.rfind("digraph", 0) == 0);
  // One labeled edge line per transition.
  std::size_t arrows = 0;
  for (std::size_t at = dot.find(" -> "); at != std::string::npos; at = dot.find(" -> ", at + 1))
    ++arrows;
  CHECK(arrows == d.edge_count());
  CHECK(dot.find("doublecircle") != std::string::npos);
  // Base 2 has no multiply solvable sequence, hence no second accept state;
  // base 3 renders both accept shapes.
  CHECK(dot.find("doubleoctagon") == std::string::npos);
  CHECK(export_graph(build_compressed(3, 3)).find("doubleoctagon") != std::string::npos);
  CHECK(dot.find('/') != std::string::npos);  // permutation labels present
  CHECK_THROWS_AS(export_graph(d, 5), Error);
  // Naive edges carry no permutation suffix.
  std::string dot_naive = export_graph(build_naive(2, 2));
  CHECK(dot_naive.find('/') == std::string::npos);
}
