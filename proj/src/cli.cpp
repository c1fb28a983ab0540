#include "cryptdfa/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cryptdfa/analysis.hpp"
#include "cryptdfa/compressed.hpp"
#include "cryptdfa/construction.hpp"
#include "cryptdfa/oracle.hpp"
#include "cryptdfa/persistence.hpp"

namespace cryptdfa::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_failure, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_failure, "cannot open " + path + " for writing");
  out << bytes;
  if (!out) fail(Errc::io_failure, "write to " + path + " failed");
}

// Obtains the automaton for a query command: an explicit file wins, otherwise
// the CRYPTDFA_CACHE directory is consulted and refreshed, otherwise a fresh
// build. Queries default to the compressed variant.
Dfa obtain_dfa(const std::string& dfa_file, int k, int s, bool compressed) {
  if (!dfa_file.empty()) return load_dfa(read_file(dfa_file));
  std::string cache_dir;
  if (const char* env = std::getenv("CRYPTDFA_CACHE")) cache_dir = env;
  std::string cache_path;
  if (!cache_dir.empty()) {
    std::filesystem::create_directories(cache_dir);
    cache_path = cache_dir + "/" + (compressed ? "compressed" : "naive") + "_k" +
                 std::to_string(k) + "_s" + std::to_string(s) + ".cryptdfa";
    if (std::filesystem::exists(cache_path)) {
      Dfa d = load_dfa(read_file(cache_path));
      if (d.k == k && d.s == s && d.payload == Payload::full) return d;
    }
  }
  Dfa d = compressed ? build_compressed(k, s) : build_naive(k, s);
  if (!cache_path.empty()) write_file(cache_path, save_dfa(d, Payload::full));
  return d;
}

void check_dfa_params(const Dfa& d, int k, int s_needed) {
  if (d.k != k) fail(Errc::wrong_alphabet, "automaton was built for base " + std::to_string(d.k));
  if (d.s < s_needed)
    fail(Errc::wrong_alphabet,
         "automaton letter limit " + std::to_string(d.s) + " below required " +
             std::to_string(s_needed));
  if (d.payload != Payload::full)
    fail(Errc::format_error, "topology-only automaton cannot solve");
}

void print_outcome(std::ostream& out, const SolveOutcome& r,
                   const std::vector<char>* letter_chars, const LetterMap* gamma) {
  switch (r.cls) {
    case Solvability::unsolvable: out << "no solution\n"; return;
    case Solvability::unique: out << "1 solution\n"; break;
    case Solvability::multiple: out << r.count << " solutions\n"; break;
  }
  for (const Assignment& a : r.solutions) {
    // Solutions are over canonical letters; report in original letters when a
    // puzzle was given, keyed alphabetically by the original character.
    std::map<char, int> by_char;
    if (letter_chars && gamma) {
      for (Symbol x = 1; x <= max_letters; ++x) {
        if ((*gamma)[x] == 0) continue;
        by_char[(*letter_chars)[x - 1]] = a.digit[(*gamma)[x]];
      }
    } else {
      for (Symbol x = 1; x <= max_letters; ++x)
        if (a.assigned(x)) by_char[symbol_char(x)] = a.digit[x];
    }
    bool first = true;
    for (auto [ch, d] : by_char) {
      if (!first) out << ' ';
      first = false;
      out << ch << '=' << d;
    }
    out << '\n';
  }
}

int cmd_build(std::ostream& out, int k, int s, bool compressed, const std::string& out_file,
              const std::string& mode) {
  if (s == 0) s = k;
  Dfa d = compressed ? build_compressed(k, s) : build_naive(k, s);
  out << "states " << d.num_states << "\n";
  out << "edges " << d.edge_count() << "\n";
  if (!out_file.empty()) {
    write_file(out_file, save_dfa(d, mode == "topology" ? Payload::topology : Payload::full));
    out << "written " << out_file << "\n";
  }
  return 0;
}

int cmd_solve(std::ostream& out, std::ostream& err, int k, const std::string& puzzle,
              const std::string& sequence, const std::string& dfa_file, bool brute) {
  Cryptarithm c;
  std::vector<char> letter_chars;
  bool from_puzzle = !puzzle.empty();
  if (from_puzzle)
    c = parse_puzzle(puzzle, letter_chars);
  else
    c = decode_sequence(sequence_from_text(sequence));
  auto [canon, gamma] = canonicalize(c, k);
  int s_needed = static_cast<int>(letters_of(canon).size());

  SolveOutcome r;
  // Small letter counts solve through an automaton; wide puzzles at large
  // bases (where no automaton is built) fall back to the oracle.
  bool dfa_feasible = !dfa_file.empty() || s_needed <= 4 || k <= 5;
  if (brute || !dfa_feasible) {
    if (!brute) err << "note: no automaton for base " << k << " with " << s_needed
                    << " letters; using brute-force search\n";
    r = oracle_classify(canon, k);
  } else {
    Dfa d = obtain_dfa(dfa_file, k, s_needed, true);
    check_dfa_params(d, k, s_needed);
    r = run_dfa(d, encode_sequence(canon));
  }
  print_outcome(out, r, from_puzzle ? &letter_chars : nullptr, from_puzzle ? &gamma : nullptr);
  return 0;
}

int cmd_count(std::ostream& out, int k, int n, bool unique, const std::string& dfa_file) {
  Dfa d = obtain_dfa(dfa_file, k, k, true);
  if (d.k != k) fail(Errc::wrong_alphabet, "automaton was built for base " + std::to_string(d.k));
  if (d.s != d.k)
    fail(Errc::wrong_alphabet, "counting needs the unrestricted (s = k) automaton");
  out << count_solvable(d, n, unique ? AcceptClass::unique : AcceptClass::any) << "\n";
  return 0;
}

int cmd_enum(std::ostream& out, int k, bool unique, std::uint64_t limit, int max_size,
             const std::string& dfa_file) {
  Dfa d = obtain_dfa(dfa_file, k, k, true);
  if (d.k != k) fail(Errc::wrong_alphabet, "automaton was built for base " + std::to_string(d.k));
  AcceptClass cls = unique ? AcceptClass::unique : AcceptClass::any;
  std::uint64_t emitted = 0;
  enumerate_solvable(d, cls, max_size, [&](const Sequence& s) {
    out << to_text(s) << "\n";
    ++emitted;
    return limit == 0 || emitted < limit;
  });
  return 0;
}

int cmd_rank(std::ostream& out, int k, bool unique, const std::string& sequence,
             const std::string& dfa_file) {
  Dfa d = obtain_dfa(dfa_file, k, k, true);
  if (d.k != k) fail(Errc::wrong_alphabet, "automaton was built for base " + std::to_string(d.k));
  Sequence s = sequence_from_text(sequence);
  out << rank_sequence(d, s, unique ? AcceptClass::unique : AcceptClass::any) << "\n";
  return 0;
}

int cmd_unrank(std::ostream& out, int k, bool unique, const std::string& index,
               const std::string& dfa_file) {
  Dfa d = obtain_dfa(dfa_file, k, k, true);
  if (d.k != k) fail(Errc::wrong_alphabet, "automaton was built for base " + std::to_string(d.k));
  BigInt i;
  try {
    i = BigInt(index);
  } catch (const std::exception&) {
    fail(Errc::parse_error, "invalid index '" + index + "'");
  }
  out << to_text(unrank_sequence(d, i, unique ? AcceptClass::unique : AcceptClass::any)) << "\n";
  return 0;
}

int cmd_minimize(std::ostream& out, const std::string& dfa_file, const std::string& out_file) {
  Dfa d = load_dfa(read_file(dfa_file));
  Dfa m = minimize(d);
  out << "states " << m.num_states << "\n";
  out << "edges " << m.edge_count() << "\n";
  if (!out_file.empty()) {
    write_file(out_file, save_dfa(m, Payload::topology));
    out << "written " << out_file << "\n";
  }
  return 0;
}

int cmd_verify(std::ostream& out, int k, int s, int max_size) {
  if (s == 0) s = k;
  Dfa naive = build_naive(k, s);
  Dfa comp = build_compressed(k, s);
  std::uint64_t checked = 0;
  std::string counterexample;
  for_each_canonical(s, max_size, [&](const Cryptarithm& c, const Sequence& seq) {
    if (!counterexample.empty()) return;
    ++checked;
    auto expected = oracle_solutions(c, k);
    for (const Dfa* d : {&naive, &comp}) {
      SolveOutcome got = run_dfa(*d, seq);
      if (got.solutions != expected) {
        std::ostringstream ss;
        ss << to_text(seq) << ": oracle found " << expected.size() << " solutions, "
           << (d->kind == Kind::naive ? "naive" : "compressed") << " automaton found "
           << got.count;
        counterexample = ss.str();
        return;
      }
    }
  });
  if (counterexample.empty()) {
    out << "PASS checked " << checked << " sequences\n";
    return 0;
  }
  out << "FAIL " << counterexample << "\n";
  return 1;
}

int cmd_export(std::ostream& out, const std::string& dfa_file, const std::string& out_file,
               std::size_t node_cap) {
  Dfa d = load_dfa(read_file(dfa_file));
  std::string dot = export_graph(d, node_cap);
  if (out_file.empty())
    out << dot;
  else
    write_file(out_file, dot);
  return 0;
}

}  // namespace

Cryptarithm parse_puzzle(const std::string& text, std::vector<char>& letter_chars) {
  auto bad = [&](std::size_t pos, const std::string& what) {
    fail(Errc::parse_error, what + " at position " + std::to_string(pos));
  };
  std::size_t plus = text.find('+'), eq = text.find('=');
  if (plus == std::string::npos) bad(text.size(), "missing '+'");
  if (eq == std::string::npos) bad(text.size(), "missing '='");
  if (eq < plus) bad(eq, "'=' before '+'");
  if (text.find('+', plus + 1) != std::string::npos) bad(text.find('+', plus + 1), "second '+'");
  if (text.find('=', eq + 1) != std::string::npos) bad(text.find('=', eq + 1), "second '='");

  std::array<std::pair<std::size_t, std::size_t>, 3> spans = {
      {{0, plus}, {plus + 1, eq}, {eq + 1, text.size()}}};
  Cryptarithm c;
  letter_chars.clear();
  std::array<Symbol, 26> code{};  // by lowercased letter, 0 = unseen
  for (int i = 0; i < 3; ++i) {
    auto [b, e] = spans[i];
    if (b == e) bad(b, "empty term");
    for (std::size_t p = b; p < e; ++p) {
      unsigned char ch = static_cast<unsigned char>(text[p]);
      if (!std::isalpha(ch)) bad(p, std::string("invalid character '") + text[p] + "'");
      char lower = static_cast<char>(std::tolower(ch));
      Symbol& x = code[lower - 'a'];
      if (x == 0) {
        letter_chars.push_back(lower);
        if (letter_chars.size() > max_letters) bad(p, "too many distinct letters");
        x = static_cast<Symbol>(letter_chars.size());
      }
      c.terms[i].push_back(x);
    }
  }
  return c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cryptarithm automata toolkit"};
  app.require_subcommand(1);

  int k = 0, s = 0, n = 0, max_size = -1;
  std::uint64_t limit = 0;
  bool compressed = false, naive = false, unique = false, brute = false;
  std::string out_file, dfa_file, mode = "full", puzzle, sequence, index;
  std::size_t node_cap = 2000;

  auto* build = app.add_subcommand("build", "build an automaton");
  build->add_option("--base", k, "numeral base")->required();
  build->add_option("--letters", s, "letter alphabet limit (default: base)");
  build->add_flag("--compressed", compressed, "permutation-compressed variant");
  build->add_option("--out", out_file, "save to file");
  build->add_option("--mode", mode, "payload: full or topology")
      ->check(CLI::IsMember({"full", "topology"}));

  auto* solve = app.add_subcommand("solve", "solve a puzzle or sequence");
  solve->add_option("--base", k, "numeral base")->required();
  auto* opt_puzzle = solve->add_option("--puzzle", puzzle, "TERM1+TERM2=TERM3");
  auto* opt_seq = solve->add_option("--sequence", sequence, "trigram sequence text");
  opt_puzzle->excludes(opt_seq);
  auto* opt_dfa = solve->add_option("--dfa", dfa_file, "use a saved automaton");
  solve->add_flag("--brute", brute, "brute-force search only")->excludes(opt_dfa);

  auto* count = app.add_subcommand("count", "count solvable sequences of a size");
  count->add_option("--base", k, "numeral base")->required();
  count->add_option("--size", n, "sequence size")->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--unique", unique, "uniquely solvable only");
  count->add_option("--dfa", dfa_file, "use a saved automaton");

  auto* enum_ = app.add_subcommand("enum", "list solvable sequences in order");
  enum_->add_option("--base", k, "numeral base")->required();
  enum_->add_flag("--unique", unique, "uniquely solvable only");
  auto* opt_limit = enum_->add_option("--limit", limit, "emit at most this many");
  enum_->add_option("--max-size", max_size, "largest sequence size");
  enum_->add_option("--dfa", dfa_file, "use a saved automaton");

  auto* rank = app.add_subcommand("rank", "position of a sequence in the order");
  rank->add_option("--base", k, "numeral base")->required();
  rank->add_option("--sequence", sequence, "trigram sequence text")->required();
  rank->add_flag("--unique", unique, "uniquely solvable only");
  rank->add_option("--dfa", dfa_file, "use a saved automaton");

  auto* unrank = app.add_subcommand("unrank", "sequence at a 1-based position");
  unrank->add_option("--base", k, "numeral base")->required();
  unrank->add_option("--index", index, "1-based rank")->required();
  unrank->add_flag("--unique", unique, "uniquely solvable only");
  unrank->add_option("--dfa", dfa_file, "use a saved automaton");

  auto* minimize_ = app.add_subcommand("minimize", "topology-preserving minimization");
  minimize_->add_option("--dfa", dfa_file, "saved automaton file")->required();
  minimize_->add_option("--out", out_file, "save the quotient to file");

  auto* verify = app.add_subcommand("verify", "cross-check automata against brute force");
  verify->add_option("--base", k, "numeral base")->required();
  verify->add_option("--letters", s, "letter alphabet limit (default: base)");
  verify->add_option("--max-size", max_size, "largest sequence size")->required();

  auto* export_ = app.add_subcommand("export", "render a saved automaton as DOT");
  export_->add_option("--dfa", dfa_file, "saved automaton file")->required();
  export_->add_option("--out", out_file, "write DOT here instead of stdout");
  export_->add_option("--node-cap", node_cap, "refuse beyond this many states");

  std::vector<const char*> argv;
  argv.push_back("cryptdfa");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (k != 0 && (k < 2 || k > max_base)) fail(Errc::base_too_small, "base must be in 2..10");
    if (s != 0 && (s < 1 || s > k)) fail(Errc::wrong_alphabet, "letter limit must be in 1..base");
    if (app.got_subcommand(build)) return cmd_build(out, k, s, compressed, out_file, mode);
    if (app.got_subcommand(solve)) {
      if (puzzle.empty() && sequence.empty()) {
        err << "error: solve needs --puzzle or --sequence\n";
        return 2;
      }
      return cmd_solve(out, err, k, puzzle, sequence, dfa_file, brute);
    }
    if (app.got_subcommand(count)) return cmd_count(out, k, n, unique, dfa_file);
    if (app.got_subcommand(enum_)) {
      if (opt_limit->count() == 0 && max_size < 0) {
        err << "error: enum needs --limit or --max-size\n";
        return 2;
      }
      return cmd_enum(out, k, unique, limit, max_size, dfa_file);
    }
    if (app.got_subcommand(rank)) return cmd_rank(out, k, unique, sequence, dfa_file);
    if (app.got_subcommand(unrank)) return cmd_unrank(out, k, unique, index, dfa_file);
    if (app.got_subcommand(minimize_)) return cmd_minimize(out, dfa_file, out_file);
    if (app.got_subcommand(verify)) return cmd_verify(out, k, s, max_size);
    if (app.got_subcommand(export_)) return cmd_export(out, dfa_file, out_file, node_cap);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cryptdfa::cli
