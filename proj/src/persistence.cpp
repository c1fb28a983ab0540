#include "cryptdfa/persistence.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace cryptdfa {

namespace {

constexpr std::string_view magic = "CRYPTDFA";
constexpr int format_version = 1;

std::string entry_text(std::uint64_t e, int m) {
  std::string out;
  for (int i = 0; i < m; ++i) out += static_cast<char>('0' + pentry::digit(e, i));
  out += ':';
  out += static_cast<char>('0' + pentry::carry(e));
  out += static_cast<char>('0' + pentry::b1(e));
  out += static_cast<char>('0' + pentry::b2(e));
  return out;
}

struct Parser {
  std::string_view bytes;
  std::size_t pos = 0;
  int line_no = 0;

  bool next_line(std::string_view& line) {
    if (pos >= bytes.size()) return false;
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) {
      line = bytes.substr(pos);
      pos = bytes.size();
    } else {
      line = bytes.substr(pos, end - pos);
      pos = end + 1;
    }
    ++line_no;
    return true;
  }
  [[noreturn]] void bad(const std::string& why) const {
    fail(Errc::format_error, "line " + std::to_string(line_no) + ": " + why);
  }
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(const Parser& p, std::string_view tok) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) p.bad("expected a number");
  return v;
}

}  // namespace

std::string save_dfa(const Dfa& d, Payload mode) {
  std::ostringstream out;
  out << magic << ' ' << format_version << '\n';
  out << "base " << d.k << '\n';
  out << "letters " << d.s << '\n';
  out << "kind " << (d.kind == Kind::naive ? "naive" : "compressed") << '\n';
  out << "mode " << (mode == Payload::full ? "full" : "topology") << '\n';
  out << "initial " << d.initial << '\n';
  if (d.f1 == no_state)
    out << "accept1 -\n";
  else
    out << "accept1 " << d.f1 << '\n';
  if (d.f2 == no_state)
    out << "accept2 -\n";
  else
    out << "accept2 " << d.f2 << '\n';
  if (mode == Payload::full) {
    if (d.payload != Payload::full)
      fail(Errc::format_error, "topology-only automaton cannot be saved in full mode");
    for (std::uint32_t v = 0; v < d.num_states; ++v) {
      if (!d.has_config[v]) continue;
      const Config& q = d.configs[v];
      out << "config " << v << ' ' << int(q.d1) << ' ' << int(q.d2) << ' ' << int(q.ell) << ' '
          << int(q.m) << " {";
      for (std::size_t i = 0; i < q.entries.size(); ++i) {
        if (i) out << ',';
        out << entry_text(q.entries[i], q.m);
      }
      out << "}\n";
    }
  }
  for (std::uint32_t v = 0; v < d.num_states; ++v) {
    for (const Edge& e : d.out[v]) {
      out << "edge " << v << ' ' << to_text(Trigram::from_code(e.tri)) << ' ';
      if (e.perm < 0) {
        out << '-';
      } else {
        const Perm& p = d.perms[e.perm];
        for (int i = 1; i <= d.k; ++i) out << symbol_char(p.img[i]);
      }
      out << ' ' << e.dst << '\n';
    }
  }
  return out.str();
}

Dfa load_dfa(std::string_view bytes) {
  Parser p{bytes};
  std::string_view line;
  auto expect_line = [&]() {
    if (!p.next_line(line)) p.bad("unexpected end of file");
  };

  expect_line();
  {
    auto toks = split(line);
    if (toks.size() != 2 || toks[0] != magic) p.bad("missing CRYPTDFA header");
    if (parse_uint(p, toks[1]) != format_version)
      fail(Errc::version_unsupported, "unsupported format version");
  }
  Dfa d;
  Payload mode = Payload::full;
  auto header_field = [&](std::string_view key) {
    expect_line();
    auto toks = split(line);
    if (toks.size() != 2 || toks[0] != key) p.bad("expected '" + std::string(key) + "' line");
    return toks[1];
  };
  d.k = static_cast<int>(parse_uint(p, header_field("base")));
  d.s = static_cast<int>(parse_uint(p, header_field("letters")));
  if (d.k < 2 || d.k > max_base || d.s < 1 || d.s > d.k) p.bad("base/letters out of range");
  {
    auto v = header_field("kind");
    if (v == "naive")
      d.kind = Kind::naive;
    else if (v == "compressed")
      d.kind = Kind::compressed;
    else
      p.bad("unknown kind");
  }
  {
    auto v = header_field("mode");
    if (v == "full")
      mode = Payload::full;
    else if (v == "topology")
      mode = Payload::topology;
    else
      p.bad("unknown mode");
  }
  d.payload = mode;
  d.initial = static_cast<std::uint32_t>(parse_uint(p, header_field("initial")));
  auto accept_field = [&](std::string_view key) -> std::int64_t {
    auto v = header_field(key);
    if (v == "-") return no_state;
    return static_cast<std::int64_t>(parse_uint(p, v));
  };
  d.f1 = accept_field("accept1");
  d.f2 = accept_field("accept2");

  std::uint32_t max_id = d.initial;
  auto note_id = [&max_id](std::uint32_t id) { max_id = std::max(max_id, id); };
  if (d.f1 != no_state) note_id(static_cast<std::uint32_t>(d.f1));
  if (d.f2 != no_state) note_id(static_cast<std::uint32_t>(d.f2));

  struct RawEdge {
    std::uint32_t src, dst;
    std::uint16_t tri;
    std::int32_t perm;
  };
  std::vector<RawEdge> raw_edges;
  std::map<std::uint32_t, Config> raw_configs;
  std::map<Perm, std::int32_t> perm_ids;

  while (p.next_line(line)) {
    auto toks = split(line);
    if (toks.empty()) continue;
    if (toks[0] == "config") {
      if (mode != Payload::full) p.bad("config record in topology mode");
      if (toks.size() != 7) p.bad("config record needs 7 fields");
      std::uint32_t id = static_cast<std::uint32_t>(parse_uint(p, toks[1]));
      Config q;
      q.d1 = static_cast<std::uint8_t>(parse_uint(p, toks[2]));
      q.d2 = static_cast<std::uint8_t>(parse_uint(p, toks[3]));
      q.ell = static_cast<std::uint8_t>(parse_uint(p, toks[4]));
      q.m = static_cast<std::uint8_t>(parse_uint(p, toks[5]));
      std::string_view body = toks[6];
      if (body.size() < 2 || body.front() != '{' || body.back() != '}') p.bad("malformed entry set");
      body = body.substr(1, body.size() - 2);
      while (!body.empty()) {
        std::size_t comma = body.find(',');
        std::string_view item = body.substr(0, comma);
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        if (item.size() != static_cast<std::size_t>(q.m) + 4 || item[q.m] != ':')
          p.bad("malformed entry");
        std::uint64_t e = 0;
        for (int i = 0; i < q.m; ++i) {
          if (item[i] < '0' || item[i] > '9') p.bad("malformed entry digit");
          e = pentry::with_digit(e, i, item[i] - '0');
        }
        auto bit = [&](int at) -> int {
          char c = item[q.m + 1 + at];
          if (c != '0' && c != '1') p.bad("malformed entry flag");
          return c - '0';
        };
        e |= pentry::flags(bit(0), bit(1), bit(2));
        q.entries.push_back(e);
      }
      if (q.entries.empty()) p.bad("configuration with empty survivor set");
      for (std::size_t i = 1; i < q.entries.size(); ++i)
        if (q.entries[i - 1] >= q.entries[i]) p.bad("entries not sorted or not unique");
      note_id(id);
      if (!raw_configs.emplace(id, std::move(q)).second) p.bad("duplicate config id");
    } else if (toks[0] == "edge") {
      if (toks.size() != 5) p.bad("edge record needs 5 fields");
      RawEdge e;
      e.src = static_cast<std::uint32_t>(parse_uint(p, toks[1]));
      if (toks[2].size() != 3) p.bad("trigram must be 3 characters");
      Trigram t;
      try {
        t = Trigram{symbol_from_char(toks[2][0]), symbol_from_char(toks[2][1]),
                    symbol_from_char(toks[2][2])};
      } catch (const Error&) {
        p.bad("invalid trigram");
      }
      if (t.x1 > d.s || t.x2 > d.s || t.x3 > d.s) p.bad("trigram letter beyond alphabet");
      e.tri = t.code();
      if (toks[3] == "-") {
        e.perm = -1;
      } else {
        if (toks[3].size() != static_cast<std::size_t>(d.k)) p.bad("permutation must have k letters");
        Perm perm = Perm::identity();
        std::uint16_t seen = 0;
        for (int i = 1; i <= d.k; ++i) {
          Symbol y;
          try {
            y = symbol_from_char(toks[3][i - 1]);
          } catch (const Error&) {
            p.bad("invalid permutation letter");
          }
          if (y == pad || y > d.k || (seen & (1 << y))) p.bad("permutation is not a bijection");
          seen |= static_cast<std::uint16_t>(1 << y);
          perm.img[i] = y;
        }
        auto it = perm_ids.find(perm);
        if (it == perm_ids.end())
          it = perm_ids.emplace(perm, static_cast<std::int32_t>(perm_ids.size())).first;
        e.perm = it->second;
      }
      e.dst = static_cast<std::uint32_t>(parse_uint(p, toks[4]));
      note_id(e.src);
      note_id(e.dst);
      raw_edges.push_back(e);
    } else {
      p.bad("unknown record '" + std::string(toks[0]) + "'");
    }
  }

  d.num_states = max_id + 1;
  d.out.resize(d.num_states);
  d.configs.resize(d.num_states);
  d.has_config.assign(d.num_states, false);
  d.perms.resize(perm_ids.size());
  for (const auto& [perm, id] : perm_ids) d.perms[id] = perm;
  for (const auto& [id, q] : raw_configs) {
    d.configs[id] = q;
    d.has_config[id] = true;
  }
  for (const RawEdge& e : raw_edges) {
    if (d.is_accept(e.src)) fail(Errc::format_error, "edge out of an accepting state");
    d.out[e.src].push_back(Edge{e.tri, e.perm, e.dst});
  }
  for (auto& es : d.out) {
    for (std::size_t i = 1; i < es.size(); ++i)
      if (es[i - 1].tri >= es[i].tri)
        fail(Errc::format_error, "edges not sorted by trigram or automaton not deterministic");
  }
  if (mode == Payload::full) {
    for (std::uint32_t v = 0; v < d.num_states; ++v)
      if (!d.has_config[v] && !d.is_accept(v))
        fail(Errc::format_error, "state " + std::to_string(v) + " has no configuration");
  }
  if (d.kind == Kind::compressed) {
    for (const auto& es : d.out)
      for (const Edge& e : es)
        if (e.perm < 0) fail(Errc::format_error, "compressed edge without permutation");
  }
  return d;
}

std::string export_graph(const Dfa& d, std::size_t node_cap) {
  if (d.num_states > node_cap) fail(Errc::too_large, "automaton exceeds the export node cap");
  std::ostringstream out;
  out << "digraph cryptdfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  if (d.f1 != no_state) out << "  " << d.f1 << " [shape=doublecircle];\n";
  if (d.f2 != no_state) out << "  " << d.f2 << " [shape=doubleoctagon];\n";
  for (std::uint32_t v = 0; v < d.num_states; ++v) {
    for (const Edge& e : d.out[v]) {
      out << "  " << v << " -> " << e.dst << " [label=\"" << to_text(Trigram::from_code(e.tri));
      if (e.perm >= 0) {
        out << '/';
        for (int i = 1; i <= d.k; ++i) out << symbol_char(d.perms[e.perm].img[i]);
      }
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cryptdfa
