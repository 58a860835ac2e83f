#pragma once

// Text formats: edge lists, graph6, a DOT subset for input; JSON, DOT and
// SVG for output.

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "compaut/dim4.hpp"
#include "compaut/group_engine.hpp"
#include "compaut/modular_decomposition.hpp"
#include "compaut/permutation_graphs.hpp"

namespace compaut {

using Json = nlohmann::json;

/// `n m` followed by m lines `u v`, 0-based. Lines starting with '#' are skipped.
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<long long> nums;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw InputError("edge list: expected an integer, got '" + tok + "'");
      }
      if (used != tok.size()) throw InputError("edge list: expected an integer, got '" + tok + "'");
      nums.push_back(v);
    }
  }
  if (nums.size() < 2) throw InputError("edge list: missing 'n m' header");
  const long long n = nums[0], m = nums[1];
  if (n < 0 || m < 0 || n > 100000) throw InputError("edge list: bad header");
  if (static_cast<long long>(nums.size()) != 2 + 2 * m)
    throw InputError("edge list: header promises " + std::to_string(m) + " edges");
  Graph g(static_cast<int>(n));
  for (long long k = 0; k < m; ++k) {
    long long u = nums[2 + 2 * k], v = nums[3 + 2 * k];
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge list: vertex out of range");
    if (u == v) throw InputError("edge list: self-loop");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) throw InputError("edge list: repeated edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// graph6, with or without the ">>graph6<<" header.
inline Graph parse_graph6(std::string text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.erase(0, 1);
  if (text.rfind(">>graph6<<", 0) == 0) text.erase(0, 10);
  if (text.empty()) throw InputError("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw InputError("graph6: invalid character");
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw InputError("graph6: truncated input");
    return text[pos++] - 63;
  };
  long long n = next();
  if (n == 63) {
    n = 0;
    int a = next();
    if (a == 63) {
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    } else {
      n = a;
      for (int i = 0; i < 2; ++i) n = (n << 6) | next();
    }
  }
  if (n > 100000) throw InputError("graph6: graph too large");
  Graph g(static_cast<int>(n));
  int bit = 0, word = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (bit == 0) {
        word = next();
        bit = 6;
      }
      --bit;
      if ((word >> bit) & 1) g.add_edge(u, v);
    }
  if (pos != text.size()) throw InputError("graph6: trailing characters");
  return g;
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out += static_cast<char>(63 + n);
  } else if (n < 258048) {
    out += static_cast<char>(126);
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(63 + ((n >> s) & 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(63 + ((static_cast<long long>(n) >> s) & 63));
  }
  int bit = 6, word = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      --bit;
      if (g.adjacent(u, v)) word |= 1 << bit;
      if (bit == 0) {
        out += static_cast<char>(63 + word);
        word = 0;
        bit = 6;
      }
    }
  if (bit != 6) out += static_cast<char>(63 + word);
  return out;
}

/// Undirected DOT: `graph { a -- b; c; }`. Vertex names keep their order of
/// first appearance and become the graph's labels.
inline Graph parse_dot(const std::string& text) {
  std::string body = text;
  // Strip comments.
  for (std::size_t p; (p = body.find("//")) != std::string::npos;) {
    auto e = body.find('\n', p);
    body.erase(p, e == std::string::npos ? std::string::npos : e - p);
  }
  if (body.find("->") != std::string::npos || body.find("digraph") != std::string::npos)
    throw InputError("dot: directed graphs are not accepted");
  auto open = body.find('{'), close = body.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw InputError("dot: expected 'graph { ... }'");
  std::string inner = body.substr(open + 1, close - open - 1);
  for (char& c : inner)
    if (c == '\n' || c == ',') c = ';';
  std::map<std::string, int> id;
  std::vector<std::string> names;
  std::vector<Edge> edges;
  auto vertex = [&](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
    if (auto b = s.find('['); b != std::string::npos) s = s.substr(0, b);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw InputError("dot: empty vertex name");
    auto [it, fresh] = id.emplace(s, static_cast<int>(names.size()));
    if (fresh) names.push_back(s);
    return it->second;
  };
  std::istringstream st(inner);
  std::string stmt;
  while (std::getline(st, stmt, ';')) {
    if (stmt.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (stmt.find('=') != std::string::npos && stmt.find("--") == std::string::npos &&
        stmt.find('[') == std::string::npos)
      continue;  // graph attribute
    std::vector<int> chain;
    std::size_t start = 0;
    for (std::size_t p; (p = stmt.find("--", start)) != std::string::npos; start = p + 2)
      chain.push_back(vertex(stmt.substr(start, p - start)));
    chain.push_back(vertex(stmt.substr(start)));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges.emplace_back(chain[i], chain[i + 1]);
  }
  Graph g(static_cast<int>(names.size()));
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("dot: self-loop");
    if (g.adjacent(u, v)) throw InputError("dot: repeated edge");
    g.add_edge(u, v);
  }
  g.set_labels(std::move(names));
  return g;
}

/// Picks the parser from the content: DOT if it mentions "graph" and '{',
/// graph6 if it is a single token of printable graph6 characters, otherwise
/// an edge list.
inline Graph parse_graph(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw InputError("empty input");
  if (text.find('{') != std::string::npos) return parse_dot(text);
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  const bool numeric = std::all_of(tokens.front().begin(), tokens.front().end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-'; });
  if (tokens.size() == 1 && !numeric) return parse_graph6(tokens.front());
  return parse_edge_list(text);
}

// ---------------------------------------------------------------------------
// JSON.

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  Json j{{"n", g.order()}, {"edges", edges}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

inline Json to_json(const ModularTree& t) {
  Json nodes = Json::array();
  for (int id = 0; id < static_cast<int>(t.nodes().size()); ++id) {
    const TreeNode& node = t.node(id);
    Json edges = Json::array();
    for (auto [a, b] : node.graph.edges()) edges.push_back({node.members[a], node.members[b]});
    Json jn{{"id", id},
            {"kind", to_string(node.kind)},
            {"members", node.members},
            {"edges", edges},
            {"leaves", node.leaves},
            {"parent", node.parent}};
    if (node.inner()) {
      jn["children"] = node.children;
      jn["attachments"] = node.attachments;
    }
    nodes.push_back(std::move(jn));
  }
  Json tree_edges = Json::array();
  for (auto [m, mp] : t.tree_edges()) tree_edges.push_back({m, mp});
  std::vector<int> markers;
  for (int v = t.original_order(); v < t.vertex_count(); ++v) markers.push_back(v);
  return Json{{"n", t.original_order()},
              {"vertex_count", t.vertex_count()},
              {"markers", markers},
              {"root", 0},
              {"nodes", nodes},
              {"tree_edges", tree_edges}};
}

inline Json to_json(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  Json j;
  switch (e.kind()) {
    case K::Trivial: j = {{"type", "trivial"}}; break;
    case K::Sym: j = {{"type", "sym"}, {"k", e.k()}}; break;
    case K::Opaque: j = {{"type", "opaque"}, {"order", e.opaque_order().str()}}; break;
    case K::Wreath: j = {{"type", "wreath"}, {"k", e.k()}, {"base", to_json(e.operands()[0])}}; break;
    case K::DirectProduct: {
      Json fs = Json::array();
      for (const auto& f : e.operands()) fs.push_back(to_json(f));
      j = {{"type", "direct_product"}, {"factors", fs}};
      break;
    }
    case K::SemidirectZ22:
      j = {{"type", "semidirect_z2z2"},
           {"g1", to_json(e.operands()[0])},
           {"g2", to_json(e.operands()[1])},
           {"g3", to_json(e.operands()[2])},
           {"fixed", to_json(e.operands()[3])}};
      break;
  }
  j["order"] = e.order().str();
  return j;
}

inline Json to_json(const Orientation& o) {
  Json arcs = Json::array();
  for (auto [u, v] : o.arcs()) arcs.push_back({u, v});
  return arcs;
}

inline Json to_json(const Permutation& p) { return p.image(); }

inline Json to_json(const LinearOrderPair& lp) { return Json{{"l1", lp.l1}, {"l2", lp.l2}}; }

inline Json to_json(const PrimeSymmetryClass& c) {
  Json inv = Json::array();
  for (const auto& [pi, kind] : c.involutions) inv.push_back({{"permutation", to_json(pi)}, {"type", to_string(kind)}});
  return Json{{"subgroup", to_string(c.subgroup)},
              {"aut_order", c.aut_order},
              {"involutions", inv},
              {"orbits_size4", c.orbits4},
              {"orbits_size2_fixed_by_rotation", c.orbits2_by_stabilizer[0]},
              {"orbits_size2_fixed_by_horizontal", c.orbits2_by_stabilizer[1]},
              {"orbits_size2_fixed_by_vertical", c.orbits2_by_stabilizer[2]},
              {"orbits_size2_free", c.orbits2_free},
              {"orbits_size1", c.orbits1}};
}

inline Json to_json(const GadgetGraph& c) {
  return Json{{"graph", to_json(c.graph)}, {"p", c.p}, {"q", c.q}, {"r", c.r}};
}

inline Json to_json(const ChainReport& r) {
  Json j{{"ok", r.ok}, {"comparable_pairs", r.comparable_pairs}};
  for (auto cat : {ClaimCategory::QR, ClaimCategory::P, ClaimCategory::PQR}) {
    const int i = static_cast<int>(cat);
    Json m = Json::array(), e = Json::array();
    for (auto [u, v] : r.missing[i]) m.push_back({u, v});
    for (auto [u, v] : r.extra[i]) e.push_back({u, v});
    j["categories"][to_string(cat)] = {{"missing", m}, {"extra", e}};
  }
  return j;
}

// ---------------------------------------------------------------------------
// DOT and SVG.

inline std::string to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (!g.labels().empty()) out += " [label=\"" + g.labels()[v] + "\"]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

/// Markers drawn hollow, tree edges dashed and directed m -> m'.
inline std::string to_dot(const ModularTree& t) {
  std::string out = "digraph T {\n  edge [dir=none];\n";
  for (int v = 0; v < t.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    out += t.is_marker(v) ? " [shape=circle, style=solid, fillcolor=white, label=\"m" + std::to_string(v) + "\"];\n"
                          : " [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
  }
  for (int id = 0; id < static_cast<int>(t.nodes().size()); ++id) {
    const TreeNode& node = t.node(id);
    out += "  subgraph cluster_" + std::to_string(id) + " { label=\"" + to_string(node.kind) + "\";";
    for (int v : node.members) out += " " + std::to_string(v) + ";";
    out += " }\n";
  }
  for (auto [a, b] : t.normal_graph().edges()) out += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
  for (auto [m, mp] : t.tree_edges())
    out += "  " + std::to_string(m) + " -> " + std::to_string(mp) + " [style=dashed, dir=forward];\n";
  return out + "}\n";
}

/// P, Q, R in three colours.
inline std::string to_dot(const GadgetGraph& c) {
  std::string out = "graph CX {\n";
  auto colour = [&](int v) {
    switch (c.part(v)) {
      case GadgetPart::P: return "black";
      case GadgetPart::Q: return "red";
      case GadgetPart::R: return "blue";
    }
    return "gray";
  };
  for (int v = 0; v < c.graph.order(); ++v)
    out += "  " + std::to_string(v) + " [color=" + colour(v) + "];\n";
  for (auto [u, v] : c.graph.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

/// Two horizontal lines; vertex v is the segment from its position in l1
/// (top) to its position in l2 (bottom).
inline std::string to_svg(const LinearOrderPair& lp) {
  const int n = static_cast<int>(lp.l1.size());
  const auto p1 = chain_positions(n, lp.l1), p2 = chain_positions(n, lp.l2);
  const int step = 40, width = std::max(1, n) * step + step, top = 30, bottom = 150;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"180\">\n";
  s << "  <line x1=\"0\" y1=\"" << top << "\" x2=\"" << width << "\" y2=\"" << top << "\" stroke=\"gray\"/>\n";
  s << "  <line x1=\"0\" y1=\"" << bottom << "\" x2=\"" << width << "\" y2=\"" << bottom << "\" stroke=\"gray\"/>\n";
  for (int v = 0; v < n; ++v) {
    const int x1 = step + p1[v] * step, x2 = step + p2[v] * step;
    s << "  <line x1=\"" << x1 << "\" y1=\"" << top << "\" x2=\"" << x2 << "\" y2=\"" << bottom
      << "\" stroke=\"black\"/>\n";
    s << "  <text x=\"" << x1 << "\" y=\"" << top - 8 << "\" text-anchor=\"middle\">" << v << "</text>\n";
    s << "  <text x=\"" << x2 << "\" y=\"" << bottom + 18 << "\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace compaut
