#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "specbound/graph.hpp"

namespace specbound {

// graph6 text encoding, standard n <= 62 form: header byte n+63, then the
// upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 per byte,
// MSB first, each byte offset by 63.
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("to_graph6: only n <= 62 supported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

inline Graph from_graph6(const std::string& line) {
  std::string s = line;
  if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.pop_back();
  if (s.empty()) throw std::invalid_argument("from_graph6: empty line");
  if (s[0] == ':' || s[0] == ';' || s[0] == '&')
    throw std::invalid_argument("from_graph6: sparse6/digraph6 input not supported");
  const int n = static_cast<unsigned char>(s[0]) - 63;
  if (n < 1 || n > 62)
    throw std::invalid_argument("from_graph6: order byte out of the n <= 62 range");
  const int nbits = n * (n - 1) / 2;
  const std::size_t need = 1 + (nbits + 5) / 6;
  if (s.size() < need) throw std::invalid_argument("from_graph6: line too short");
  std::vector<std::pair<int, int>> edges;
  int pos = 0;
  for (std::size_t c = 1; c < need; ++c) {
    const int v = static_cast<unsigned char>(s[c]) - 63;
    if (v < 0 || v > 63) throw std::invalid_argument("from_graph6: invalid byte");
    for (int b = 5; b >= 0 && pos < nbits; --b, ++pos) {
      if (!((v >> b) & 1)) continue;
      // invert the column-major pair index
      int j = 1, base = 0;
      while (base + j <= pos) base += j++;
      edges.emplace_back(pos - base, j);
    }
  }
  return Graph::from_edges(n, edges);
}

inline nlohmann::json to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j;
}

inline Graph from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph::from_edges(n, edges);
}

// Inline edge-list form "0-1,0-2,1-3"; order is max vertex + 1 unless a
// larger n is forced.
inline Graph parse_edge_list(const std::string& text, int force_n = 0) {
  std::vector<std::pair<int, int>> edges;
  int maxv = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    const std::string tok = text.substr(i, j - i);
    const std::size_t dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= tok.size())
      throw std::invalid_argument("parse_edge_list: expected 'a-b', got '" + tok + "'");
    const int a = std::stoi(tok.substr(0, dash));
    const int b = std::stoi(tok.substr(dash + 1));
    maxv = std::max({maxv, a, b});
    edges.emplace_back(a, b);
    i = j + 1;
  }
  if (edges.empty()) throw std::invalid_argument("parse_edge_list: no edges");
  return Graph::from_edges(std::max(maxv + 1, force_n), edges);
}

}  // namespace specbound
