#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "colex/concepts.hpp"
#include "colex/error.hpp"
#include "colex/format.hpp"

namespace colex {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace detail

/// Renders the breadth-first neighborhood of `focus` (concept word) as an
/// undirected DOT graph. Edge penwidth is proportional to n_colex within
/// the emitted subgraph; node and edge ordering is deterministic.
inline std::string export_dot(std::span<const ConceptPairRecord> records,
                              const std::string& focus, std::size_t depth) {
  if (depth < 1) fail(Errc::invalid_argument, "subgraph depth must be >= 1");

  // Adjacency over concept words; records with equal word pairs merge and
  // their witness counts add up (penwidth tracks total frequency).
  std::map<std::pair<std::string, std::string>, std::size_t> edge_weight;
  std::map<std::string, std::vector<std::string>> adjacency;
  for (const auto& rec : records) {
    std::string a = rec.concept1.word;
    std::string b = rec.concept2.word;
    if (a == b) continue;  // POS-distinct concepts sharing a word: no self loop
    if (b < a) std::swap(a, b);
    edge_weight[{a, b}] += rec.n_colex;
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }

  if (!adjacency.count(focus)) {
    fail(Errc::unknown_concept, "concept '" + focus + "' not present in the concept graph");
  }

  std::map<std::string, std::size_t> dist;
  std::queue<std::string> frontier;
  dist[focus] = 0;
  frontier.push(focus);
  while (!frontier.empty()) {
    std::string node = frontier.front();
    frontier.pop();
    std::size_t d = dist[node];
    if (d == depth) continue;
    for (const auto& next : adjacency[node]) {
      if (!dist.count(next)) {
        dist[next] = d + 1;
        frontier.push(next);
      }
    }
  }

  // Induced subgraph on the reached node set.
  std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>> kept;
  std::size_t max_weight = 1;
  for (const auto& [key, weight] : edge_weight) {
    if (dist.count(key.first) && dist.count(key.second)) {
      kept.push_back({key, weight});
      max_weight = std::max(max_weight, weight);
    }
  }

  std::string out = "graph colex {\n";
  out += "  node [shape=ellipse];\n";
  for (const auto& [node, d] : dist) {
    out += "  " + detail::dot_quote(node);
    if (node == focus) out += " [peripheries=2]";
    out += ";\n";
  }
  for (const auto& [key, weight] : kept) {
    double penwidth = 5.0 * static_cast<double>(weight) / static_cast<double>(max_weight);
    out += "  " + detail::dot_quote(key.first) + " -- " + detail::dot_quote(key.second) +
           " [penwidth=" + format_fixed(penwidth, 2) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace colex
