#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontobench/errors.hpp"

namespace ontobench {

/// Directed graph as node -> successors. Used for the Haystack `is`
/// associations and the Brick subclass hierarchy (edges point to parents).
template <class Node>
using Adjacency = std::map<Node, std::vector<Node>>;

/// Finds one cycle with an iterative DFS (back-edge detection). Returns the
/// nodes on the cycle in edge order with the first node repeated at the end,
/// or nullopt for an acyclic graph. Successors missing from the map are
/// treated as sinks.
template <class Node>
std::optional<std::vector<Node>> find_cycle(const Adjacency<Node>& graph) {
  enum class Color { white, gray, black };
  std::map<Node, Color> color;
  for (const auto& [node, _] : graph) color.emplace(node, Color::white);

  struct Frame {
    Node node;
    std::size_t next = 0;
  };
  for (const auto& [root, _] : graph) {
    if (color[root] != Color::white) continue;
    std::vector<Frame> stack{{root, 0}};
    color[root] = Color::gray;
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto it = graph.find(top.node);
      if (it == graph.end() || top.next >= it->second.size()) {
        color[top.node] = Color::black;
        stack.pop_back();
        continue;
      }
      const Node& succ = it->second[top.next++];
      auto c = color.find(succ);
      if (c == color.end()) continue;  // sink outside the map
      if (c->second == Color::gray) {
        std::vector<Node> cycle;
        bool on = false;
        for (const auto& f : stack) {
          if (f.node == succ) on = true;
          if (on) cycle.push_back(f.node);
        }
        cycle.push_back(succ);
        return cycle;
      }
      if (c->second == Color::white) {
        c->second = Color::gray;
        stack.push_back({succ, 0});
      }
    }
  }
  return std::nullopt;
}

/// Reflexive-transitive closure of `start` over `graph`. Throws
/// `IntegrityError` if a cycle is reachable from `start`.
template <class Node, class Describe>
std::set<Node> reflexive_closure(const Adjacency<Node>& graph, const Node& start,
                                 Describe describe) {
  std::set<Node> done;
  std::set<Node> active;
  struct Frame {
    Node node;
    std::size_t next = 0;
  };
  std::vector<Frame> stack{{start, 0}};
  active.insert(start);
  while (!stack.empty()) {
    Frame& top = stack.back();
    auto it = graph.find(top.node);
    if (it == graph.end() || top.next >= it->second.size()) {
      active.erase(top.node);
      done.insert(top.node);
      stack.pop_back();
      continue;
    }
    Node succ = it->second[top.next++];
    if (active.count(succ)) {
      throw IntegrityError("cycle through " + describe(succ));
    }
    if (!done.count(succ)) {
      active.insert(succ);
      stack.push_back({std::move(succ), 0});
    }
  }
  return done;
}

}  // namespace ontobench
