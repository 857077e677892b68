#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "padic/core.hpp"
#include "padic/parallel.hpp"

namespace padic::detail {

enum class ClosureStatus { Closed, TooManyStates, TooDeep };

/// Result of exploring the closure of a root object under the p maps
/// "read digit r". Node i was first reached by the word of value offset[i]
/// and length level[i]; nodes are numbered by (level, offset).
template <class Node>
struct Closure {
  std::vector<Node> nodes;
  std::vector<std::string> keys;
  std::vector<std::size_t> level;
  std::vector<Integer> offset;
  std::vector<std::size_t> next;  ///< node * p + r, for expanded nodes
  std::vector<int> out;           ///< node * p + r, for expanded nodes
  ClosureStatus status = ClosureStatus::Closed;
};

template <class Node>
struct Child {
  Node node;
  std::string key;
  int output = 0;
};

/// Level-synchronous exploration with memoization on canonical keys.
///
/// `expand(node, r)` returns the child reached by digit r. Children of one
/// level are computed in parallel, then merged sequentially; new nodes are
/// numbered by the smallest word value reaching them, so numbering is
/// independent of the thread count. Exploration stops with TooManyStates
/// once more than `max_nodes` nodes exist, and with TooDeep if a new node
/// would appear beyond `max_level`.
template <class Node, class Expand>
Closure<Node> explore_closure(Base base, Node root, std::string root_key, Expand&& expand,
                              std::size_t max_nodes, std::size_t max_level, unsigned threads) {
  const std::size_t p = static_cast<std::size_t>(base.value());
  Closure<Node> c;
  std::map<std::string, std::size_t> index;
  index.emplace(root_key, 0);
  c.nodes.push_back(std::move(root));
  c.keys.push_back(std::move(root_key));
  c.level.push_back(0);
  c.offset.push_back(0);
  if (max_nodes == 0) {
    c.status = ClosureStatus::TooManyStates;
    return c;
  }

  std::vector<std::size_t> frontier{0};
  std::size_t k = 0;
  Integer pk = 1;
  while (!frontier.empty()) {
    std::vector<Child<Node>> kids(frontier.size() * p);
    parallel_for(kids.size(), threads, [&](std::size_t i) {
      kids[i] = expand(c.nodes[frontier[i / p]], static_cast<int>(i % p));
    });

    struct Candidate {
      Integer offset;
      std::size_t kid;
    };
    std::map<std::string, Candidate> fresh;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (index.count(kids[i].key)) continue;
      Integer off = c.offset[frontier[i / p]] + pk * static_cast<unsigned long>(i % p);
      auto [it, inserted] = fresh.try_emplace(kids[i].key, Candidate{off, i});
      if (!inserted && off < it->second.offset) it->second = Candidate{off, i};
    }
    if (!fresh.empty() && k + 1 > max_level) {
      c.status = ClosureStatus::TooDeep;
      return c;
    }
    std::vector<std::pair<Integer, std::string>> order;
    for (auto& [key, cand] : fresh) order.emplace_back(cand.offset, key);
    std::sort(order.begin(), order.end());

    std::vector<std::size_t> next_frontier;
    for (auto& [off, key] : order) {
      const std::size_t id = c.nodes.size();
      index.emplace(key, id);
      c.nodes.push_back(std::move(kids[fresh.at(key).kid].node));
      c.keys.push_back(key);
      c.level.push_back(k + 1);
      c.offset.push_back(off);
      next_frontier.push_back(id);
    }
    c.next.resize(c.nodes.size() * p, SIZE_MAX);
    c.out.resize(c.nodes.size() * p, 0);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const std::size_t slot = frontier[i / p] * p + i % p;
      c.next[slot] = index.at(kids[i].key);
      c.out[slot] = kids[i].output;
    }
    if (c.nodes.size() > max_nodes) {
      c.status = ClosureStatus::TooManyStates;
      return c;
    }
    frontier = std::move(next_frontier);
    pk *= static_cast<unsigned long>(p);
    ++k;
  }
  return c;
}

}  // namespace padic::detail
