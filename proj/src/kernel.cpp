#include "padic/kernel.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "padic/closure.hpp"

namespace padic {

void Dfao::validate() const {
  const std::size_t p = static_cast<std::size_t>(base.value());
  if (num_states == 0) throw Error("DFAO needs at least one state");
  if (initial >= num_states) throw Error("DFAO initial state out of range");
  if (delta.size() != num_states * p || output.size() != num_states)
    throw Error("DFAO tables must have states*p transitions and one output per state");
  for (std::size_t t : delta)
    if (t >= num_states) throw Error("DFAO transition target out of range");
  for (int o : output)
    if (o < 0 || (!alphabet.empty() && static_cast<std::size_t>(o) >= alphabet.size()))
      throw Error("DFAO output symbol out of range");
}

int automatic_eval(const Dfao& dfao, const Integer& n) {
  std::size_t s = dfao.initial;
  for (int d : DigitWord::minimal(dfao.base, n).digits) s = dfao.next(s, d);
  return dfao.output[s];
}

TableSequence coefficient_table(const VdpSeries& series) {
  std::set<RationalPadic> distinct(series.b.begin(), series.b.end());
  std::vector<RationalPadic> sorted(distinct.begin(), distinct.end());
  TableSequence t{series.base, series.depth, {}, {}};
  for (const auto& v : sorted) t.alphabet.push_back(v.to_string());
  t.values.reserve(series.b.size());
  for (const auto& v : series.b)
    t.values.push_back(static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
  return t;
}

Dfao minimize(const Dfao& dfao) {
  dfao.validate();
  const int p = dfao.base.value();
  // Reachable part in BFS order.
  std::vector<std::size_t> order{dfao.initial};
  std::vector<std::size_t> pos(dfao.num_states, SIZE_MAX);
  pos[dfao.initial] = 0;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (int r = 0; r < p; ++r) {
      std::size_t t = dfao.next(order[h], r);
      if (pos[t] == SIZE_MAX) {
        pos[t] = order.size();
        order.push_back(t);
      }
    }
  const std::size_t n = order.size();
  std::vector<std::size_t> block(n);
  for (std::size_t i = 0; i < n; ++i) block[i] = static_cast<std::size_t>(dfao.output[order[i]]);
  std::size_t count = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> sigs;
    std::vector<std::size_t> refined(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> sig{block[i]};
      for (int r = 0; r < p; ++r) sig.push_back(block[pos[dfao.next(order[i], r)]]);
      refined[i] = sigs.emplace(std::move(sig), sigs.size()).first->second;
    }
    block.swap(refined);
    if (sigs.size() == count) break;
    count = sigs.size();
  }
  // Renumber blocks by BFS from the initial block.
  std::vector<std::size_t> rep(count, SIZE_MAX), id(count, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i)
    if (rep[block[i]] == SIZE_MAX) rep[block[i]] = i;
  std::vector<std::size_t> bfs{block[0]};
  id[block[0]] = 0;
  for (std::size_t h = 0; h < bfs.size(); ++h)
    for (int r = 0; r < p; ++r) {
      std::size_t b = block[pos[dfao.next(order[rep[bfs[h]]], r)]];
      if (id[b] == SIZE_MAX) {
        id[b] = bfs.size();
        bfs.push_back(b);
      }
    }
  Dfao out{dfao.base, bfs.size(), 0, {}, {}, dfao.alphabet};
  for (std::size_t b : bfs) {
    const std::size_t s = order[rep[b]];
    for (int r = 0; r < p; ++r) out.delta.push_back(id[block[pos[dfao.next(s, r)]]]);
    out.output.push_back(dfao.output[s]);
  }
  return out;
}

namespace {

struct TableNode {
  std::size_t level = 0;
  Integer offset;
};

Kernel kernel_shell(Base base, const std::vector<std::string>& alphabet) {
  Kernel k{base, {}, {}, {}, alphabet, false, std::nullopt, std::nullopt, {}};
  return k;
}

template <class Node>
void copy_structure(const detail::Closure<Node>& c, Kernel& k) {
  for (std::size_t i = 0; i < c.nodes.size(); ++i)
    k.elements.push_back(KernelElement{c.level[i], c.offset[i]});
  k.next = c.next;
}

std::variant<Kernel, KernelBoundExceeded> table_kernel(const TableSequence& seq,
                                                       const KernelOptions& opts) {
  const Base base = seq.base;
  const std::size_t p = static_cast<std::size_t>(base.value());
  const std::size_t depth = opts.depth ? std::min(opts.depth, seq.depth) : seq.depth;
  if (Integer(static_cast<unsigned long>(seq.values.size())) < base.pow(depth))
    throw Error("sequence table shorter than p^depth");
  const std::size_t window =
      std::min(depth, opts.window ? opts.window : std::max<std::size_t>(depth / 2, 1));
  const std::size_t span = static_cast<std::size_t>(base.pow(window).get_ui());
  const std::size_t max_level = depth - window;
  std::vector<std::size_t> stride{1};
  for (std::size_t m = 0; m < depth; ++m) stride.push_back(stride.back() * p);

  auto window_key = [&](std::size_t level, std::size_t offset) {
    std::string key;
    key.reserve(span * 2);
    for (std::size_t j = 0; j < span; ++j) {
      const int v = seq.values[j * stride[level] + offset];
      key.push_back(static_cast<char>(v & 0xff));
      key.push_back(static_cast<char>((v >> 8) & 0xff));
    }
    return key;
  };
  auto expand = [&](const TableNode& node, int r) {
    detail::Child<TableNode> child;
    child.node.level = node.level + 1;
    child.node.offset = node.offset + Integer(static_cast<unsigned long>(stride[node.level])) * r;
    if (child.node.level > max_level)
      child.key = "shallow:" + child.node.offset.get_str() + ":" + std::to_string(child.node.level);
    else
      child.key = window_key(child.node.level, child.node.offset.get_ui());
    return child;
  };
  auto c = detail::explore_closure<TableNode>(base, TableNode{0, 0}, window_key(0, 0), expand,
                                              opts.max_elems, max_level, opts.threads);
  if (c.status == detail::ClosureStatus::TooManyStates)
    return KernelBoundExceeded{c.nodes.size(), depth};

  Kernel k = kernel_shell(base, seq.alphabet);
  copy_structure(c, k);
  k.certified_depth = depth;
  k.window = window;
  for (const auto& e : k.elements) k.head.push_back(seq.values[e.offset.get_ui()]);
  k.closed = c.status == detail::ClosureStatus::Closed;
  if (k.closed) {
    // Window equality can merge elements that differ deeper; the automaton
    // must reproduce the whole table.
    const Dfao dfao = dfao_from_kernel(k);
    for (std::size_t n = 0; n < stride[depth] && k.closed; ++n)
      k.closed = automatic_eval(dfao, Integer(static_cast<unsigned long>(n))) == seq.values[n];
  }
  for (std::size_t a = 0; a < k.elements.size(); ++a)
    for (std::size_t b = a + 1; b < k.elements.size(); ++b) {
      const auto& ea = k.elements[a];
      const auto& eb = k.elements[b];
      for (std::size_t j = 0; j < span; ++j) {
        const std::size_t ia = j * stride[ea.level] + ea.offset.get_ui();
        const std::size_t ib = j * stride[eb.level] + eb.offset.get_ui();
        if (seq.values[ia] != seq.values[ib]) {
          k.witnesses.push_back({a, b, Integer(static_cast<unsigned long>(ia)),
                                 Integer(static_cast<unsigned long>(ib))});
          break;
        }
      }
    }
  return k;
}

// Value of a shortest word on which states s and t of a minimal DFAO
// disagree. Since the machine ignores high-order zeros, this is a position
// where the two sequences differ.
Integer separating_index(const Dfao& d, std::size_t s, std::size_t t) {
  const int p = d.base.value();
  struct Visit {
    std::size_t s, t;
    Integer value, weight;
  };
  std::set<std::pair<std::size_t, std::size_t>> seen{{s, t}};
  std::deque<Visit> queue{{s, t, 0, 1}};
  while (!queue.empty()) {
    Visit v = std::move(queue.front());
    queue.pop_front();
    if (d.output[v.s] != d.output[v.t]) return v.value;
    for (int r = 0; r < p; ++r) {
      const std::size_t ns = d.next(v.s, r), nt = d.next(v.t, r);
      if (seen.emplace(ns, nt).second)
        queue.push_back({ns, nt, v.value + v.weight * r, v.weight * p});
    }
  }
  throw Error("states of a minimal DFAO are not separable");
}

// Kernel elements of a DFAO sequence are pairs (a_offset, state): the first
// term is the output on the minimal word of the offset, later terms come
// from the state reached on the padded word. Feeding 0 keeps the head, so
// this pair machine is insensitive to high-order zeros and Moore
// equivalence on it is sequence equality.
std::variant<Kernel, KernelBoundExceeded> dfao_kernel(const Dfao& dfao, const KernelOptions& opts) {
  dfao.validate();
  const Base base = dfao.base;
  const int p = base.value();
  std::map<std::pair<int, std::size_t>, std::size_t> pair_id;
  std::vector<std::pair<int, std::size_t>> pairs;
  auto intern = [&](std::pair<int, std::size_t> key) {
    auto [it, fresh] = pair_id.emplace(key, pairs.size());
    if (fresh) pairs.push_back(key);
    return it->second;
  };
  intern({dfao.output[dfao.initial], dfao.initial});
  std::vector<std::size_t> pair_next;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (int r = 0; r < p; ++r) {
      const auto [h, q] = pairs[i];
      const std::size_t t = dfao.next(q, r);
      pair_next.push_back(intern({r == 0 ? h : dfao.output[t], t}));
    }
  Dfao pair_machine{base, pairs.size(), 0, pair_next, {}, dfao.alphabet};
  for (const auto& pr : pairs) pair_machine.output.push_back(pr.first);
  const Dfao classes = minimize(pair_machine);

  auto expand = [&](std::size_t s, int r) {
    const std::size_t t = classes.next(s, r);
    return detail::Child<std::size_t>{t, std::to_string(t), 0};
  };
  auto c = detail::explore_closure<std::size_t>(base, classes.initial, std::to_string(classes.initial),
                                                expand, opts.max_elems, SIZE_MAX, opts.threads);
  if (c.status != detail::ClosureStatus::Closed) return KernelBoundExceeded{c.nodes.size(), 0};
  Kernel k = kernel_shell(base, dfao.alphabet);
  copy_structure(c, k);
  for (std::size_t s : c.nodes) k.head.push_back(classes.output[s]);
  k.closed = true;
  for (std::size_t a = 0; a < c.nodes.size(); ++a)
    for (std::size_t b = a + 1; b < c.nodes.size(); ++b) {
      const Integer j = separating_index(classes, c.nodes[a], c.nodes[b]);
      k.witnesses.push_back({a, b, j * base.pow(k.elements[a].level) + k.elements[a].offset,
                             j * base.pow(k.elements[b].level) + k.elements[b].offset});
    }
  return k;
}

}  // namespace

std::variant<Kernel, KernelBoundExceeded> p_kernel(const SequencePresentation& seq,
                                                   const KernelOptions& opts) {
  if (const auto* d = std::get_if<DfaoSequence>(&seq)) return dfao_kernel(d->dfao, opts);
  if (const auto* t = std::get_if<TableSequence>(&seq)) return table_kernel(*t, opts);
  return table_kernel(coefficient_table(std::get<CoefficientStream>(seq).series), opts);
}

Dfao dfao_from_kernel(const Kernel& kernel) {
  if (!kernel.closed) throw Error("kernel closure is incomplete; no DFAO can be built");
  Dfao d{kernel.base, kernel.elements.size(), 0, kernel.next, kernel.head, kernel.alphabet};
  d.validate();
  return d;
}

}  // namespace padic
