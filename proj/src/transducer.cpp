#include "padic/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace padic {

Transducer::Transducer(Base base, std::size_t num_states, std::size_t initial,
                       std::vector<std::size_t> transition, std::vector<int> output,
                       std::vector<std::string> labels)
    : base_(base),
      num_states_(num_states),
      initial_(initial),
      transition_(std::move(transition)),
      output_(std::move(output)),
      labels_(std::move(labels)) {
  const std::size_t p = static_cast<std::size_t>(base_.value());
  if (num_states_ == 0) throw Error("transducer needs at least one state");
  if (initial_ >= num_states_) throw Error("initial state out of range");
  if (transition_.size() != num_states_ * p || output_.size() != num_states_ * p)
    throw Error("transition/output tables must have states*p entries");
  for (std::size_t t : transition_)
    if (t >= num_states_) throw Error("transition target " + std::to_string(t) + " out of range");
  for (int o : output_)
    if (o < 0 || o >= base_.value()) throw Error("output digit " + std::to_string(o) + " out of range");
  if (!labels_.empty() && labels_.size() != num_states_)
    throw Error("state labels must be absent or one per state");
}

namespace {

std::vector<std::size_t> bfs_order(const Transducer& m, std::size_t from) {
  const int p = m.base().value();
  std::vector<std::size_t> order{from};
  std::vector<bool> seen(m.num_states(), false);
  seen[from] = true;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int r = 0; r < p; ++r) {
      std::size_t t = m.next(order[head], r);
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  return order;
}

// Renumbers the states in `order` (first = new initial) and drops the rest.
Transducer restrict_to(const Transducer& m, const std::vector<std::size_t>& order) {
  const int p = m.base().value();
  std::vector<std::size_t> index(m.num_states(), SIZE_MAX);
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  std::vector<std::size_t> next;
  std::vector<int> out;
  std::vector<std::string> labels;
  for (std::size_t s : order) {
    for (int r = 0; r < p; ++r) {
      next.push_back(index[m.next(s, r)]);
      out.push_back(m.output(s, r));
    }
    if (!m.labels().empty()) labels.push_back(m.labels()[s]);
  }
  return Transducer(m.base(), order.size(), 0, std::move(next), std::move(out), std::move(labels));
}

void require_alphabet(const Transducer& m, const DigitWord& w) {
  if (!(w.base == m.base()))
    throw Error("word over base " + std::to_string(w.base.value()) + " fed to machine over base " +
                std::to_string(m.base().value()));
}

}  // namespace

bool Transducer::all_reachable() const { return bfs_order(*this, initial_).size() == num_states_; }

DigitWord eval_word(const Transducer& m, const DigitWord& w) {
  require_alphabet(m, w);
  std::vector<int> out(w.size());
  std::size_t s = m.initial();
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = m.output(s, w.digits[i]);
    s = m.next(s, w.digits[i]);
  }
  return DigitWord(m.base(), std::move(out));
}

std::size_t run(const Transducer& m, std::size_t from, const DigitWord& w) {
  require_alphabet(m, w);
  if (from >= m.num_states()) throw Error("state out of range");
  for (int d : w.digits) from = m.next(from, d);
  return from;
}

Integer eval_mod(const Transducer& m, const Integer& x, std::size_t n) {
  if (sgn(x) < 0 || x >= m.base().pow(n))
    throw Error("eval_mod input " + x.get_str() + " outside [0, p^" + std::to_string(n) + ")");
  return eval_word(m, DigitWord::from_integer(m.base(), x, n)).to_integer();
}

RationalPadic eval_exact(const Transducer& m, std::size_t from, const Integer& x) {
  if (from >= m.num_states()) throw Error("state out of range");
  DigitWord input = DigitWord::minimal(m.base(), x);
  std::vector<int> out;
  std::size_t s = from;
  for (int d : input.digits) {
    out.push_back(m.output(s, d));
    s = m.next(s, d);
  }
  std::unordered_map<std::size_t, std::size_t> seen;
  while (seen.emplace(s, out.size()).second) {
    out.push_back(m.output(s, 0));
    s = m.next(s, 0);
  }
  const auto cut = static_cast<std::ptrdiff_t>(seen[s]);
  EventuallyPeriodicDigits stream(DigitWord(m.base(), {out.begin(), out.begin() + cut}),
                                  DigitWord(m.base(), {out.begin() + cut, out.end()}));
  return from_eventually_periodic(stream);
}

Transducer trim_reachable(const Transducer& m) { return restrict_to(m, bfs_order(m, m.initial())); }

Transducer subautomaton(const Transducer& m, std::size_t s) {
  if (s >= m.num_states()) throw Error("state " + std::to_string(s) + " out of range");
  return restrict_to(m, bfs_order(m, s));
}

Transducer minimize(const Transducer& input) {
  const Transducer m = trim_reachable(input);
  const int p = m.base().value();
  const std::size_t n = m.num_states();

  std::vector<std::size_t> block(n);
  {
    std::map<std::vector<int>, std::size_t> rows;
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<int> row(static_cast<std::size_t>(p));
      for (int r = 0; r < p; ++r) row[static_cast<std::size_t>(r)] = m.output(s, r);
      block[s] = rows.emplace(std::move(row), rows.size()).first->second;
    }
  }
  std::size_t count = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> signatures;
    std::vector<std::size_t> refined(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> sig{block[s]};
      for (int r = 0; r < p; ++r) sig.push_back(block[m.next(s, r)]);
      refined[s] = signatures.emplace(std::move(sig), signatures.size()).first->second;
    }
    block.swap(refined);
    if (signatures.size() == count) break;
    count = signatures.size();
  }

  // One representative per block, then renumber by BFS from the initial block.
  std::vector<std::size_t> rep(count, SIZE_MAX);
  for (std::size_t s = 0; s < n; ++s)
    if (rep[block[s]] == SIZE_MAX) rep[block[s]] = s;
  std::vector<std::size_t> quotient_next;
  std::vector<int> quotient_out;
  for (std::size_t b = 0; b < count; ++b)
    for (int r = 0; r < p; ++r) {
      quotient_next.push_back(block[m.next(rep[b], r)]);
      quotient_out.push_back(m.output(rep[b], r));
    }
  Transducer quotient(m.base(), count, block[m.initial()], std::move(quotient_next),
                      std::move(quotient_out));
  return trim_reachable(quotient);
}

std::optional<DigitWord> distinguishing_word(const Transducer& a, const Transducer& b) {
  if (!(a.base() == b.base())) throw Error("machines over different bases");
  const int p = a.base().value();
  using Pair = std::pair<std::size_t, std::size_t>;
  std::map<Pair, std::pair<Pair, int>> parent;
  std::deque<Pair> queue{{a.initial(), b.initial()}};
  parent[queue.front()] = {queue.front(), -1};
  auto trace = [&](Pair at, int last) {
    std::vector<int> rev{last};
    while (parent[at].second >= 0) {
      rev.push_back(parent[at].second);
      at = parent[at].first;
    }
    std::reverse(rev.begin(), rev.end());
    return DigitWord(a.base(), std::move(rev));
  };
  while (!queue.empty()) {
    Pair cur = queue.front();
    queue.pop_front();
    for (int r = 0; r < p; ++r) {
      if (a.output(cur.first, r) != b.output(cur.second, r)) return trace(cur, r);
      Pair nxt{a.next(cur.first, r), b.next(cur.second, r)};
      if (parent.emplace(nxt, std::make_pair(cur, r)).second) queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

bool behaviorally_equal(const Transducer& a, const Transducer& b) {
  return !distinguishing_word(a, b).has_value();
}

namespace {

void append_signature(const Transducer& m, std::size_t s, std::size_t horizon, std::string& sig) {
  if (horizon == 0) return;
  const int p = m.base().value();
  for (int r = 0; r < p; ++r) {
    sig.push_back(static_cast<char>(m.output(s, r)));
    append_signature(m, m.next(s, r), horizon - 1, sig);
  }
}

}  // namespace

std::size_t count_bounded_behaviors(const Transducer& m, std::size_t core_depth,
                                    std::size_t horizon) {
  const int p = m.base().value();
  std::vector<std::size_t> depth(m.num_states(), SIZE_MAX);
  std::vector<std::size_t> order{m.initial()};
  depth[m.initial()] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t s = order[head];
    if (depth[s] == core_depth) continue;
    for (int r = 0; r < p; ++r) {
      std::size_t t = m.next(s, r);
      if (depth[t] == SIZE_MAX) {
        depth[t] = depth[s] + 1;
        order.push_back(t);
      }
    }
  }
  std::map<std::string, std::size_t> behaviors;
  for (std::size_t s : order) {
    std::string sig;
    append_signature(m, s, horizon, sig);
    behaviors.emplace(std::move(sig), behaviors.size());
  }
  return behaviors.size();
}

}  // namespace padic
