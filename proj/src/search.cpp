#include "vlink/search.hpp"

#include <algorithm>
#include <queue>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "vlink/surface.hpp"

namespace vlink {

namespace {

struct Node {
  GaussCode code;
  int parent = -1;
  MoveSpec move;
};

struct Child {
  MoveSpec move;
  GaussCode code;
  std::string key;
};

std::vector<Child> children_of(const GaussCode& code, const Budget& budget) {
  auto moves = enumerate_moves(code, budget);
  std::vector<Child> out(moves.size());
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i].move = std::move(moves[i].first);
      out[i].code = std::move(moves[i].second);
      out[i].key = normal_key(out[i].code);
    }
  };
  const unsigned workers = moves.size() >= 64 ? std::max(1u, budget.threads) : 1u;
  if (workers == 1) {
    fill(0, out.size());
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (out.size() + workers - 1) / workers;
  for (std::size_t begin = 0; begin < out.size(); begin += chunk)
    pool.emplace_back(fill, begin, std::min(out.size(), begin + chunk));
  for (auto& t : pool) t.join();
  return out;
}

// (primary score, crossings, depth, key, node id); smallest first
using Entry = std::tuple<int, std::size_t, int, std::string, int>;
using Frontier = std::priority_queue<Entry, std::vector<Entry>, std::greater<>>;

struct Side {
  std::vector<Node> nodes;
  std::vector<int> depth;
  std::unordered_map<std::string, int> index;
  Frontier frontier;
  int min_genus = -1;

  int add(GaussCode code, int parent, MoveSpec move, std::string key, int score) {
    const int id = static_cast<int>(nodes.size());
    const int d = parent < 0 ? 0 : depth[parent] + 1;
    frontier.emplace(score, code.crossing_count(), d, key, id);
    nodes.push_back(Node{std::move(code), parent, std::move(move)});
    depth.push_back(d);
    index.emplace(std::move(key), id);
    return id;
  }

  void see_genus(int g) { min_genus = min_genus < 0 ? g : std::min(min_genus, g); }

  MoveTrace trace_to(int id) const {
    MoveTrace t;
    for (int x = id; nodes[x].parent >= 0; x = nodes[x].parent) t.steps.push_back(nodes[x].move);
    std::reverse(t.steps.begin(), t.steps.end());
    t.start = nodes[0].code;
    return t;
  }
};

Budget move_caps(const Budget& b) { return Budget{b.max_crossings, 0, b.threads}; }

}  // namespace

MeetResult bidirectional_search(const GaussCode& a, const GaussCode& b, const Budget& budget) {
  MeetResult result;
  const std::string key_a = normal_key(a), key_b = normal_key(b);
  Side sides[2];
  sides[0].add(a, -1, {}, key_a, 0);
  sides[1].add(b, -1, {}, key_b, 0);
  sides[0].see_genus(carter_genus(a));
  sides[1].see_genus(carter_genus(b));

  bool truncated[2] = {false, false};
  auto finish = [&] {
    auto& s = result.stats;
    s.visited_a = sides[0].nodes.size() - 1;
    s.visited_b = sides[1].nodes.size() - 1;
    s.min_genus_a = sides[0].min_genus;
    s.min_genus_b = sides[1].min_genus;
    // a side is exhausted only if it ran dry with nothing dropped for budget
    s.exhausted_a = !result.certificate && sides[0].frontier.empty() && !truncated[0];
    s.exhausted_b = !result.certificate && sides[1].frontier.empty() && !truncated[1];
    return result;
  };

  if (key_a == key_b) {
    result.certificate = EquivalenceCertificate{MoveTrace{a, {}}, MoveTrace{b, {}}, a};
    return finish();
  }

  const Budget caps = move_caps(budget);
  std::size_t used = 0;
  // the larger start goes first, so a simplifying move can reach the other
  int turn = std::make_pair(a.crossing_count(), key_a) < std::make_pair(b.crossing_count(), key_b) ? 1 : 0;
  while (used < budget.max_expansions) {
    if (sides[turn].frontier.empty()) {
      if (sides[1 - turn].frontier.empty()) break;
      turn = 1 - turn;
      continue;
    }
    Side& self = sides[turn];
    Side& other = sides[1 - turn];
    const int id = std::get<4>(self.frontier.top());
    self.frontier.pop();
    (turn == 0 ? result.stats.expanded_a : result.stats.expanded_b) += 1;

    const GaussCode current = self.nodes[id].code;
    for (auto& child : children_of(current, caps)) {
      if (self.index.count(child.key)) continue;
      if (auto hit = other.index.find(child.key); hit != other.index.end()) {
        MoveTrace mine = self.trace_to(id);
        mine.steps.push_back(child.move);
        MoveTrace theirs = other.trace_to(hit->second);
        if (turn == 0)
          result.certificate = EquivalenceCertificate{std::move(mine), std::move(theirs), child.code};
        else
          result.certificate = EquivalenceCertificate{std::move(theirs), std::move(mine), child.code};
        return finish();
      }
      // out of budget: the rest of this expansion is only checked for a meet
      if (used == budget.max_expansions) {
        truncated[turn] = true;
        continue;
      }
      ++used;
      self.see_genus(carter_genus(child.code));
      self.add(std::move(child.code), id, std::move(child.move), std::move(child.key), 0);
    }
    turn = 1 - turn;
  }
  return finish();
}

MinimumResult minimize(const GaussCode& code, const Budget& budget, bool stop_at_genus_zero) {
  Side side;
  std::vector<int> genus;
  std::vector<std::string> keys{normal_key(code)};
  const int g0 = carter_genus(code);
  side.add(code, -1, {}, keys[0], g0);
  genus.push_back(g0);

  int best = 0;
  auto better = [&](int x, int y) {
    return std::forward_as_tuple(genus[x], side.nodes[x].code.crossing_count(), keys[x]) <
           std::forward_as_tuple(genus[y], side.nodes[y].code.crossing_count(), keys[y]);
  };

  MinimumResult r;
  auto finish = [&](bool exhausted) {
    r.best = side.nodes[best].code;
    r.genus = genus[best];
    r.trace = side.trace_to(best);
    r.exhausted = exhausted;
    r.visited = side.nodes.size() - 1;
    return r;
  };
  if (stop_at_genus_zero && g0 == 0) return finish(false);

  const Budget caps = move_caps(budget);
  std::size_t used = 0;
  while (!side.frontier.empty()) {
    if (used >= budget.max_expansions) return finish(false);
    const int id = std::get<4>(side.frontier.top());
    side.frontier.pop();
    ++r.expanded;
    const GaussCode current = side.nodes[id].code;
    for (auto& child : children_of(current, caps)) {
      if (side.index.count(child.key)) continue;
      if (used == budget.max_expansions) return finish(false);
      ++used;
      const int g = carter_genus(child.code);
      keys.push_back(child.key);
      genus.push_back(g);
      const int cid = side.add(std::move(child.code), id, std::move(child.move), std::move(child.key), g);
      if (better(cid, best)) best = cid;
      if (stop_at_genus_zero && g == 0) return finish(false);
    }
  }
  return finish(true);
}

}  // namespace vlink
