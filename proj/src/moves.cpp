#include "vlink/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace vlink {

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Add: return "R1_add";
    case MoveKind::R1Remove: return "R1_remove";
    case MoveKind::R2Add: return "R2_add";
    case MoveKind::R2Remove: return "R2_remove";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (auto k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3})
    if (to_string(k) == s) return k;
  throw InapplicableMove("unknown move kind '" + s + "'");
}

std::string describe(const MoveSpec& m) {
  std::ostringstream os;
  os << to_string(m.kind) << '@';
  for (std::size_t i = 0; i < m.sites.size(); ++i)
    os << (i ? "," : "") << '[' << m.sites[i].component << ',' << m.sites[i].offset << ']';
  if (m.kind == MoveKind::R1Add) os << (m.sign > 0 ? " +" : " -") << (m.over_first ? " OU" : " UO");
  if (m.kind == MoveKind::R2Add)
    os << (m.sign > 0 ? " +" : " -") << (m.reversed ? " rev" : "") << (m.under_first ? " under-first" : "");
  return os.str();
}

const std::array<TriangleShape, 16>& admissible_triangles() {
  // Every order/sign pattern realized by three oriented straight lines at
  // three heights; the swap of all three pairs maps the table to itself.
  static const std::array<TriangleShape, 16> table{{
      {false, false, false, -1, -1, -1}, {false, false, false, 1, 1, 1},
      {false, false, true, -1, 1, 1},    {false, false, true, 1, -1, -1},
      {false, true, false, -1, 1, -1},   {false, true, false, 1, -1, 1},
      {false, true, true, -1, -1, 1},    {false, true, true, 1, 1, -1},
      {true, false, false, -1, -1, 1},   {true, false, false, 1, 1, -1},
      {true, false, true, -1, 1, -1},    {true, false, true, 1, -1, 1},
      {true, true, false, -1, 1, 1},     {true, true, false, 1, -1, -1},
      {true, true, true, -1, -1, -1},    {true, true, true, 1, 1, 1},
  }};
  return table;
}

bool is_admissible(const TriangleShape& t) {
  const auto& table = admissible_triangles();
  return std::find(table.begin(), table.end(), t) != table.end();
}

namespace {

using Pos = std::pair<int, int>;  // component, offset

const Word& word_at(const GaussCode& code, int c) {
  if (c < 0 || c >= static_cast<int>(code.component_count())) throw InapplicableMove("component out of range");
  return code.component(static_cast<std::size_t>(c));
}

void require_gap(const GaussCode& code, const Site& s) {
  const Word& w = word_at(code, s.component);
  const int len = static_cast<int>(w.size());
  if (s.offset < 0 || s.offset >= std::max(len, 1)) throw InapplicableMove("gap offset out of range");
}

// The two positions of the adjacent pair starting at `s`.
std::pair<Pos, Pos> pair_at(const GaussCode& code, const Site& s) {
  const Word& w = word_at(code, s.component);
  const int len = static_cast<int>(w.size());
  if (len < 2 || s.offset < 0 || s.offset >= len) throw InapplicableMove("pair offset out of range");
  return {{s.component, s.offset}, {s.component, (s.offset + 1) % len}};
}

const Symbol& sym(const GaussCode& code, Pos p) { return code.component(p.first)[p.second]; }

std::vector<Word> erase_positions(const GaussCode& code, std::vector<Pos> positions) {
  std::vector<Word> comps = code.components();
  std::sort(positions.begin(), positions.end());
  for (auto it = positions.rbegin(); it != positions.rend(); ++it) comps[it->first].erase(comps[it->first].begin() + it->second);
  return comps;
}

struct Triangle {
  Site top, middle, bottom;
  TriangleShape shape;
};

// Identifies the strand roles of three pairs; nullopt if they do not form a
// triangle.
std::optional<Triangle> triangle_of(const GaussCode& code, const std::array<Site, 3>& sites) {
  std::array<std::pair<Pos, Pos>, 3> pairs;
  for (int i = 0; i < 3; ++i) pairs[i] = pair_at(code, sites[i]);
  std::set<Pos> distinct;
  for (const auto& p : pairs) {
    distinct.insert(p.first);
    distinct.insert(p.second);
  }
  if (distinct.size() != 6) return std::nullopt;

  int top = -1, middle = -1, bottom = -1;
  for (int i = 0; i < 3; ++i) {
    const auto& a = sym(code, pairs[i].first);
    const auto& b = sym(code, pairs[i].second);
    if (a.label == b.label) return std::nullopt;
    int overs = (a.passage == Passage::Over) + (b.passage == Passage::Over);
    int& slot = overs == 2 ? top : overs == 1 ? middle : bottom;
    if (slot != -1) return std::nullopt;
    slot = i;
  }
  const Symbol& t0 = sym(code, pairs[top].first);
  const Symbol& t1 = sym(code, pairs[top].second);
  const Symbol& m0 = sym(code, pairs[middle].first);
  const Symbol& m1 = sym(code, pairs[middle].second);
  const Symbol& b0 = sym(code, pairs[bottom].first);
  const Symbol& b1 = sym(code, pairs[bottom].second);

  const Symbol& m_under = m0.passage == Passage::Under ? m0 : m1;
  const Symbol& m_over = m0.passage == Passage::Over ? m0 : m1;
  const std::uint32_t tm = m_under.label;
  const std::uint32_t mb = m_over.label;
  if (tm != t0.label && tm != t1.label) return std::nullopt;
  const std::uint32_t tb = tm == t0.label ? t1.label : t0.label;
  const bool bottom_ok = (b0.label == tb && b1.label == mb) || (b0.label == mb && b1.label == tb);
  if (!bottom_ok || mb == tb || mb == tm) return std::nullopt;

  Triangle tri{sites[top], sites[middle], sites[bottom], {}};
  tri.shape.top_first = t0.label == tm;
  tri.shape.middle_first = m0.label == tm;
  tri.shape.bottom_first = b0.label == tb;
  tri.shape.sign_tm = m_under.sign;
  tri.shape.sign_tb = t0.label == tb ? t0.sign : t1.sign;
  tri.shape.sign_mb = m_over.sign;
  return tri;
}

std::array<Site, 3> sorted_sites(std::array<Site, 3> s) {
  std::sort(s.begin(), s.end());
  return s;
}

// Position of the first kept symbol after the removed pair starting at `start`,
// re-indexed in the shrunken word; 0 when the word empties.
int gap_after_removal(const Word& w, int start, const std::vector<char>& removed) {
  const int len = static_cast<int>(w.size());
  for (int step = 2; step < len; ++step) {
    int p = (start + step) % len;
    if (removed[p]) continue;
    int index = 0;
    for (int q = 0; q < p; ++q) index += !removed[q];
    return index;
  }
  return 0;
}

}  // namespace

GaussCode apply_move(const GaussCode& code, const MoveSpec& m) {
  const std::size_t expected_sites = m.kind == MoveKind::R3 ? 3 : (m.kind == MoveKind::R2Add || m.kind == MoveKind::R2Remove) ? 2 : 1;
  if (m.sites.size() != expected_sites) throw InapplicableMove("wrong number of sites for " + to_string(m.kind));
  if ((m.kind == MoveKind::R1Add || m.kind == MoveKind::R2Add) && m.sign != 1 && m.sign != -1)
    throw InapplicableMove("sign must be +1 or -1");

  switch (m.kind) {
    case MoveKind::R1Add: {
      require_gap(code, m.sites[0]);
      const std::uint32_t label = code.max_label() + 1;
      std::vector<Word> comps = code.components();
      Word& w = comps[m.sites[0].component];
      Symbol over{label, Passage::Over, m.sign}, under{label, Passage::Under, m.sign};
      Word ins = m.over_first ? Word{over, under} : Word{under, over};
      w.insert(w.begin() + m.sites[0].offset, ins.begin(), ins.end());
      return GaussCode(std::move(comps));
    }
    case MoveKind::R1Remove: {
      auto [p, q] = pair_at(code, m.sites[0]);
      if (p == q || sym(code, p).label != sym(code, q).label) throw InapplicableMove("R1_remove: pair is not a kink");
      return GaussCode(erase_positions(code, {p, q}));
    }
    case MoveKind::R2Add: {
      require_gap(code, m.sites[0]);
      require_gap(code, m.sites[1]);
      const std::uint32_t a = code.max_label() + 1, b = a + 1;
      Word overs{{a, Passage::Over, m.sign}, {b, Passage::Over, -m.sign}};
      Word unders{{a, Passage::Under, m.sign}, {b, Passage::Under, -m.sign}};
      if (m.reversed) std::swap(unders[0], unders[1]);
      std::vector<Word> comps = code.components();
      const Site& so = m.sites[0];
      const Site& su = m.sites[1];
      if (so == su) {
        Word ins = m.under_first ? unders : overs;
        const Word& second = m.under_first ? overs : unders;
        ins.insert(ins.end(), second.begin(), second.end());
        Word& w = comps[so.component];
        w.insert(w.begin() + so.offset, ins.begin(), ins.end());
      } else {
        if (m.under_first) throw InapplicableMove("R2_add: under_first needs coinciding gaps");
        // Insert at the later position first so the earlier offset stays valid.
        bool over_later = su < so;
        const Site& first = over_later ? so : su;
        const Site& second = over_later ? su : so;
        const Word& first_ins = over_later ? overs : unders;
        const Word& second_ins = over_later ? unders : overs;
        comps[first.component].insert(comps[first.component].begin() + first.offset, first_ins.begin(), first_ins.end());
        comps[second.component].insert(comps[second.component].begin() + second.offset, second_ins.begin(), second_ins.end());
      }
      return GaussCode(std::move(comps));
    }
    case MoveKind::R2Remove: {
      auto [o1, o2] = pair_at(code, m.sites[0]);
      auto [u1, u2] = pair_at(code, m.sites[1]);
      std::set<Pos> all{o1, o2, u1, u2};
      if (all.size() != 4) throw InapplicableMove("R2_remove: pairs overlap");
      const auto &x1 = sym(code, o1), &x2 = sym(code, o2), &y1 = sym(code, u1), &y2 = sym(code, u2);
      if (x1.passage != Passage::Over || x2.passage != Passage::Over) throw InapplicableMove("R2_remove: first pair is not Over-Over");
      if (y1.passage != Passage::Under || y2.passage != Passage::Under) throw InapplicableMove("R2_remove: second pair is not Under-Under");
      if (x1.label == x2.label) throw InapplicableMove("R2_remove: repeated label");
      if (!((y1.label == x1.label && y2.label == x2.label) || (y1.label == x2.label && y2.label == x1.label)))
        throw InapplicableMove("R2_remove: pairs do not share both labels");
      if (x1.sign != -x2.sign) throw InapplicableMove("R2_remove: signs do not cancel");
      return GaussCode(erase_positions(code, {o1, o2, u1, u2}));
    }
    case MoveKind::R3: {
      auto tri = triangle_of(code, {m.sites[0], m.sites[1], m.sites[2]});
      if (!tri) throw InapplicableMove("R3: sites do not form a triangle");
      if (!is_admissible(tri->shape)) throw InapplicableMove("R3: triangle configuration is not admissible");
      std::vector<Word> comps = code.components();
      for (const auto& s : m.sites) {
        auto [p, q] = pair_at(code, s);
        std::swap(comps[p.first][p.second], comps[q.first][q.second]);
      }
      return GaussCode(std::move(comps));
    }
  }
  throw InapplicableMove("unknown move");
}

MoveSpec inverse_move(const GaussCode& before, const MoveSpec& m) {
  switch (m.kind) {
    case MoveKind::R1Add:
      return MoveSpec{MoveKind::R1Remove, {m.sites[0]}};
    case MoveKind::R1Remove: {
      auto [p, q] = pair_at(before, m.sites[0]);
      const Symbol& first = sym(before, p);
      const int len = static_cast<int>(before.component(p.first).size());
      int gap = q.second > p.second && p.second < len - 2 ? p.second : 0;
      MoveSpec inv{MoveKind::R1Add, {{p.first, gap}}};
      inv.sign = first.sign;
      inv.over_first = first.passage == Passage::Over;
      return inv;
    }
    case MoveKind::R2Add: {
      GaussCode after = apply_move(before, m);
      const std::uint32_t a = before.max_label() + 1;
      Site over_site{}, under_site{};
      for (int c = 0; c < static_cast<int>(after.component_count()); ++c) {
        const Word& w = after.component(c);
        for (int i = 0; i < static_cast<int>(w.size()); ++i) {
          if (w[i].label == a && w[i].passage == Passage::Over) over_site = {c, i};
          std::uint32_t lead = m.reversed ? a + 1 : a;
          if (w[i].label == lead && w[i].passage == Passage::Under) under_site = {c, i};
        }
      }
      return MoveSpec{MoveKind::R2Remove, {over_site, under_site}};
    }
    case MoveKind::R2Remove: {
      auto [o1, o2] = pair_at(before, m.sites[0]);
      auto [u1, u2] = pair_at(before, m.sites[1]);
      std::map<int, std::vector<char>> removed;
      for (std::size_t c = 0; c < before.component_count(); ++c) removed[static_cast<int>(c)].assign(before.component(c).size(), 0);
      for (Pos p : {o1, o2, u1, u2}) removed[p.first][p.second] = 1;
      const Symbol& lead = sym(before, o1);
      MoveSpec inv{MoveKind::R2Add, {}};
      Site go{o1.first, gap_after_removal(before.component(o1.first), o1.second, removed[o1.first])};
      Site gu{u1.first, gap_after_removal(before.component(u1.first), u1.second, removed[u1.first])};
      inv.sites = {go, gu};
      inv.sign = lead.sign;
      inv.reversed = sym(before, u1).label != lead.label;
      if (go == gu) {
        const int len = static_cast<int>(before.component(u1.first).size());
        inv.under_first = (u2.second + 1) % len == o1.second && len > 4;
      }
      return inv;
    }
    case MoveKind::R3:
      return m;
  }
  throw InapplicableMove("unknown move");
}

namespace {

std::vector<Site> gaps(const GaussCode& code) {
  std::vector<Site> out;
  for (int c = 0; c < static_cast<int>(code.component_count()); ++c) {
    int len = static_cast<int>(code.component(c).size());
    for (int o = 0; o < std::max(len, 1); ++o) out.push_back({c, o});
  }
  return out;
}

// Adjacent pairs; on a two-symbol word the pair at offset 1 covers the same
// positions as offset 0 and is listed only when `both_orders` is set.
std::vector<Site> pairs(const GaussCode& code, bool both_orders) {
  std::vector<Site> out;
  for (int c = 0; c < static_cast<int>(code.component_count()); ++c) {
    int len = static_cast<int>(code.component(c).size());
    if (len < 2) continue;
    int limit = (len == 2 && !both_orders) ? 1 : len;
    for (int o = 0; o < limit; ++o) out.push_back({c, o});
  }
  return out;
}

void r3_moves(const GaussCode& code, std::vector<MoveSpec>& out) {
  std::map<std::pair<std::uint32_t, Passage>, Pos> where;
  for (int c = 0; c < static_cast<int>(code.component_count()); ++c) {
    const Word& w = code.component(c);
    for (int i = 0; i < static_cast<int>(w.size()); ++i) where[{w[i].label, w[i].passage}] = {c, i};
  }
  // Pairs containing the given position: the one ending there and the one starting there.
  auto pairs_through = [&](Pos p) {
    const int len = static_cast<int>(code.component(p.first).size());
    std::vector<Site> s;
    if (len < 2) return s;
    s.push_back({p.first, (p.second + len - 1) % len});
    s.push_back({p.first, p.second});
    return s;
  };
  auto other_in_pair = [&](const Site& s, Pos p) {
    auto [a, b] = pair_at(code, s);
    return a == p ? b : a;
  };

  std::set<std::array<Site, 3>> found;
  for (const Site& top : pairs(code, true)) {
    auto [p0, p1] = pair_at(code, top);
    const Symbol &s0 = sym(code, p0), &s1 = sym(code, p1);
    if (s0.passage != Passage::Over || s1.passage != Passage::Over || s0.label == s1.label) continue;
    for (int swap = 0; swap < 2; ++swap) {
      const std::uint32_t tm = swap ? s1.label : s0.label;
      const std::uint32_t tb = swap ? s0.label : s1.label;
      Pos u_tm = where.at({tm, Passage::Under});
      for (const Site& mid : pairs_through(u_tm)) {
        const Symbol& z = sym(code, other_in_pair(mid, u_tm));
        if (z.passage != Passage::Over || z.label == tm || z.label == tb) continue;
        Pos u_tb = where.at({tb, Passage::Under});
        for (const Site& bot : pairs_through(u_tb)) {
          const Symbol& y = sym(code, other_in_pair(bot, u_tb));
          if (y.passage != Passage::Under || y.label != z.label) continue;
          auto key = sorted_sites({top, mid, bot});
          if (found.count(key)) continue;
          auto tri = triangle_of(code, key);
          if (tri && is_admissible(tri->shape)) found.insert(key);
        }
      }
    }
  }
  for (const auto& k : found) out.push_back(MoveSpec{MoveKind::R3, {k[0], k[1], k[2]}});
}

}  // namespace

std::vector<MoveSpec> enumerate_move_specs(const GaussCode& code, const Budget& caps) {
  std::vector<MoveSpec> out;
  for (const Site& s : pairs(code, false)) {
    auto [p, q] = pair_at(code, s);
    if (sym(code, p).label == sym(code, q).label) out.push_back(MoveSpec{MoveKind::R1Remove, {s}});
  }
  const auto pair_list = pairs(code, false);
  for (const Site& so : pair_list) {
    auto [o1, o2] = pair_at(code, so);
    const Symbol &x1 = sym(code, o1), &x2 = sym(code, o2);
    if (x1.passage != Passage::Over || x2.passage != Passage::Over || x1.label == x2.label || x1.sign != -x2.sign) continue;
    for (const Site& su : pair_list) {
      auto [u1, u2] = pair_at(code, su);
      const Symbol &y1 = sym(code, u1), &y2 = sym(code, u2);
      if (y1.passage != Passage::Under || y2.passage != Passage::Under) continue;
      if ((y1.label == x1.label && y2.label == x2.label) || (y1.label == x2.label && y2.label == x1.label))
        out.push_back(MoveSpec{MoveKind::R2Remove, {so, su}});
    }
  }
  r3_moves(code, out);

  const std::size_t n = code.crossing_count();
  const auto gap_list = gaps(code);
  if (n + 1 <= caps.max_crossings) {
    for (const Site& g : gap_list)
      for (int sign : {1, -1})
        for (bool over_first : {true, false}) {
          MoveSpec m{MoveKind::R1Add, {g}};
          m.sign = sign;
          m.over_first = over_first;
          out.push_back(m);
        }
  }
  if (n + 2 <= caps.max_crossings) {
    for (const Site& go : gap_list)
      for (const Site& gu : gap_list)
        for (int sign : {1, -1})
          for (bool reversed : {false, true})
            for (bool under_first : {false, true}) {
              if (under_first && go != gu) continue;
              MoveSpec m{MoveKind::R2Add, {go, gu}};
              m.sign = sign;
              m.reversed = reversed;
              m.under_first = under_first;
              out.push_back(m);
            }
  }
  return out;
}

std::vector<std::pair<MoveSpec, GaussCode>> enumerate_moves(const GaussCode& code, const Budget& caps) {
  auto specs = enumerate_move_specs(code, caps);
  std::vector<std::pair<MoveSpec, GaussCode>> out(specs.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = {specs[i], apply_move(code, specs[i])};
  };
  const std::size_t threads = std::max<std::size_t>(1, caps.threads);
  if (threads == 1 || specs.size() < 64) {
    work(0, specs.size());
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (specs.size() + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    std::size_t b = t * chunk, e = std::min(specs.size(), b + chunk);
    if (b < e) pool.emplace_back(work, b, e);
  }
  for (auto& th : pool) th.join();
  return out;
}

GaussCode replay(const MoveTrace& t) {
  GaussCode c = t.start;
  for (const auto& m : t.steps) c = apply_move(c, m);
  return c;
}

TraceCheck verify_trace(const MoveTrace& t, const GaussCode& expected_end) {
  TraceCheck r;
  if (!validate(t.start).ok()) {
    r.failed_step = 0;
    r.message = "start code is invalid";
    return r;
  }
  GaussCode c = t.start;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    try {
      c = apply_move(c, t.steps[i]);
    } catch (const std::exception& e) {
      r.failed_step = static_cast<int>(i);
      r.message = "step " + std::to_string(i) + " (" + describe(t.steps[i]) + "): " + e.what();
      return r;
    }
  }
  if (normal_key(c) != normal_key(expected_end)) {
    r.message = "trace ends at " + serialize_gauss(c) + ", expected " + serialize_gauss(expected_end);
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace vlink
