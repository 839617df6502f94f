#include "vlink/codes.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace vlink {

std::size_t GaussCode::symbol_count() const noexcept {
  std::size_t n = 0;
  for (const auto& w : components_) n += w.size();
  return n;
}

std::uint32_t GaussCode::max_label() const noexcept {
  std::uint32_t m = 0;
  for (const auto& w : components_)
    for (const auto& s : w) m = std::max(m, s.label);
  return m;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].message;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        positions_.push_back(i);
      }
    }
    end_position_ = text.size();
  }

  GaussCode run() {
    if (chars_.empty()) fail("empty link: at least one component is required");
    std::vector<Word> components;
    components.push_back(component());
    while (!done()) {
      if (peek() != '/') fail(std::string("unexpected character '") + peek() + "'");
      ++i_;
      components.push_back(component());
    }
    return GaussCode(std::move(components));
  }

 private:
  Word component() {
    if (done() || peek() == '/') fail("empty component (write 0 for a crossing-free component)");
    if (peek() == '0') {
      ++i_;
      if (!done() && peek() != '/') fail("'0' must stand alone as a component");
      return {};
    }
    Word w;
    while (!done() && peek() != '/') w.push_back(symbol());
    return w;
  }

  Symbol symbol() {
    Symbol s;
    char c = peek();
    if (c == 'O') s.passage = Passage::Over;
    else if (c == 'U') s.passage = Passage::Under;
    else fail(std::string("expected 'O' or 'U', got '") + c + "'");
    ++i_;
    if (done() || peek() < '1' || peek() > '9') fail("expected a positive label");
    std::uint64_t label = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      label = label * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (label > std::numeric_limits<std::uint32_t>::max() / 4) fail("label too large");
      ++i_;
    }
    s.label = static_cast<std::uint32_t>(label);
    if (done()) fail("expected sign '+' or '-'");
    if (peek() == '+') s.sign = 1;
    else if (peek() == '-') s.sign = -1;
    else fail(std::string("expected sign '+' or '-', got '") + peek() + "'");
    ++i_;
    return s;
  }

  bool done() const { return i_ >= chars_.size(); }
  char peek() const { return chars_[i_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(i_ < positions_.size() ? positions_[i_] : end_position_, what);
  }

  std::vector<char> chars_;
  std::vector<std::size_t> positions_;
  std::size_t end_position_ = 0;
  std::size_t i_ = 0;
};

}  // namespace

GaussCode parse_gauss(std::string_view text) {
  GaussCode code = Parser(text).run();
  require_valid(code);
  return code;
}

ValidationReport validate(const GaussCode& code) {
  ValidationReport report;
  auto add = [&](Violation::Kind k, std::uint32_t label, std::string msg) {
    report.violations.push_back({k, label, std::move(msg)});
  };
  if (code.component_count() == 0) add(Violation::Kind::NoComponents, 0, "link has no components");

  struct Seen {
    int over = 0, under = 0;
    std::vector<int> signs;
  };
  std::map<std::uint32_t, Seen> seen;
  for (const auto& w : code.components()) {
    for (const auto& s : w) {
      if (s.label == 0) add(Violation::Kind::BadLabel, 0, "label 0 is not allowed");
      if (s.sign != 1 && s.sign != -1)
        add(Violation::Kind::BadSign, s.label, "label " + std::to_string(s.label) + ": sign must be +1 or -1");
      auto& e = seen[s.label];
      (s.passage == Passage::Over ? e.over : e.under)++;
      e.signs.push_back(s.sign);
    }
  }
  for (const auto& [label, e] : seen) {
    if (label == 0) continue;
    const std::string l = "label " + std::to_string(label);
    const int total = e.over + e.under;
    if (e.over > 1) add(Violation::Kind::DoubleOver, label, l + " occurs " + std::to_string(e.over) + " times as Over");
    if (e.under > 1) add(Violation::Kind::DoubleUnder, label, l + " occurs " + std::to_string(e.under) + " times as Under");
    if (total != 2) add(Violation::Kind::WrongMultiplicity, label, l + " occurs " + std::to_string(total) + " times");
    if (std::adjacent_find(e.signs.begin(), e.signs.end(), std::not_equal_to<>()) != e.signs.end())
      add(Violation::Kind::SignMismatch, label, l + ": sign mismatch");
  }
  return report;
}

void require_valid(const GaussCode& code) {
  auto report = validate(code);
  if (!report.ok()) throw ValidationError(std::move(report));
}

std::string serialize_gauss(const GaussCode& code) {
  std::string out;
  for (std::size_t c = 0; c < code.component_count(); ++c) {
    if (c) out += '/';
    const auto& w = code.component(c);
    if (w.empty()) {
      out += '0';
      continue;
    }
    for (const auto& s : w) {
      out += s.passage == Passage::Over ? 'O' : 'U';
      out += std::to_string(s.label);
      out += s.sign > 0 ? '+' : '-';
    }
  }
  return out;
}

GaussCode canonical_relabel(const GaussCode& code) {
  std::map<std::uint32_t, std::uint32_t> relabel;
  std::vector<Word> out;
  out.reserve(code.component_count());
  for (const auto& w : code.components()) {
    Word nw = w;
    for (auto& s : nw) {
      auto [it, inserted] = relabel.try_emplace(s.label, static_cast<std::uint32_t>(relabel.size() + 1));
      s.label = it->second;
    }
    out.push_back(std::move(nw));
  }
  return GaussCode(std::move(out));
}

namespace {

// Relabels one rotated component, extending `map` (0 = unassigned).
std::vector<std::uint32_t> encode_rotation(const Word& w, std::size_t rot, std::vector<std::uint32_t>& map,
                                           std::uint32_t& next) {
  std::vector<std::uint32_t> enc(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Symbol& s = w[(rot + i) % w.size()];
    auto& m = map[s.label];
    if (m == 0) m = next++;
    enc[i] = m * 4 + (s.passage == Passage::Under ? 2u : 0u) + (s.sign < 0 ? 1u : 0u);
  }
  return enc;
}

struct Candidate {
  std::vector<std::uint32_t> map;
  std::uint32_t next = 1;
  std::vector<std::size_t> rotations;
};

}  // namespace

GaussCode normal_form(const GaussCode& code) {
  const std::uint32_t max_label = code.max_label();
  std::vector<Candidate> live{Candidate{std::vector<std::uint32_t>(max_label + 1, 0), 1, {}}};
  for (const auto& w : code.components()) {
    if (w.empty()) {
      for (auto& c : live) c.rotations.push_back(0);
      continue;
    }
    std::vector<Candidate> best;
    std::vector<std::uint32_t> best_enc;
    for (const auto& cand : live) {
      for (std::size_t r = 0; r < w.size(); ++r) {
        Candidate next = cand;
        auto enc = encode_rotation(w, r, next.map, next.next);
        if (best.empty() || enc < best_enc) {
          best.clear();
          best_enc = std::move(enc);
        } else if (enc != best_enc) {
          continue;
        }
        next.rotations.push_back(r);
        best.push_back(std::move(next));
      }
    }
    // Different rotations can yield the same relabeled word only with
    // different label maps; keep one representative per distinct map.
    std::sort(best.begin(), best.end(), [](const Candidate& a, const Candidate& b) { return a.map < b.map; });
    best.erase(std::unique(best.begin(), best.end(), [](const Candidate& a, const Candidate& b) { return a.map == b.map; }),
               best.end());
    live = std::move(best);
  }
  // All survivors produce the same encoding up to this point; any of them is
  // the normal form.
  const Candidate& pick = live.front();
  std::vector<Word> out;
  out.reserve(code.component_count());
  for (std::size_t c = 0; c < code.component_count(); ++c) {
    const auto& w = code.component(c);
    Word nw(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      Symbol s = w[(pick.rotations[c] + i) % w.size()];
      s.label = pick.map[s.label];
      nw[i] = s;
    }
    out.push_back(std::move(nw));
  }
  return GaussCode(std::move(out));
}

std::string normal_key(const GaussCode& code) { return serialize_gauss(normal_form(code)); }

GaussCode sublink(const GaussCode& code, std::span<const std::size_t> components) {
  std::map<std::uint32_t, int> count;
  for (auto c : components)
    for (const auto& s : code.component(c)) count[s.label]++;
  std::vector<Word> out;
  for (auto c : components) {
    Word w;
    for (const auto& s : code.component(c))
      if (count[s.label] == 2) w.push_back(s);
    out.push_back(std::move(w));
  }
  return GaussCode(std::move(out));
}

int writhe(const GaussCode& code) {
  int w = 0;
  for (const auto& comp : code.components())
    for (const auto& s : comp)
      if (s.passage == Passage::Over) w += s.sign;
  return w;
}

}  // namespace vlink
