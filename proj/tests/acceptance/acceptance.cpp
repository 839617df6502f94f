// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
// Criteria 1-6 each append a canonical text record of everything they
// computed (fingerprints, verdict JSON, complex documents, embeddings) to a
// transcript. Criterion 7 reruns them with worker threads enabled and
// compares the transcripts byte for byte.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/test_support.hpp"
#include "vlink/complement.hpp"
#include "vlink/decider.hpp"
#include "vlink/invariants.hpp"
#include "vlink/json_io.hpp"
#include "vlink/moves.hpp"
#include "vlink/surface.hpp"

using namespace vlink;
using namespace vlink::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;  // first failing case
  void fail(const std::string& what) {
    if (pass) failure = what;
    pass = false;
  }
};

struct Corpus {
  std::vector<GaussCode> named;
  std::vector<GaussCode> random;  // 50 codes, at most 8 crossings
  std::vector<GaussCode> all() const {
    auto out = named;
    out.insert(out.end(), random.begin(), random.end());
    return out;
  }
};

Corpus make_corpus() {
  Corpus c;
  for (const char* t : {kUnknot, kKink, kTrefoil, kMirrorTrefoil, kVirtualTrefoil, kHopf, kVirtualHopf, kFigureEight})
    c.named.push_back(code(t));
  std::mt19937_64 rng(20261015);
  for (int i = 0; i < 50; ++i) {
    const int crossings = static_cast<int>(rng() % 9);
    const int components = rng() % 4 == 0 ? 2 + static_cast<int>(rng() % 2) : 1;
    c.random.push_back(random_code(rng, crossings, components));
  }
  return c;
}

std::string fingerprint_text(const GaussCode& c, unsigned threads) { return to_json(fingerprint(c, threads)).dump(); }

// 1. Fingerprints survive random move sequences.
Outcome move_invariance(const Corpus& corpus, unsigned threads, std::string& log) {
  Outcome o;
  std::mt19937_64 rng(101);
  std::size_t sequences = 0, moves = 0;
  for (const auto& start : corpus.random) {
    const std::string expected = fingerprint_text(start, threads);
    log += expected + '\n';
    const Budget caps{std::max<std::size_t>(start.crossing_count() + 2, 8), 0, threads};
    for (int s = 0; s < 200; ++s, ++sequences) {
      GaussCode c = start;
      const int length = static_cast<int>(rng() % 11);
      std::string path;
      for (int step = 0; step < length; ++step) {
        auto specs = enumerate_move_specs(c, caps);
        if (specs.empty()) break;
        const auto& m = specs[rng() % specs.size()];
        c = apply_move(c, m);
        path += describe(m) + ' ';
        ++moves;
      }
      const std::string got = fingerprint_text(c, threads);
      if (got != expected) o.fail(serialize_gauss(start) + " via " + path + "gives " + got);
      log += normal_key(c) + '\n';
    }
  }
  o.detail = std::to_string(corpus.random.size()) + " codes, " + std::to_string(sequences) + " sequences, " +
             std::to_string(moves) + " moves";
  return o;
}

// 2. State sum and skein recursion agree.
Outcome bracket_oracles(const Corpus& corpus, unsigned threads, std::string& log) {
  Outcome o;
  int checked = 0;
  for (const auto& c : corpus.all()) {
    if (c.crossing_count() > 6) continue;
    ++checked;
    auto states = kauffman_bracket(c, threads);
    auto skein = kauffman_bracket_skein(c);
    if (states != skein) o.fail(serialize_gauss(c) + ": " + states.to_string() + " vs " + skein.to_string());
    log += states.to_string() + '\n';
  }
  o.detail = std::to_string(checked) + " codes with at most 6 crossings";
  return o;
}

// 3. Euler laws on embeddings and complements.
Outcome euler_laws(const Corpus& corpus, std::string& log) {
  Outcome o;
  for (const auto& c : corpus.all()) {
    const std::string name = serialize_gauss(c);
    auto d = carter_embed(c);
    if (auto problems = check_diagram(d); !problems.empty()) o.fail(name + ": " + problems.front());
    auto census = face_census(c);
    int genus = 0;
    for (int g : supporting_genus(d)) genus += g;
    if (census.genus_sum() != genus) o.fail(name + ": genus differs from the face oracle");

    auto [cx, pattern] = build_complement(d);
    if (auto r = check_complex(cx, pattern); !r.ok()) o.fail(name + ": " + r.problems.front());
    long expected = 0;
    for (int g : supporting_genus(d)) expected += 2 - 2 * g;
    if (cx.euler_characteristic() != expected) o.fail(name + ": complex Euler characteristic");
    std::size_t surfaces = 0, tori = 0;
    for (const auto& b : boundary_components(cx))
      (b.label.kind == BoundaryLabel::Kind::Torus ? tori : surfaces) += 1;
    if (surfaces != 2 * d.surface_components.size() || tori != c.component_count() ||
        pattern.meridians.size() != c.component_count())
      o.fail(name + ": boundary census");
    if (reconstruct_census(cx, pattern) != census_of(d)) o.fail(name + ": census round trip");
    log += export_complex(cx, pattern) + '\n';
  }
  o.detail = std::to_string(corpus.all().size()) + " diagrams";
  return o;
}

// 4. Destabilization undoes random stabilization.
Outcome kuperberg_round_trip(const Corpus& corpus, std::string& log) {
  Outcome o;
  std::mt19937_64 rng(401);
  const auto codes = corpus.all();
  for (int t = 0; t < 100; ++t) {
    const auto& c = codes[rng() % codes.size()];
    const auto d = carter_embed(c);
    SurfaceDiagram s = d;
    const int steps = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < steps; ++i) {
      const int f = static_cast<int>(rng() % s.faces.size());
      if (s.faces.size() > 1 && rng() % 2 == 0) {
        int g = static_cast<int>(rng() % (s.faces.size() - 1));
        if (g >= f) ++g;
        s = stabilize(s, f, StabilizeKind::SplitWalkPair, g);
      } else {
        s = stabilize(s, f, StabilizeKind::AddHandle);
      }
    }
    auto back = destabilize_fully(s);
    if (!isomorphic(back, d) || !(back.code == c) || supporting_genus(back) != supporting_genus(d))
      o.fail(serialize_gauss(c) + " after " + std::to_string(steps) + " stabilizations");
    log += signature(back) + '\n';
  }
  o.detail = "100 sequences of 1 to 5 stabilizations";
  return o;
}

// Value an independent oracle assigns to a witness invariant; empty when the
// invariant has no oracle here.
std::string oracle_value(const GaussCode& c, const std::string& invariant) {
  if (invariant == "component_count") return std::to_string(c.component_count());
  if (invariant == "odd_writhe") return std::to_string(parity_odd_writhe(c.component(0)));
  for (int p : {3, 5, 7})
    if (invariant == "coloring_count(" + std::to_string(p) + ")") return std::to_string(brute_force_colorings(c, p));
  if (invariant == "linking_matrix") {
    // over sums from the tally oracle, under sums by transposition
    auto over = tally_over(c);
    std::string s = "[";
    for (std::size_t i = 0; i < over.size(); ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < over.size(); ++j)
        s += (j ? ",[" : "[") + std::to_string(over[i][j]) + "," + std::to_string(over[j][i]) + "]";
      s += "]";
    }
    return s + "]";
  }
  if (invariant == "f_polynomial") {
    // Golden values: f is 1 on unknots, and these on the trefoils.
    const std::string key = serialize_gauss(c);
    auto poly = [](std::initializer_list<std::pair<int, int>> terms) {
      LaurentPoly f;
      for (auto [e, c] : terms) f.add_term(e, c);
      return f.to_string();
    };
    if (key == kTrefoil) return poly({{-16, -1}, {-12, 1}, {-4, 1}});
    if (key == kMirrorTrefoil) return poly({{16, -1}, {12, 1}, {4, 1}});
  }
  return "";
}

// 5. Truth table on the named links.
Outcome truth_table(unsigned threads, std::string& log) {
  Outcome o;
  struct Entry {
    const char* name;
    const char* text;
    int cls;  // equivalence class
  };
  const Entry entries[] = {{"unknot", kUnknot, 0},         {"kinked unknot", kKink, 0},
                           {"trefoil", kTrefoil, 1},       {"mirror trefoil", kMirrorTrefoil, 2},
                           {"virtual trefoil", kVirtualTrefoil, 3}, {"Hopf", kHopf, 4},
                           {"virtual Hopf", kVirtualHopf, 5}};
  int pairs = 0;
  for (const auto& x : entries)
    for (const auto& y : entries) {
      ++pairs;
      const auto a = code(x.text), b = code(y.text);
      Budget budget = default_budget(a, b);
      budget.threads = threads;
      const auto v = decide(a, b, budget);
      const std::string label = std::string(x.name) + " vs " + y.name;
      log += to_json(v).dump() + '\n';
      if (x.cls == y.cls) {
        if (v.kind != VerdictKind::Equivalent || !check_certificate(a, b, *v.equivalence).ok)
          o.fail(label + ": expected a replayable equivalence");
        continue;
      }
      if (v.kind != VerdictKind::Distinct || !check_witness(a, b, *v.witness)) {
        o.fail(label + ": expected a checked distinctness witness");
        continue;
      }
      const auto& w = *v.witness;
      const GaussCode sa = w.components.empty() ? a : sublink(a, w.components);
      const GaussCode sb = w.components.empty() ? b : sublink(b, w.components);
      const std::string oa = oracle_value(sa, w.invariant), ob = oracle_value(sb, w.invariant);
      // an unknot's f is 1; unknown oracles leave the library value unchecked
      auto agrees = [&](const std::string& oracle, const std::string& value, const char* text) {
        if (!oracle.empty()) return oracle == value;
        if (w.invariant == "f_polynomial" && (text == kUnknot || text == kKink)) return value == "1";
        return true;
      };
      if (!agrees(oa, w.value_a, x.text) || !agrees(ob, w.value_b, y.text))
        o.fail(label + ": " + w.invariant + " " + w.value_a + " vs " + w.value_b + " disagrees with the oracle");
    }
  // the two pinned witnesses
  auto pinned = [&](const char* a, const char* b, const char* inv, const char* va, const char* vb) {
    const auto v = decide(code(a), code(b), default_budget(code(a), code(b)));
    if (!v.witness || v.witness->invariant != inv || v.witness->value_a != va || v.witness->value_b != vb)
      o.fail(std::string("pinned witness ") + inv);
  };
  pinned(kTrefoil, kUnknot, "coloring_count(3)", "9", "3");
  pinned(kVirtualTrefoil, kTrefoil, "odd_writhe", "2", "0");
  o.detail = std::to_string(pairs) + " ordered pairs over 7 diagrams";
  return o;
}

// 6. Move-equivalent pairs are never called distinct.
Outcome never_wrong(unsigned threads, std::string& log) {
  Outcome o;
  std::mt19937_64 rng(601);
  int equivalent = 0, unknown = 0, distinct_checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const GaussCode c = random_small_code(rng, 4);
    GaussCode d = c;
    const int steps = 1 + static_cast<int>(rng() % 4);
    const Budget caps{c.crossing_count() + 3, 0, 1};
    for (int i = 0; i < steps; ++i) {
      auto specs = enumerate_move_specs(d, caps);
      if (specs.empty()) break;
      d = apply_move(d, specs[rng() % specs.size()]);
    }
    const Budget budget{std::max(c.crossing_count(), d.crossing_count()) + 2, 3000, threads};
    const auto v = decide(c, d, budget);
    log += to_json(v).dump() + '\n';
    const std::string label = serialize_gauss(c) + " / " + serialize_gauss(d);
    switch (v.kind) {
      case VerdictKind::Distinct: o.fail(label + ": called distinct"); break;
      case VerdictKind::Equivalent:
        ++equivalent;
        if (!check_certificate(c, d, *v.equivalence).ok) o.fail(label + ": certificate does not replay");
        break;
      case VerdictKind::Unknown: ++unknown; break;
    }
  }
  // unrelated random pairs exercise the Distinct side of the contract
  for (int t = 0; t < 200; ++t) {
    const GaussCode a = random_small_code(rng, 4), b = random_small_code(rng, 4);
    Budget budget{std::max(a.crossing_count(), b.crossing_count()) + 1, 200, threads};
    const auto v = decide(a, b, budget);
    log += to_json(v).dump() + '\n';
    if (v.kind == VerdictKind::Distinct) {
      ++distinct_checked;
      if (!check_witness(a, b, *v.witness)) o.fail(serialize_gauss(a) + " / " + serialize_gauss(b) + ": witness");
    } else if (v.kind == VerdictKind::Equivalent && !check_certificate(a, b, *v.equivalence).ok) {
      o.fail(serialize_gauss(a) + " / " + serialize_gauss(b) + ": certificate");
    }
  }
  o.detail = "1000 move-equivalent pairs: " + std::to_string(equivalent) + " equivalent, " + std::to_string(unknown) +
             " unknown, 0 distinct allowed; " + std::to_string(distinct_checked) + " distinct witnesses rechecked";
  return o;
}

struct Run {
  std::vector<Outcome> outcomes;
  std::vector<std::string> transcripts;
  double seconds = 0;
};

Run run_all(const Corpus& corpus, unsigned threads) {
  Run r;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::function<Outcome(std::string&)>> steps{
      [&](std::string& log) { return move_invariance(corpus, threads, log); },
      [&](std::string& log) { return bracket_oracles(corpus, threads, log); },
      [&](std::string& log) { return euler_laws(corpus, log); },
      [&](std::string& log) { return kuperberg_round_trip(corpus, log); },
      [&](std::string& log) { return truth_table(threads, log); },
      [&](std::string& log) { return never_wrong(threads, log); },
  };
  for (auto& step : steps) {
    std::string log;
    r.outcomes.push_back(step(log));
    r.transcripts.push_back(std::move(log));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

int main() {
  const char* names[] = {"move invariance", "bracket oracle equivalence", "Euler laws", "Kuperberg round trip",
                         "decider truth table", "never wrong", "determinism"};
  const Corpus corpus = make_corpus();
  const Run serial = run_all(corpus, 1);
  const Run repeat = run_all(corpus, 1);
  const Run threaded = run_all(corpus, 4);

  bool all = true;
  for (std::size_t i = 0; i < serial.outcomes.size(); ++i) {
    const auto& o = serial.outcomes[i];
    all &= o.pass;
    std::printf("criterion %zu %s: %s (%s)%s%s\n", i + 1, names[i], o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                o.pass ? "" : "; first failure: ", o.failure.c_str());
  }

  Outcome det;
  std::size_t bytes = 0;
  for (std::size_t i = 0; i < serial.transcripts.size(); ++i) {
    bytes += serial.transcripts[i].size();
    if (serial.transcripts[i] != repeat.transcripts[i]) det.fail("criterion " + std::to_string(i + 1) + " repeat differs");
    if (serial.transcripts[i] != threaded.transcripts[i])
      det.fail("criterion " + std::to_string(i + 1) + " with 4 threads differs");
    if (serial.outcomes[i].pass != threaded.outcomes[i].pass) det.fail("pass/fail changes with threads");
  }
  all &= det.pass;
  std::printf("criterion 7 %s: %s (3 runs, 1/1/4 threads, %zu transcript bytes each)%s%s\n", names[6],
              det.pass ? "PASS" : "FAIL", bytes, det.pass ? "" : "; first failure: ", det.failure.c_str());
  std::printf("timing: %.1fs serial, %.1fs repeat, %.1fs threaded\n", serial.seconds, repeat.seconds, threaded.seconds);
  return all ? 0 : 1;
}
