#include "vlink/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "vlink/complement.hpp"
#include "vlink/decider.hpp"
#include "vlink/json_io.hpp"
#include "vlink/surface.hpp"

namespace vlink::cli {

namespace {

// Invalid code text, reported with a character position.
struct DataError {
  std::string message;
};

std::size_t label_position(const std::string& text, std::uint32_t label) {
  std::smatch m;
  const std::regex re("[OU]" + std::to_string(label) + "[+-]");
  return std::regex_search(text, m, re) ? static_cast<std::size_t>(m.position(0)) : 0;
}

GaussCode read_code(const std::string& text) {
  try {
    return parse_gauss(text);
  } catch (const ParseError& e) {
    throw DataError{"invalid code '" + text + "': " + e.what()};
  } catch (const ValidationError& e) {
    const auto& v = e.report().violations.front();
    throw DataError{"invalid code '" + text + "': " + v.message + " at position " +
                    std::to_string(label_position(text, v.label))};
  }
}

struct Options {
  bool json = false;
  std::optional<std::size_t> max_crossings;
  std::optional<std::size_t> max_expansions;
  unsigned threads = 1;
  std::optional<std::string> env_expansions;

  Budget budget(std::size_t largest_input) const {
    Budget b{largest_input + 4, 200000, threads};
    if (env_expansions && !max_expansions) {
      try {
        std::size_t used = 0;
        b.max_expansions = std::stoull(*env_expansions, &used);
        if (used != env_expansions->size()) throw std::invalid_argument("trailing text");
      } catch (const std::exception&) {
        throw CLI::ValidationError("VL_MAX_EXPANSIONS", "not a nonnegative integer: " + *env_expansions);
      }
    }
    if (max_crossings) b.max_crossings = *max_crossings;
    if (max_expansions) b.max_expansions = *max_expansions;
    return b;
  }
};

std::string genus_text(const std::vector<int>& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? " " : "") + std::to_string(g[i]);
  return s;
}

std::string trace_text(const MoveTrace& t) {
  if (t.steps.empty()) return "(no moves)";
  std::string s;
  for (std::size_t i = 0; i < t.steps.size(); ++i) s += (i ? " " : "") + describe(t.steps[i]);
  return s;
}

int cmd_parse(const Options& o, const std::string& text, std::ostream& out) {
  auto c = read_code(text);
  if (o.json) {
    out << Json{{"code", serialize_gauss(c)},
                {"normal_form", normal_key(c)},
                {"components", c.component_count()},
                {"crossings", c.crossing_count()},
                {"writhe", writhe(c)}}
               .dump()
        << '\n';
  } else {
    out << "code: " << serialize_gauss(c) << "\nnormal form: " << normal_key(c) << "\ncomponents: "
        << c.component_count() << "\ncrossings: " << c.crossing_count() << "\nwrithe: " << writhe(c) << '\n';
  }
  return 0;
}

int cmd_genus(const Options& o, const std::string& text, std::ostream& out) {
  auto d = carter_embed(read_code(text));
  auto g = supporting_genus(d);
  if (o.json) {
    int total = 0;
    for (int x : g) total += x;
    out << Json{{"genus", g}, {"total", total}, {"faces", d.faces.size()}}.dump() << '\n';
  } else {
    out << genus_text(g) << '\n';
  }
  return 0;
}

int cmd_invariants(const Options& o, const std::string& text, std::ostream& out) {
  auto c = read_code(text);
  auto f = fingerprint(c, o.threads);
  if (o.json) {
    out << to_json(f).dump() << '\n';
    return 0;
  }
  out << "components: " << f.component_count << "\nf: " << f.f_poly.to_string() << '\n';
  if (f.odd_writhe) out << "odd writhe: " << *f.odd_writhe << '\n';
  out << "linking: " << to_string(f.linking) << '\n';
  for (auto [p, n] : f.colorings) out << "colorings mod " << p << ": " << n << '\n';
  return 0;
}

int cmd_canon(const Options& o, const std::string& text, std::ostream& out) {
  auto c = read_code(text);
  auto m = canonical_minimum(c, o.budget(c.crossing_count()));
  if (o.json) {
    out << Json{{"code", serialize_gauss(m.code)},
                {"genus", m.genus},
                {"exhausted", m.exhausted},
                {"visited", m.visited},
                {"trace", to_json(m.trace)}}
               .dump()
        << '\n';
  } else {
    out << serialize_gauss(m.code) << "\ngenus: " << m.genus << (m.exhausted ? " (minimum)" : " (upper bound)")
        << "\ntrace: " << trace_text(m.trace) << '\n';
  }
  return 0;
}

int exit_for(VerdictKind k) {
  switch (k) {
    case VerdictKind::Equivalent: return Exit::Equivalent;
    case VerdictKind::Distinct: return Exit::Distinct;
    case VerdictKind::Unknown: return Exit::Unknown;
  }
  return Exit::Unknown;
}

void print_verdict(const Verdict& v, std::ostream& out) {
  out << to_string(v.kind) << '\n';
  if (v.equivalence) {
    out << "meeting: " << serialize_gauss(v.equivalence->meeting) << "\nfrom a: "
        << trace_text(v.equivalence->from_a) << "\nfrom b: " << trace_text(v.equivalence->from_b) << '\n';
  } else if (v.witness) {
    out << "witness: " << v.witness->invariant;
    if (!v.witness->components.empty()) {
      out << " on components";
      for (auto k : v.witness->components) out << ' ' << k;
    }
    out << ": " << v.witness->value_a << " vs " << v.witness->value_b << '\n';
  } else {
    out << v.note << "\nvisited: " << v.explored.visited() << '\n';
  }
}

int cmd_compare(const Options& o, const std::string& ta, const std::string& tb, std::ostream& out) {
  auto a = read_code(ta);
  auto b = read_code(tb);
  auto v = decide(a, b, o.budget(std::max(a.crossing_count(), b.crossing_count())));
  if (o.json) out << to_json(v).dump() << '\n';
  else print_verdict(v, out);
  return exit_for(v.kind);
}

int cmd_complement(const Options& o, const std::string& text, const std::string& path, std::ostream& out) {
  auto d = destabilize_fully(carter_embed(read_code(text)));
  auto [c, p] = build_complement(d);
  const std::string doc = export_complex(c, p);
  if (path.empty() || path == "-") {
    out << doc << '\n';
    return 0;
  }
  std::ofstream file(path);
  if (!file || !(file << doc << '\n')) throw std::ios_base::failure("cannot write " + path);
  if (o.json) {
    out << Json{{"file", path},
                {"blocks", c.blocks.size()},
                {"gluings", c.gluings.size()},
                {"euler", c.euler_characteristic()},
                {"meridians", p.meridians.size()}}
               .dump()
        << '\n';
  } else {
    out << "wrote " << path << ": " << c.blocks.size() << " blocks, " << c.gluings.size() << " gluings, euler "
        << c.euler_characteristic() << ", " << p.meridians.size() << " meridians\n";
  }
  return 0;
}

int cmd_table(const Options& o, const std::string& path, std::istream& in, std::ostream& out) {
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::ios_base::failure("cannot read " + path);
  }
  std::istream& src = path == "-" ? in : file;
  std::vector<std::string> texts;
  std::vector<GaussCode> codes;
  std::string line;
  for (int n = 1; std::getline(src, line); ++n) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    texts.push_back(line.substr(first, last - first + 1));
    try {
      codes.push_back(read_code(texts.back()));
    } catch (const DataError& e) {
      throw DataError{path + ":" + std::to_string(n) + ": " + e.message};
    }
  }
  std::size_t largest = 0;
  for (const auto& c : codes) largest = std::max(largest, c.crossing_count());
  const Budget budget = o.budget(largest);

  std::vector<std::vector<Verdict>> table(codes.size(), std::vector<Verdict>(codes.size()));
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (std::size_t j = 0; j < codes.size(); ++j) table[i][j] = decide(codes[i], codes[j], budget);

  if (o.json) {
    Json rows = Json::array();
    for (const auto& row : table) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(to_json(v));
      rows.push_back(std::move(r));
    }
    out << Json{{"codes", texts}, {"budget", to_json(budget)}, {"verdicts", rows}}.dump() << '\n';
    return 0;
  }
  for (std::size_t i = 0; i < codes.size(); ++i) out << i << ": " << texts[i] << '\n';
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = 0; j < codes.size(); ++j) {
      const char mark = table[i][j].kind == VerdictKind::Equivalent ? '=' : table[i][j].kind == VerdictKind::Distinct ? 'x' : '?';
      out << (j ? " " : "") << mark;
    }
    out << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_max_expansions) {
  CLI::App app{"Virtual link diagrams: parse, embed, compare"};
  app.name("vlink");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  o.env_expansions = std::move(env_max_expansions);
  std::size_t max_crossings = 0, max_expansions = 0;
  app.add_flag("--json", o.json, "Machine-readable output");
  auto* mc = app.add_option("--max-crossings", max_crossings, "Largest diagram the search may build");
  auto* me = app.add_option("--max-expansions", max_expansions, "Codes the search may discover (VL_MAX_EXPANSIONS)");
  app.add_option("--threads", o.threads, "Worker threads; results do not depend on it")->check(CLI::Range(1u, 256u));

  std::string code_a, code_b, path, table_path;
  auto* parse = app.add_subcommand("parse", "Validate a code and print its normal form");
  parse->add_option("code", code_a)->required();
  auto* genus = app.add_subcommand("genus", "Supporting genus of the Carter surface");
  genus->add_option("code", code_a)->required();
  auto* inv = app.add_subcommand("invariants", "Fingerprint invariants");
  inv->add_option("code", code_a)->required();
  auto* canon = app.add_subcommand("canon", "Least (genus, crossings) spelling found by search");
  canon->add_option("code", code_a)->required();
  auto* compare = app.add_subcommand("compare", "Decide equivalence; exit 0 equivalent, 1 distinct, 2 unknown");
  compare->add_option("a", code_a)->required();
  compare->add_option("b", code_b)->required();
  auto* complement = app.add_subcommand("complement", "Export the complement cell complex as JSON");
  complement->add_option("code", code_a)->required();
  complement->add_option("-o,--output", path, "Output file (default stdout)");
  auto* table = app.add_subcommand("table", "Pairwise verdicts for one code per line");
  table->add_option("file", table_path, "Input file, - for stdin")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "vlink: " << e.what() << '\n';
    return Exit::Usage;
  }
  if (*mc) o.max_crossings = max_crossings;
  if (*me) o.max_expansions = max_expansions;

  try {
    if (*parse) return cmd_parse(o, code_a, out);
    if (*genus) return cmd_genus(o, code_a, out);
    if (*inv) return cmd_invariants(o, code_a, out);
    if (*canon) return cmd_canon(o, code_a, out);
    if (*compare) return cmd_compare(o, code_a, code_b, out);
    if (*complement) return cmd_complement(o, code_a, path, out);
    if (*table) return cmd_table(o, table_path, in, out);
  } catch (const DataError& e) {
    err << "vlink: " << e.message << '\n';
    return Exit::BadData;
  } catch (const CLI::ValidationError& e) {
    err << "vlink: " << e.what() << '\n';
    return Exit::Usage;
  } catch (const std::ios_base::failure& e) {
    err << "vlink: " << e.what() << '\n';
    return Exit::IoError;
  }
  return Exit::Usage;
}

}  // namespace vlink::cli
