#pragma once

#include "json.hpp"
#include "vlink/complement.hpp"
#include "vlink/decider.hpp"
#include "vlink/decompose.hpp"
#include "vlink/invariants.hpp"
#include "vlink/moves.hpp"
#include "vlink/verdict.hpp"

namespace vlink {

using Json = nlohmann::ordered_json;

// Moves: {"kind", "site":[c,o], "params":{...}}. Extra sites of two- and
// three-site moves go to params.sites; only parameters that the kind reads
// are written.
Json to_json(const MoveSpec& m);
MoveSpec move_from_json(const Json& j);

// {"start": code-text, "steps": [...]}
Json to_json(const MoveTrace& t);
MoveTrace trace_from_json(const Json& j);

// {"components", "f_poly": {"exp": coeff}, "odd_writhe", "linking", "colorings": {"3": n}}
Json to_json(const Fingerprint& f);

Json to_json(const Budget& b);
Json to_json(const SearchStats& s);

// {"verdict", "certificate", "budget", "explored"}; the certificate is
// {"from_a", "from_b", "meeting"} or {"invariant", "components", "value_a",
// "value_b"}, and null for unknown verdicts (which carry "note").
Json to_json(const Verdict& v);

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace vlink
