#pragma once

#include <string>

namespace hhkit {

// One computation request, described as a JSON object:
//   {"command": "monogenic" | "algebra-hh" | "homological" | "happel"
//             | "poset" | "crown" | "verify",
//    "field": "Q" | "F<p>",            // monogenic, crown, verify
//    "poly": "X^3 - X^2",              // monogenic
//    "input": {...},                   // quiver or poset document
//    "action": "cohomology" | "pair" | "hh",   // poset
//    "vertex": "1", "ideal": ["a","b"], "n": 2, "m": 2,
//    "pmax": 4, "qmax": 4, "verify": false, "bracket_table": false}
//
// status 0: success; 2: bad input; 3: a verification assertion failed.
// `json` follows {"dims": {"0": n0, ...}, "presentation"?, "report"?} with
// degrees as string keys; re-parsing and re-dumping it is byte identical.
struct JobResult {
    int status = 0;
    std::string text;
    std::string json;
};

JobResult run_job(const std::string& spec_json);

}  // namespace hhkit
