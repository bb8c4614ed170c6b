#pragma once

#include <string>

#include <json.hpp>

#include "oscilab/counterexample.hpp"
#include "oscilab/ode.hpp"
#include "oscilab/polynomial.hpp"

namespace oscilab {

using json = nlohmann::ordered_json;

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double x);
double parse_double(const std::string& s);

/// Polynomials serialize as a JSON array of coefficient strings, ascending
/// powers. All reals in the formats below use the same round-trip strings.
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

// {"dim": n, "domain": [lo, hi], "entries": [[poly, ...], ...]}
json system_to_json(const LinearSystem& sys);
LinearSystem system_from_json(const json& j);

// {"nodes": [...], "margin": ..., "lambda": ..., "certificate": {"lower","upper"},
//  "a": [...], optional "disk": {"radius","bound"}}
json spec_to_json(const CounterexampleSpec& spec);
CounterexampleSpec spec_from_json(const json& j);

// {"component", "interval", "count", "locations", "flags", "suspects"}
json report_to_json(const ZeroCountReport& report);

/// CSV with header t,x1,...,xn sampled at n_samples+1 uniform points.
std::string solution_csv(const DenseSolution& sol, int n_samples);

}  // namespace oscilab
