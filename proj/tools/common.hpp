#pragma once

#include <string>
#include <vector>

#include "mpsa/mixture.hpp"

namespace mpsa::cli {

Strategy parse_strategy(const std::string& name);
std::string strategy_name(Strategy strategy);

// Accepts a number or "bic" (ln(n)/2 at fit time).
double parse_alpha(const std::string& text);

// Fixed-type specification: "full", "spherical" (alias "p"), or explicit
// compositions like "1,1;2;2" (components split by ';', parts by ','). A
// single composition replicates across all C components.
std::vector<Composition> parse_types(const std::string& text, int p, int c_count);

// "1+1|2|2" in the trace CSV.
std::string format_types(const std::vector<Composition>& types);

std::string trace_to_csv(const FitTrace& trace);

}  // namespace mpsa::cli
