#pragma once

#include <string>
#include <string_view>

#include "sdg/synthesis.hpp"

namespace sdg {

// {"lambda":…,"beta":…,"layers":[[names…],…],"xi":[…],"representatives":{"a,b":"a",…}}
// plus "index" and "interval_sizes". Vertices are written by name.
std::string format_nilpotency_certificate(const SignedDigraph& g, const NilpotencyCertificate& c);

// Reads back what format_nilpotency_certificate wrote, resolving names against
// g. `stripped` is rebuilt from the representatives. Throws ParseError.
NilpotencyCertificate parse_nilpotency_certificate(const SignedDigraph& g, std::string_view text);

// Route, I, the Lemma steps taken and the four convergence verdicts.
std::string format_convergence_certificate(const SignedDigraph& g, const ConvergingSystem& c);

}  // namespace sdg
