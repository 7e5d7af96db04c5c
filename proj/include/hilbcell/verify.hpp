#pragma once

#include <iosfwd>
#include <set>
#include <vector>

#include "hilbcell/series.hpp"
#include "hilbcell/stdbasis.hpp"

namespace hilbcell {

struct AcceptanceOptions {
    /// First summand index of the window dimension formula; 0 is the
    /// production value, 1 the debug variant that breaks the fixtures.
    int lower_index = 0;
};

/// Runs the full fixture suite, one PASS/FAIL line per criterion.
/// Returns true when everything passed.
bool run_acceptance(std::ostream& os, const AcceptanceOptions& opts = {});

/// Independent valuation oracle: Gamma(M) ∩ [0, bound] for the module
/// spanned by H over the ring generated by G, computed by row-reducing the
/// truncated products (ring-generator products times module generators).
/// Shares nothing with the S-process criterion path.
std::set<Int> module_valuations_oracle(const std::vector<RationalSeries>& ring_gens,
                                       const std::vector<RationalSeries>& module_gens, Int bound);

} // namespace hilbcell
