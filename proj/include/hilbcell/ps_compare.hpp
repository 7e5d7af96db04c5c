#pragma once

#include <string>
#include <vector>

#include "hilbcell/semimodule.hpp"
#include "hilbcell/stdbasis.hpp"

namespace hilbcell {

/// Classification of semigroups whose singularities are all monomial curves.
/// The three shapes:
///   type1(m,s,b): {0, m, ..., s*m} ∪ [s*m+b, inf), 1 <= b < m, s >= 1
///   type2(m,r):   {0} ∪ [m, m+r-1] ∪ [m+r+1, inf), 2 <= r <= m-1
///   type3(m):     {0, m} ∪ [m+2, 2m] ∪ [2m+2, inf), m >= 3
struct MonomialClass {
    enum class Kind { type1, type2, type3, not_monomial } kind = Kind::not_monomial;
    Int m = 0, s = 0, b = 0, r = 0;
    std::string str() const;
};

/// Matches the gap structure against the three shapes; parameters are
/// searched up to m <= conductor + 2 (beyond that no shape can reproduce the
/// conductor).  First match in the order type1, type2, type3 wins.
MonomialClass classify_monomial(const NumericalSemigroup& gamma);

/// Comparison of the window-sum cell dimension against the dimension count
/// read off the delta-normalization: S' are the minimal generators of
/// Delta^(delta) below 2*delta, J_gamma = [gamma+1, 2*delta-1] \ Delta^(delta),
/// and the compared value is sum #J_gamma.  No agreement is asserted; the
/// report only measures it.
struct PsDimensionReport {
    EmbeddedSemimodule delta_normal;
    std::vector<Int> s_prime;
    std::vector<std::pair<Int, std::vector<Int>>> j_sets; // gamma -> J_gamma
    Int ps_dim = 0;
    Int eq2_dim = 0;
    bool agree = false;
};

PsDimensionReport ps_dimension(const NumericalSemigroup& gamma, const EmbeddedSemimodule& delta,
                               Int r);

/// One machine-checked step of the fixed comparison chain.
struct ChainLink {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The five-link chain over Gamma = <3,4>, Delta = <4,6,7>_Gamma:
/// codimension 2, delta-normalization <2,4,5>_Gamma, window dimension 0
/// against count 1, the unique monomial ideal, and the standard-basis
/// verdict for (t^3, t^4 | t^4, t^6, t^7).
struct CounterexampleReport {
    std::vector<ChainLink> links;
    bool all_pass = false;
    PsDimensionReport ps;
    std::vector<Int> delta_generators;      // {4, 6, 7}
    std::vector<Int> solved_ideal_orders;   // orders of the solved generators
    std::vector<std::string> solved_ideal;  // formatted generators
    Int r = 0;
};

CounterexampleReport counterexample_report();

} // namespace hilbcell
