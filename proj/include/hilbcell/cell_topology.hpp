#pragma once

#include <string>
#include <vector>

#include "hilbcell/semimodule.hpp"

namespace hilbcell {

/// Dimension of the affine cell attached to Delta:
///   sum over i of #[ ((-d + Gamma) ∩ [a_i, a_i + q)) \ Lambda ],
/// d = min Delta, (a_i) the p-basis of the 0-normalization Lambda.
/// `lower_index` selects the first summand; the default 0 reproduces the
/// reference tables, 1 is a debug variant that provably does not.
Int cell_dimension(const NumericalSemigroup& gamma, const EmbeddedSemimodule& delta,
                   int lower_index = 0);

/// Shift-independent dimension, valid once min Delta >= conductor:
///   sum over i of #([a_i, a_i + q] \ Lambda).
Int cell_dimension_stable(const NormalizedSemimodule& lambda);

struct CellRecord {
    EmbeddedSemimodule semimodule;
    Int dim = 0;
    Int codim = 0;
};

struct TopologyReport {
    Int r = 0;
    std::vector<CellRecord> cells;
    Int euler = 0;    // = number of cells
    Int dim_hilb = 0; // = maximal cell dimension
    std::vector<Int> betti_hom; // h_{2d} = #cells of dimension d
    std::vector<Int> betti_coh; // h^{2d} = #cells of codimension d
    /// "1 + T^2 + 2*T^4" style rendering of sum h_{2d} T^{2d}.
    std::string poincare() const;
};

TopologyReport topology_report(const NumericalSemigroup& gamma, Int r, int lower_index = 0);

struct StabilizationReport {
    bool stable = false;
    Int conductor = 0;
    /// (r, sorted cell-dimension multiset) for each r in [conductor, r_max].
    std::vector<std::pair<Int, std::vector<Int>>> dim_multisets;
};

/// True when the cell-dimension multiset is the same for every
/// r in [conductor, r_max].
StabilizationReport stabilization_check(const NumericalSemigroup& gamma, Int r_max);

} // namespace hilbcell
