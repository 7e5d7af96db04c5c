#include "hilbcell/cell_topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbcell {

Int cell_dimension(const NumericalSemigroup& gamma, const EmbeddedSemimodule& delta,
                   int lower_index) {
    if (lower_index != 0 && lower_index != 1)
        throw std::invalid_argument("cell_dimension: lower_index must be 0 or 1");
    const auto& lambda = delta.lambda;
    const Int q = lambda.q(), d = delta.shift;
    Int dim = 0;
    const auto& basis = lambda.p_basis();
    for (std::size_t i = static_cast<std::size_t>(lower_index); i < basis.size(); ++i) {
        const Int a = basis[i];
        for (Int x = a; x < a + q; ++x)
            if (gamma.contains(x + d) && !lambda.contains(x)) ++dim;
    }
    return dim;
}

Int cell_dimension_stable(const NormalizedSemimodule& lambda) {
    const Int q = lambda.q();
    Int dim = 0;
    for (Int a : lambda.p_basis())
        for (Int x = a; x <= a + q; ++x)
            if (!lambda.contains(x)) ++dim;
    return dim;
}

std::string TopologyReport::poincare() const {
    std::string out;
    for (std::size_t d = 0; d < betti_hom.size(); ++d) {
        const Int h = betti_hom[d];
        if (h == 0) continue;
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += std::to_string(h);
            continue;
        }
        if (h != 1) out += std::to_string(h) + "*";
        out += "T^" + std::to_string(2 * d);
    }
    return out.empty() ? "0" : out;
}

TopologyReport topology_report(const NumericalSemigroup& gamma, Int r, int lower_index) {
    TopologyReport rep;
    rep.r = r;
    auto mods = enumerate_mod_r(gamma, r);
    rep.cells.reserve(mods.size());
    Int max_dim = 0;
    for (auto& m : mods) {
        CellRecord cell;
        cell.dim = cell_dimension(gamma, m, lower_index);
        max_dim = std::max(max_dim, cell.dim);
        cell.semimodule = std::move(m);
        rep.cells.push_back(std::move(cell));
    }
    rep.euler = static_cast<Int>(rep.cells.size());
    rep.dim_hilb = max_dim;
    rep.betti_hom.assign(static_cast<std::size_t>(max_dim + 1), 0);
    rep.betti_coh.assign(static_cast<std::size_t>(max_dim + 1), 0);
    for (auto& cell : rep.cells) {
        cell.codim = rep.dim_hilb - cell.dim;
        ++rep.betti_hom[static_cast<std::size_t>(cell.dim)];
        ++rep.betti_coh[static_cast<std::size_t>(cell.codim)];
    }
    return rep;
}

StabilizationReport stabilization_check(const NumericalSemigroup& gamma, Int r_max) {
    const Int c = gamma.conductor();
    if (r_max < c)
        throw std::invalid_argument("stabilization_check: r_max must be >= conductor");
    StabilizationReport rep;
    rep.conductor = c;
    for (Int r = c; r <= r_max; ++r) {
        std::vector<Int> dims;
        for (const auto& m : enumerate_mod_r(gamma, r))
            dims.push_back(cell_dimension(gamma, m));
        std::sort(dims.begin(), dims.end());
        rep.dim_multisets.emplace_back(r, std::move(dims));
    }
    rep.stable = true;
    for (const auto& [r, dims] : rep.dim_multisets)
        if (dims != rep.dim_multisets.front().second) rep.stable = false;
    return rep;
}

} // namespace hilbcell
