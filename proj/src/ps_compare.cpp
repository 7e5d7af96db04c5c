#include "hilbcell/ps_compare.hpp"

#include <algorithm>
#include <functional>

#include "hilbcell/cell_topology.hpp"

namespace hilbcell {

std::string MonomialClass::str() const {
    switch (kind) {
        case Kind::type1:
            return "type1(m=" + std::to_string(m) + ", s=" + std::to_string(s) +
                   ", b=" + std::to_string(b) + ")";
        case Kind::type2:
            return "type2(m=" + std::to_string(m) + ", r=" + std::to_string(r) + ")";
        case Kind::type3: return "type3(m=" + std::to_string(m) + ")";
        case Kind::not_monomial: return "not_monomial";
    }
    return "not_monomial";
}

namespace {

bool matches(const NumericalSemigroup& gamma, Int upto,
             const std::function<bool(Int)>& shape_contains) {
    for (Int n = 0; n <= upto; ++n)
        if (gamma.contains(n) != shape_contains(n)) return false;
    return true;
}

} // namespace

MonomialClass classify_monomial(const NumericalSemigroup& gamma) {
    const Int c = gamma.conductor();
    const Int m_cap = c + 2;
    for (Int m = 2; m <= m_cap; ++m) {
        for (Int s = 1; s * m <= c + m; ++s)
            for (Int b = 1; b < m; ++b) {
                const Int tail = s * m + b;
                const Int upto = std::max(c, tail) + 1;
                auto shape = [m, s, tail](Int n) {
                    if (n >= tail) return true;
                    return n >= 0 && n % m == 0 && n / m <= s;
                };
                if (matches(gamma, upto, shape))
                    return {MonomialClass::Kind::type1, m, s, b, 0};
            }
    }
    for (Int m = 2; m <= m_cap; ++m)
        for (Int r = 2; r <= m - 1; ++r) {
            const Int upto = std::max(c, m + r + 1) + 1;
            auto shape = [m, r](Int n) {
                if (n == 0) return true;
                if (n >= m && n <= m + r - 1) return true;
                return n >= m + r + 1;
            };
            if (matches(gamma, upto, shape)) return {MonomialClass::Kind::type2, m, 0, 0, r};
        }
    for (Int m = 3; m <= m_cap; ++m) {
        const Int upto = std::max(c, 2 * m + 2) + 1;
        auto shape = [m](Int n) {
            if (n == 0 || n == m) return true;
            if (n >= m + 2 && n <= 2 * m) return true;
            return n >= 2 * m + 2;
        };
        if (matches(gamma, upto, shape)) return {MonomialClass::Kind::type3, m, 0, 0, 0};
    }
    return {};
}

PsDimensionReport ps_dimension(const NumericalSemigroup& gamma, const EmbeddedSemimodule& delta,
                               Int r) {
    PsDimensionReport rep;
    rep.delta_normal = delta_normalize(gamma, delta, r);
    const Int two_delta = 2 * gamma.delta();
    for (Int g : minimal_generators(rep.delta_normal))
        if (g < two_delta) rep.s_prime.push_back(g);
    for (Int g : rep.s_prime) {
        std::vector<Int> j;
        for (Int n = g + 1; n <= two_delta - 1; ++n)
            if (!rep.delta_normal.contains(n)) j.push_back(n);
        rep.ps_dim += static_cast<Int>(j.size());
        rep.j_sets.emplace_back(g, std::move(j));
    }
    rep.eq2_dim = cell_dimension(gamma, delta);
    rep.agree = rep.ps_dim == rep.eq2_dim;
    return rep;
}

CounterexampleReport counterexample_report() {
    CounterexampleReport rep;
    rep.delta_generators = {4, 6, 7};
    rep.r = 2;
    const auto gamma = NumericalSemigroup::from_generators({3, 4});
    const auto delta = semimodule_from_generators(gamma, rep.delta_generators);

    {
        ChainLink link{"codimension", false, ""};
        const Int r = delta.codim(gamma);
        link.pass = r == 2;
        link.detail = "#(Gamma \\ Delta) = " + std::to_string(r);
        rep.links.push_back(link);
    }
    {
        ChainLink link{"delta_normalization", false, ""};
        const auto dn = delta_normalize(gamma, delta, 2);
        const auto expected = semimodule_from_generators(gamma, {2, 4, 5});
        link.pass = dn == expected;
        link.detail = "-2 + Delta has least element " + std::to_string(dn.shift) +
                      " and equals <2,4,5>_Gamma: " + (link.pass ? "yes" : "no");
        rep.links.push_back(link);
    }
    {
        ChainLink link{"dimension_comparison", false, ""};
        rep.ps = ps_dimension(gamma, delta, 2);
        link.pass = rep.ps.eq2_dim == 0 && rep.ps.ps_dim == 1 && !rep.ps.agree;
        link.detail = "window dimension " + std::to_string(rep.ps.eq2_dim) +
                      ", generator-count dimension " + std::to_string(rep.ps.ps_dim);
        rep.links.push_back(link);
    }
    {
        ChainLink link{"unique_ideal", false, ""};
        const auto tmpl = generator_template(gamma, delta, RationalSeries::monomial(4));
        const auto solved = solve_dependent_coefficients(tmpl);
        bool monomial = solved.status == SolveResult::Status::resolved;
        std::vector<Int> orders;
        if (monomial)
            for (const auto& g : solved.generators) {
                monomial = monomial && g.terms().size() == 1 && g.leading()->second == 1;
                orders.push_back(g.leading()->first);
                rep.solved_ideal.push_back(format_series(g));
            }
        bool same_ideal = monomial && semimodule_from_generators(gamma, orders) == delta;
        link.pass = tmpl.free_slot_count() == 0 && same_ideal;
        link.detail = "free slots: " + std::to_string(tmpl.free_slot_count()) +
                      ", solved generators are monomials spanning Delta: " +
                      (same_ideal ? "yes" : "no");
        rep.solved_ideal_orders = std::move(orders);
        rep.links.push_back(link);
    }
    {
        ChainLink link{"standard_basis", false, ""};
        auto prob = StdBasisProblem::create(
            {RationalSeries::monomial(3), RationalSeries::monomial(4)},
            {RationalSeries::monomial(4), RationalSeries::monomial(6),
             RationalSeries::monomial(7)});
        link.pass = is_standard_basis(prob);
        link.detail = std::string("(t^3, t^4 | t^4, t^6, t^7): ") +
                      (link.pass ? "PASS" : "FAIL");
        rep.links.push_back(link);
    }

    rep.all_pass = true;
    for (const auto& l : rep.links) rep.all_pass = rep.all_pass && l.pass;
    return rep;
}

} // namespace hilbcell
