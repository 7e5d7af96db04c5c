#include "hilbcell/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "hilbcell/cell_topology.hpp"
#include "hilbcell/ps_compare.hpp"
#include "hilbcell/semimodule.hpp"

namespace hilbcell {

namespace {

struct Checker {
    std::ostream& os;
    bool all_ok = true;

    void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
        os << (ok ? "[PASS] " : "[FAIL] ") << (number < 10 ? "0" : "") << number << " " << name
           << "\n";
        if (!detail.empty()) os << "       " << detail << "\n";
        all_ok = all_ok && ok;
    }
};

std::vector<std::pair<Int, Int>> acceptance_grid() {
    return {{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5}, {4, 7}, {5, 6}};
}

std::string row_str(const std::vector<Int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

struct TableFixture {
    Int p, q;
    std::vector<Int> euler;
    std::vector<std::vector<Int>> hom;
    std::vector<std::vector<Int>> coh;
    std::string note;
};

// Reference rows for <3,4>, degrees 0..6.
TableFixture e6_fixture() {
    TableFixture f;
    f.p = 3;
    f.q = 4;
    f.euler = {1, 1, 2, 3, 4, 4, 5};
    f.hom = {{1}, {1}, {1, 1}, {1, 1, 1}, {1, 1, 2}, {1, 1, 2}, {1, 1, 2, 1}};
    f.coh = {{1}, {1}, {1, 1}, {1, 1, 1}, {2, 1, 1}, {2, 1, 1}, {1, 2, 1, 1}};
    return f;
}

// Reference rows for <3,5>, degrees 0..8.  The published r=6 Betti rows
// (1,2,1,2)/(2,1,2,1) contradict the stabilized dimensions pinned by the
// r=8 row (the alpha=(0,0,2) and (0,0,3) classes both occur at r=6 with
// least element >= conductor and stable dimension 2), so the fixture
// carries the consistent rows; the runner prints the correction.
TableFixture e8_fixture() {
    TableFixture f;
    f.p = 3;
    f.q = 5;
    f.euler = {1, 1, 2, 3, 4, 5, 6, 6, 7};
    f.hom = {{1},          {1},          {1, 1},       {1, 1, 1},      {1, 1, 2},
             {1, 1, 2, 1}, {1, 1, 2, 2}, {1, 1, 2, 2}, {1, 1, 2, 2, 1}};
    f.coh = {{1},          {1},          {1, 1},       {1, 1, 1},      {2, 1, 1},
             {1, 2, 1, 1}, {2, 2, 1, 1}, {2, 2, 1, 1}, {1, 2, 2, 1, 1}};
    f.note = "r=6 rows corrected to (1,1,2,2)/(2,2,1,1); the published "
             "(1,2,1,2)/(2,1,2,1) is inconsistent with the r=8 row under "
             "stabilization";
    return f;
}

bool check_table(Checker& chk, int number, const std::string& name, const TableFixture& fix,
                 int lower_index, bool euler_only) {
    const auto gamma = NumericalSemigroup::from_generators({fix.p, fix.q});
    std::ostringstream detail;
    bool ok = true;
    for (Int r = 0; r < static_cast<Int>(fix.euler.size()); ++r) {
        const auto rep = topology_report(gamma, r, lower_index);
        if (rep.euler != fix.euler[static_cast<std::size_t>(r)]) {
            ok = false;
            detail << "r=" << r << ": euler " << rep.euler << " != "
                   << fix.euler[static_cast<std::size_t>(r)] << "; ";
        }
        if (euler_only) continue;
        if (rep.betti_hom != fix.hom[static_cast<std::size_t>(r)] ||
            rep.betti_coh != fix.coh[static_cast<std::size_t>(r)]) {
            ok = false;
            detail << "r=" << r << ": betti " << row_str(rep.betti_hom) << "/"
                   << row_str(rep.betti_coh) << " != " << row_str(fix.hom[static_cast<std::size_t>(r)])
                   << "/" << row_str(fix.coh[static_cast<std::size_t>(r)]) << "; ";
        }
    }
    std::string note = fix.note;
    if (!detail.str().empty()) note = detail.str() + (note.empty() ? "" : " | " + note);
    chk.report(number, name, ok, note);
    return ok;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    int n = num(rng);
    if (n == 0) n = 1;
    return Rational(n, den(rng));
}

struct RandomInstance {
    StdBasisProblem prob;
    RationalSeries f;
};

RandomInstance random_instance(std::mt19937& rng, bool monomial_h) {
    static const std::vector<std::pair<Int, Int>> pool = {{2, 3}, {2, 5}, {3, 4}, {3, 5}};
    const auto [p, q] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const auto gamma = NumericalSemigroup::from_generators({p, q});
    const Int c = gamma.conductor();

    RationalSeries phi = RationalSeries::monomial(q);
    if (std::uniform_int_distribution<int>(0, 1)(rng))
        phi.add_term(q + std::uniform_int_distribution<Int>(1, p)(rng), random_rational(rng));

    std::vector<Int> members;
    for (Int n = 0; n < c + q; ++n)
        if (gamma.contains(n)) members.push_back(n);
    const int h_count = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<RationalSeries> hs;
    for (int i = 0; i < h_count; ++i) {
        const Int nu =
            members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
        RationalSeries h = RationalSeries::monomial(nu);
        if (!monomial_h && std::uniform_int_distribution<int>(0, 1)(rng))
            h.add_term(nu + std::uniform_int_distribution<Int>(1, q)(rng), random_rational(rng));
        hs.push_back(std::move(h));
    }

    auto prob = StdBasisProblem::create({RationalSeries::monomial(p), std::move(phi)},
                                        std::move(hs));
    RationalSeries f;
    const int terms = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int i = 0; i < terms; ++i)
        f.add_term(std::uniform_int_distribution<Int>(0, c + 2 * q)(rng), random_rational(rng));
    if (f.is_zero()) f = RationalSeries::monomial(c);
    return {std::move(prob), std::move(f)};
}

// Closed-window re-evaluation of the cell dimension, used for the
// endpoint-insensitivity check.
Int closed_window_dimension(const NumericalSemigroup& gamma, const EmbeddedSemimodule& delta) {
    const auto& lambda = delta.lambda;
    Int dim = 0;
    for (Int a : lambda.p_basis())
        for (Int x = a; x <= a + lambda.q(); ++x)
            if (gamma.contains(x + delta.shift) && !lambda.contains(x)) ++dim;
    return dim;
}

} // namespace

std::set<Int> module_valuations_oracle(const std::vector<RationalSeries>& ring_gens,
                                       const std::vector<RationalSeries>& module_gens,
                                       Int bound) {
    // All ring-generator products of order <= bound, each multiset once.
    std::vector<RationalSeries> products;
    std::function<void(std::size_t, const RationalSeries&)> build =
        [&](std::size_t from, const RationalSeries& acc) {
            products.push_back(acc);
            for (std::size_t i = from; i < ring_gens.size(); ++i) {
                const Int next = *acc.order() + *ring_gens[i].order();
                if (next <= bound) build(i, acc * ring_gens[i]);
            }
        };
    build(0, RationalSeries::monomial(0));

    // Row reduction keyed by leading exponent.
    std::map<Int, RationalSeries> pivots;
    for (const auto& h : module_gens)
        for (const auto& prod : products) {
            RationalSeries row = (prod * h).truncated(bound + 1);
            while (auto lt = row.leading()) {
                auto it = pivots.find(lt->first);
                if (it == pivots.end()) {
                    pivots.emplace(lt->first, row);
                    break;
                }
                row -= (lt->second / it->second.coeff(lt->first)) * it->second;
            }
        }

    std::set<Int> out;
    for (const auto& [e, row] : pivots) out.insert(e);
    return out;
}

bool run_acceptance(std::ostream& os, const AcceptanceOptions& opts) {
    Checker chk{os};
    const auto grid = acceptance_grid();

    // 1, 2: <3,4> Euler and Betti tables.
    check_table(chk, 1, "e6-euler-table", e6_fixture(), opts.lower_index, true);
    check_table(chk, 2, "e6-betti-tables", e6_fixture(), opts.lower_index, false);

    // 3: <3,5> Euler and both Betti tables.
    check_table(chk, 3, "e8-tables", e8_fixture(), opts.lower_index, false);

    // 4: closed form for <2, 2l+1>.
    {
        bool ok = true;
        std::ostringstream detail;
        for (Int l = 1; l <= 6 && ok; ++l) {
            const auto gamma = NumericalSemigroup::from_generators({2, 2 * l + 1});
            for (Int r = 0; r <= 2 * l + 4; ++r) {
                const auto rep = topology_report(gamma, r, opts.lower_index);
                const Int expected_e = r <= 2 * l - 1 ? r / 2 + 1 : l + 1;
                const Int top = std::min(r / 2, l);
                const std::vector<Int> ones(static_cast<std::size_t>(top + 1), 1);
                if (rep.euler != expected_e || rep.betti_hom != ones || rep.betti_coh != ones) {
                    ok = false;
                    detail << "l=" << l << " r=" << r << ": e=" << rep.euler << " betti "
                           << row_str(rep.betti_hom);
                    break;
                }
            }
        }
        chk.report(4, "a2l-closed-form", ok, detail.str());
    }

    // 5: fast enumeration vs brute-force co-ideal search.
    {
        bool ok = true;
        std::ostringstream detail;
        for (const auto& [p, q] : grid) {
            const auto gamma = NumericalSemigroup::from_generators({p, q});
            for (Int r = 0; r <= gamma.conductor() + 2 && ok; ++r) {
                const Int bound = oracle_bound(gamma, r);
                auto brute = oracle_enumerate_mod_r(gamma, r);
                std::vector<std::vector<Int>> fast;
                for (const auto& m : enumerate_mod_r(gamma, r))
                    fast.push_back(m.elements_below(bound));
                std::sort(fast.begin(), fast.end());
                if (fast != brute) {
                    ok = false;
                    detail << "<" << p << "," << q << "> r=" << r << ": " << fast.size()
                           << " vs " << brute.size();
                }
            }
        }
        chk.report(5, "oracle-equivalence", ok, detail.str());
    }

    // 6: dimension multisets constant for conductor <= r <= conductor+3.
    {
        bool ok = true;
        std::ostringstream detail;
        for (const auto& [p, q] : grid) {
            const auto gamma = NumericalSemigroup::from_generators({p, q});
            if (!stabilization_check(gamma, gamma.conductor() + 3).stable) {
                ok = false;
                detail << "<" << p << "," << q << "> ";
            }
        }
        chk.report(6, "stabilization", ok, detail.str());
    }

    // 7: stabilized counts are binom(p+q,p)/(p+q).
    {
        bool ok = true;
        std::ostringstream detail;
        for (const auto& [p, q] : grid) {
            const auto gamma = NumericalSemigroup::from_generators({p, q});
            const Int c = gamma.conductor();
            const Int catalan = alpha_vector_count(p, q);
            for (Int r = c; r <= c + 3; ++r)
                if (static_cast<Int>(enumerate_mod_r(gamma, r).size()) != catalan) {
                    ok = false;
                    detail << "<" << p << "," << q << "> r=" << r << " ";
                }
            if (static_cast<Int>(oracle_enumerate_mod_r(gamma, c).size()) != catalan) {
                ok = false;
                detail << "<" << p << "," << q << "> oracle ";
            }
        }
        chk.report(7, "catalan-totals", ok, detail.str());
    }

    // 8: window formula degenerates to the stable one at r >= c, and closed
    // windows never change the result.
    {
        bool ok = true;
        std::ostringstream detail;
        for (const auto& [p, q] : grid) {
            const auto gamma = NumericalSemigroup::from_generators({p, q});
            const Int c = gamma.conductor();
            for (Int r = 0; r <= c + 2 && ok; ++r)
                for (const auto& m : enumerate_mod_r(gamma, r)) {
                    const Int dim = cell_dimension(gamma, m);
                    if (r >= c && dim != cell_dimension_stable(m.lambda)) {
                        ok = false;
                        detail << "<" << p << "," << q << "> r=" << r << " stable mismatch";
                        break;
                    }
                    if (dim != closed_window_dimension(gamma, m)) {
                        ok = false;
                        detail << "<" << p << "," << q << "> r=" << r << " endpoint mismatch";
                        break;
                    }
                }
        }
        chk.report(8, "formula-coherence", ok, detail.str());
    }

    // 9: the five-link comparison chain.
    {
        const auto rep = counterexample_report();
        std::ostringstream detail;
        for (const auto& l : rep.links)
            if (!l.pass) detail << l.name << ": " << l.detail << "; ";
        chk.report(9, "dimension-counterexample-chain", rep.all_pass, detail.str());
    }

    // 10: randomized and exhaustive division-algorithm properties.
    {
        bool ok = true;
        std::ostringstream detail;
        std::mt19937 rng(20240801u);

        // (a) remainder support avoids Gamma(M) on 200 random instances.
        for (int t = 0; t < 200 && ok; ++t) {
            auto inst = random_instance(rng, false);
            const auto res = reduce(inst.f, inst.prob);
            for (const auto& [e, cval] : res.remainder.terms()) {
                (void)cval;
                if (inst.prob.module_contains(e)) {
                    ok = false;
                    detail << "(a) remainder exponent " << e << " in Gamma(M); ";
                    break;
                }
            }
        }

        // (b) remainder invariant under 20 relistings per instance; the
        // uniqueness statement needs a standard pair, so draw until one
        // comes up.
        for (int t = 0; t < 20 && ok; ++t) {
            auto inst = random_instance(rng, false);
            while (!is_standard_basis(inst.prob)) inst = random_instance(rng, false);
            if (!reduction_invariance_check(inst.f, inst.prob, 20, rng())) {
                ok = false;
                detail << "(b) remainder depends on the listing; ";
            }
        }

        // (c) criterion == row-reduction oracle on the exhaustive monomial
        // family: all H in Gamma ∩ [0, c+q) of size 1..3.
        for (const auto& [p, q] : std::vector<std::pair<Int, Int>>{{2, 3}, {2, 5}, {3, 4}}) {
            const auto gamma = NumericalSemigroup::from_generators({p, q});
            const Int c = gamma.conductor();
            std::vector<Int> members;
            for (Int n = 0; n < c + q; ++n)
                if (gamma.contains(n)) members.push_back(n);
            std::vector<std::vector<Int>> subsets;
            const std::size_t m = members.size();
            for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
                if (__builtin_popcountll(mask) > 3) continue;
                std::vector<Int> h;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask & (std::size_t{1} << i)) h.push_back(members[i]);
                subsets.push_back(std::move(h));
            }
            for (const auto& orders : subsets) {
                std::vector<RationalSeries> hs;
                for (Int nu : orders) hs.push_back(RationalSeries::monomial(nu));
                std::vector<RationalSeries> gs = {RationalSeries::monomial(p),
                                                  RationalSeries::monomial(q)};
                auto prob = StdBasisProblem::create(gs, hs);
                const Int bound = prob.module_conductor() + q;
                const auto pivots = module_valuations_oracle(gs, hs, bound);
                bool oracle_standard = true;
                for (Int n = 0; n <= bound; ++n)
                    if (prob.module_contains(n) != (pivots.count(n) > 0)) oracle_standard = false;
                if (is_standard_basis(prob) != oracle_standard) {
                    ok = false;
                    detail << "(c) criterion vs oracle mismatch at <" << p << "," << q << ">; ";
                    break;
                }
            }
            if (!ok) break;
        }

        // (d) doubling the truncation never changes remainders below N/2,
        // nor solved coefficients.
        for (int t = 0; t < 30 && ok; ++t) {
            auto inst = random_instance(rng, false);
            const Int n = inst.prob.trunc();
            auto doubled = StdBasisProblem::create(inst.prob.ring_gens(),
                                                   inst.prob.module_gens(), 2 * n);
            const auto r1 = reduce(inst.f, inst.prob).remainder.truncated(n / 2);
            const auto r2 = reduce(inst.f, doubled).remainder.truncated(n / 2);
            if (!r1.same_terms(r2)) {
                ok = false;
                detail << "(d) remainder changed under horizon doubling; ";
            }
        }
        if (ok) {
            const auto gamma = NumericalSemigroup::from_generators({3, 4});
            for (const auto& m : enumerate_mod_r(gamma, 4)) {
                RationalSeries phi = RationalSeries::monomial(4);
                phi.add_term(5, Rational(1, 2));
                const auto tmpl = generator_template(gamma, m, phi);
                std::map<std::string, Rational> values;
                const Int n = m.shift + 2 * gamma.conductor() + 2 * 4 + 8;
                const auto s1 = solve_dependent_coefficients(tmpl, values, n);
                const auto s2 = solve_dependent_coefficients(tmpl, values, 2 * n);
                if (s1.assignments != s2.assignments ||
                    s1.status != SolveResult::Status::resolved) {
                    ok = false;
                    detail << "(d) solve changed under horizon doubling; ";
                    break;
                }
            }
        }
        chk.report(10, "division-properties", ok, detail.str());
    }

    // 11: free template slots count the cell dimension.
    {
        bool ok = true;
        std::ostringstream detail;
        for (const auto& [p, q] : grid) {
            const auto gamma = NumericalSemigroup::from_generators({p, q});
            for (Int r = 0; r <= gamma.conductor() + 2 && ok; ++r)
                for (const auto& m : enumerate_mod_r(gamma, r)) {
                    const auto tmpl = generator_template(gamma, m, RationalSeries::monomial(q));
                    if (tmpl.free_slot_count() != cell_dimension(gamma, m)) {
                        ok = false;
                        detail << "<" << p << "," << q << "> r=" << r << " shift=" << m.shift;
                        break;
                    }
                }
        }
        chk.report(11, "free-slots-equal-dimension", ok, detail.str());
    }

    // 12: conductor identity.
    {
        bool ok = true;
        std::ostringstream detail;
        for (const auto& [p, q] : grid) {
            const auto gamma = NumericalSemigroup::from_generators({p, q});
            if (gamma.conductor() != 2 * gamma.delta() ||
                gamma.conductor() != (p - 1) * (q - 1)) {
                ok = false;
                detail << "<" << p << "," << q << "> ";
            }
        }
        chk.report(12, "conductor-identity", ok, detail.str());
    }

    os << (chk.all_ok ? "ACCEPTANCE: all criteria passed\n"
                      : "ACCEPTANCE: at least one criterion failed\n");
    return chk.all_ok;
}

} // namespace hilbcell
