#include "hilbcell/stdbasis.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace hilbcell {

namespace {

Int order_or_throw(const RationalSeries& f, const char* who) {
    auto o = f.order();
    if (!o) throw std::invalid_argument(std::string(who) + ": generator has no leading term");
    return *o;
}

} // namespace

RingRep::RingRep(std::vector<RationalSeries> gens, Int bound) : gens_(std::move(gens)) {
    orders_.reserve(gens_.size());
    for (const auto& g : gens_) orders_.push_back(order_or_throw(g, "RingRep"));
    rep_.assign(static_cast<std::size_t>(bound + 1), -1);
    rep_[0] = -2;
    for (Int s = 1; s <= bound; ++s)
        for (std::size_t gi = 0; gi < orders_.size(); ++gi) {
            const Int prev = s - orders_[gi];
            if (prev >= 0 && rep_[static_cast<std::size_t>(prev)] != -1) {
                rep_[static_cast<std::size_t>(s)] = static_cast<int>(gi);
                break;
            }
        }
}

const RationalSeries& RingRep::multiplier(Int s) const {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    if (!reachable(s)) throw std::logic_error("RingRep: order " + std::to_string(s) +
                                              " is not reachable");
    RationalSeries value;
    if (s == 0)
        value = RationalSeries::monomial(0);
    else {
        const int gi = rep_[static_cast<std::size_t>(s)];
        value = multiplier(s - orders_[static_cast<std::size_t>(gi)]) *
                gens_[static_cast<std::size_t>(gi)];
    }
    return memo_.emplace(s, std::move(value)).first->second;
}

StdBasisProblem StdBasisProblem::create(std::vector<RationalSeries> ring_gens,
                                        std::vector<RationalSeries> module_gens, Int trunc) {
    if (ring_gens.empty()) throw std::invalid_argument("stdbasis: ring generator list is empty");
    if (module_gens.empty())
        throw std::invalid_argument("stdbasis: module generator list is empty");

    StdBasisProblem prob;
    std::vector<Int> g_orders;
    Int max_g = 0, max_h = 0;
    for (const auto& g : ring_gens) {
        g_orders.push_back(order_or_throw(g, "stdbasis"));
        max_g = std::max(max_g, g_orders.back());
    }
    for (const auto& h : module_gens) {
        prob.h_orders_.push_back(order_or_throw(h, "stdbasis"));
        max_h = std::max(max_h, prob.h_orders_.back());
    }
    prob.gamma_ = NumericalSemigroup::from_generators(g_orders);
    if (trunc <= 0) trunc = max_h + 2 * prob.gamma_.conductor() + 2 * max_g + 8;
    if (max_g >= trunc || max_h >= trunc)
        throw std::invalid_argument("stdbasis: generator order at or above trunc = " +
                                    std::to_string(trunc));
    prob.g_ = std::move(ring_gens);
    prob.h_ = std::move(module_gens);
    prob.trunc_ = trunc;
    prob.rep_ = RingRep(prob.g_, trunc);
    return prob;
}

bool StdBasisProblem::module_contains(Int n) const {
    return module_index_for(n) >= 0;
}

int StdBasisProblem::module_index_for(Int n) const {
    for (std::size_t l = 0; l < h_orders_.size(); ++l)
        if (gamma_.contains(n - h_orders_[l])) return static_cast<int>(l);
    return -1;
}

Int StdBasisProblem::module_conductor() const {
    Int c = *std::max_element(h_orders_.begin(), h_orders_.end()) + gamma_.conductor();
    while (c > 0 && module_contains(c - 1)) --c;
    return c;
}

StdBasisProblem StdBasisProblem::permuted(const std::vector<std::size_t>& g_perm,
                                          const std::vector<std::size_t>& h_perm) const {
    std::vector<RationalSeries> g2, h2;
    for (auto i : g_perm) g2.push_back(g_[i]);
    for (auto i : h_perm) h2.push_back(h_[i]);
    return create(std::move(g2), std::move(h2), trunc_);
}

ReduceResult reduce(const RationalSeries& f, const StdBasisProblem& prob) {
    RationalSeries p = f.truncated(prob.trunc());
    std::vector<RationalSeries> quotients(prob.module_gens().size());
    RationalSeries remainder;
    while (auto lt = p.leading()) {
        const Int s = lt->first;
        const int l = prob.module_index_for(s);
        if (l >= 0) {
            const Int lift = s - prob.module_orders()[static_cast<std::size_t>(l)];
            const RationalSeries& mult = prob.rep().multiplier(lift);
            RationalSeries prod = mult * prob.module_gens()[static_cast<std::size_t>(l)];
            const Rational factor = lt->second / prod.coeff(s);
            quotients[static_cast<std::size_t>(l)] += factor * mult;
            p -= factor * prod;
        } else {
            remainder.add_term(s, lt->second);
            p.erase_term(s);
        }
    }
    const Int exact_below = p.horizon();
    if (exact_below < prob.trunc() - prob.guard())
        throw PrecisionError("reduce: result exact only below t^" + std::to_string(exact_below) +
                                 " (guard band starts at t^" +
                                 std::to_string(prob.trunc() - prob.guard()) +
                                 "); rerun with a larger truncation",
                             2 * prob.trunc());
    ReduceResult out;
    out.remainder = remainder.truncated(exact_below);
    for (auto& q : quotients) out.quotients.push_back(q.truncated(exact_below));
    out.exact_below = exact_below;
    return out;
}

bool reduction_invariance_check(const RationalSeries& f, const StdBasisProblem& prob, int trials,
                                unsigned seed) {
    const RationalSeries base = reduce(f, prob).remainder;
    std::mt19937 rng(seed);
    std::vector<std::size_t> g_perm(prob.ring_gens().size()), h_perm(prob.module_gens().size());
    std::iota(g_perm.begin(), g_perm.end(), 0);
    std::iota(h_perm.begin(), h_perm.end(), 0);
    for (int t = 0; t < trials; ++t) {
        std::shuffle(g_perm.begin(), g_perm.end(), rng);
        std::shuffle(h_perm.begin(), h_perm.end(), rng);
        const auto permuted = prob.permuted(g_perm, h_perm);
        if (!reduce(f, permuted).remainder.same_terms(base)) return false;
    }
    return true;
}

RationalSeries s_process_min(const StdBasisProblem& prob, std::size_t i, std::size_t j) {
    if (i == j || i >= prob.module_gens().size() || j >= prob.module_gens().size())
        throw std::invalid_argument("s_process_min: bad generator pair");
    const Int oi = prob.module_orders()[i], oj = prob.module_orders()[j];
    const auto& gamma = prob.gamma();
    Int s = std::max(oi, oj);
    while (!(gamma.contains(s - oi) && gamma.contains(s - oj))) ++s;

    RationalSeries lift_i = prob.rep().multiplier(s - oi) * prob.module_gens()[i];
    RationalSeries lift_j = prob.rep().multiplier(s - oj) * prob.module_gens()[j];
    const Rational ci = lift_i.coeff(s), cj = lift_j.coeff(s);
    if (ci == 0 || cj == 0)
        throw std::invalid_argument("s_process_min: leading terms fail to cancel");
    RationalSeries out = (Rational(1) / ci) * lift_i - (Rational(1) / cj) * lift_j;
    if (out.coeff(s) != 0)
        throw std::logic_error("s_process_min: cancellation failed at order " + std::to_string(s));
    return out;
}

std::vector<std::vector<RationalSeries>> syzygy_generators(const NumericalSemigroup& gamma,
                                                           const NormalizedSemimodule& lambda) {
    const Int p = lambda.p(), q = lambda.q();
    const auto& alphas = lambda.alphas();
    const auto& basis = lambda.p_basis();
    std::vector<std::vector<RationalSeries>> rows;
    for (Int i = 0; i < p; ++i) {
        std::vector<RationalSeries> row(static_cast<std::size_t>(p));
        const Int next = (i + 1) % p;
        const Int step = (i + 1 < p) ? (alphas[static_cast<std::size_t>(i + 1)] -
                                        alphas[static_cast<std::size_t>(i)]) *
                                           p
                                     : (q - alphas[static_cast<std::size_t>(p - 1)]) * p;
        row[static_cast<std::size_t>(i)] = RationalSeries::monomial(q);
        row[static_cast<std::size_t>(next)] -= RationalSeries::monomial(step);
        // relation check: row applied to (t^{a_0},...,t^{a_{p-1}}) vanishes
        RationalSeries probe;
        for (Int k = 0; k < p; ++k)
            probe += row[static_cast<std::size_t>(k)] *
                     RationalSeries::monomial(basis[static_cast<std::size_t>(k)]);
        if (!probe.is_zero())
            throw std::logic_error("syzygy_generators: row " + std::to_string(i) +
                                   " does not annihilate the basis tuple");
        rows.push_back(std::move(row));
    }
    return rows;
}

StandardBasisCheck standard_basis_check(const StdBasisProblem& prob) {
    StandardBasisCheck out;
    const Int required = prob.module_conductor();
    if (prob.trunc() < required)
        throw PrecisionError("standard_basis_check: truncation " + std::to_string(prob.trunc()) +
                                 " does not reach the Gamma(M) conductor " +
                                 std::to_string(required),
                             required + prob.guard());
    out.is_standard = true;
    out.verified_below = required;
    const auto common_order = [&prob](std::size_t i, std::size_t j) {
        const Int oi = prob.module_orders()[i], oj = prob.module_orders()[j];
        Int s = std::max(oi, oj);
        while (!(prob.gamma().contains(s - oi) && prob.gamma().contains(s - oj))) ++s;
        return s;
    };
    const std::size_t n = prob.module_gens().size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            RationalSeries s = s_process_min(prob, i, j);
            PairResidue pr;
            pr.i = i;
            pr.j = j;
            pr.order = common_order(i, j);
            if (!s.is_zero()) {
                auto red = reduce(s, prob);
                if (red.exact_below < required)
                    throw PrecisionError("standard_basis_check: reduction exact only below t^" +
                                             std::to_string(red.exact_below),
                                         required + prob.guard());
                pr.residue = red.remainder;
                if (!pr.residue.is_zero()) out.is_standard = false;
            }
            out.pairs.push_back(std::move(pr));
        }
    return out;
}

bool is_standard_basis(const StdBasisProblem& prob) {
    return standard_basis_check(prob).is_standard;
}

EmbeddedSemimodule gamma_of_module(const StdBasisProblem& prob) {
    return semimodule_from_generators(prob.gamma(), prob.module_orders());
}

Int IdealTemplate::free_slot_count() const {
    Int n = 0;
    for (const auto& g : generators)
        for (const auto& s : g.slots)
            if (s.kind == SlotKind::free_coeff) ++n;
    return n;
}

SymbolicSeries IdealTemplate::generator_series(std::size_t i) const {
    const auto& g = generators[i];
    SymbolicSeries out = SymbolicSeries::monomial(g.base);
    for (const auto& slot : g.slots) out.add_term(slot.exponent, LinExpr::variable(slot.var));
    return out;
}

IdealTemplate generator_template(const NumericalSemigroup& gamma, const EmbeddedSemimodule& delta,
                                 const RationalSeries& phi) {
    const Int q = gamma.q();
    if (order_or_throw(phi, "generator_template") != q)
        throw std::invalid_argument("generator_template: phi must have order q");

    IdealTemplate tmpl;
    tmpl.delta = delta;
    tmpl.phi = (Rational(1) / phi.leading()->second) * phi; // monic
    const auto& basis = delta.lambda.p_basis();
    const Int max_a = *std::max_element(basis.begin(), basis.end());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        GeneratorTemplate g;
        const Int a = basis[i];
        g.base = delta.shift + a;
        for (Int k = 1; a + k <= max_a; ++k) {
            if (delta.lambda.contains(a + k)) continue;
            TemplateSlot slot;
            slot.offset = k;
            slot.exponent = g.base + k;
            if (!gamma.contains(slot.exponent))
                slot.kind = SlotKind::phi_dependent;
            else
                slot.kind = k < q ? SlotKind::free_coeff : SlotKind::tail;
            slot.var = tmpl.vars.intern("l" + std::to_string(i) + "_" + std::to_string(k));
            g.slots.push_back(slot);
        }
        tmpl.generators.push_back(std::move(g));
    }
    return tmpl;
}

namespace {

SymbolicSeries substitute(const SymbolicSeries& f, int var, const LinExpr& value) {
    SymbolicSeries out = SymbolicSeries(f.horizon());
    for (const auto& [e, c] : f.terms()) out.add_term(e, c.substituted(var, value));
    return out;
}

/// Shared subduction loop: resolve symbols so every series lies in the ring
/// generated by ring_gens, modulo t^trunc.
SolveResult solve_membership(std::vector<SymbolicSeries> gens,
                             const std::vector<RationalSeries>& ring_gens, const VarTable& vars,
                             Int trunc) {
    SolveResult out;
    std::vector<Int> orders;
    for (const auto& g : ring_gens) orders.push_back(order_or_throw(g, "solve"));
    const auto gamma = NumericalSemigroup::from_generators(orders);
    const RingRep rep(ring_gens, trunc);

    std::map<int, LinExpr> solved;
    auto substitute_everywhere = [&](int var, const LinExpr& value) {
        for (auto& g : gens) g = substitute(g, var, value);
        for (auto& [v, expr] : solved) expr = expr.substituted(var, value);
        solved[var] = value;
    };

    for (auto& gen : gens) {
        SymbolicSeries w = gen.truncated(trunc);
        while (auto lt = w.leading()) {
            const Int s = lt->first;
            if (gamma.contains(s)) {
                const RationalSeries& mult = rep.multiplier(s);
                const LinExpr factor = lt->second * LinExpr(Rational(1) / mult.coeff(s));
                w -= factor * to_symbolic(mult);
                continue;
            }
            const LinExpr& c = lt->second;
            if (c.is_constant()) {
                out.status = SolveResult::Status::inconsistent;
                out.witness_exponent = s;
                out.witness_value = c.constant();
                break;
            }
            const int var = c.terms().rbegin()->first; // latest-introduced symbol
            const LinExpr value = c.solved_for(var);
            substitute_everywhere(var, value);
            w = substitute(w, var, value);
        }
        if (out.status == SolveResult::Status::inconsistent) break;
    }

    for (const auto& [v, expr] : solved) {
        if (expr.is_constant())
            out.assignments.emplace(vars.name(v), expr.constant());
        else
            out.unresolved.push_back(vars.name(v));
    }
    if (out.status != SolveResult::Status::inconsistent) {
        for (const auto& g : gens) {
            bool numeric = true;
            for (const auto& [e, c] : g.terms())
                if (!c.is_constant()) {
                    numeric = false;
                    out.status = SolveResult::Status::underdetermined;
                    for (const auto& [v, coeff] : c.terms()) {
                        (void)coeff;
                        out.unresolved.push_back(vars.name(v));
                    }
                }
            if (numeric) out.generators.push_back(to_rational(g));
        }
        std::sort(out.unresolved.begin(), out.unresolved.end());
        out.unresolved.erase(std::unique(out.unresolved.begin(), out.unresolved.end()),
                             out.unresolved.end());
    }
    return out;
}

} // namespace

SolveResult solve_dependent_coefficients(const IdealTemplate& tmpl,
                                         const std::map<std::string, Rational>& values,
                                         Int trunc) {
    // Sanity of the given values: only free/tail slots may be assigned.
    std::map<std::string, SlotKind> kind_of;
    for (const auto& g : tmpl.generators)
        for (const auto& s : g.slots) kind_of.emplace(tmpl.vars.name(s.var), s.kind);
    for (const auto& [name, value] : values) {
        (void)value;
        auto it = kind_of.find(name);
        if (it == kind_of.end())
            throw std::invalid_argument("solve: unknown slot '" + name + "'");
        if (it->second == SlotKind::phi_dependent)
            throw std::invalid_argument("solve: slot '" + name +
                                        "' is determined by phi and cannot be assigned");
    }

    const Int q = tmpl.delta.lambda.q();
    const Int p = tmpl.delta.lambda.p();
    const auto gamma = NumericalSemigroup::from_generators({p, q});
    if (trunc <= 0) trunc = tmpl.delta.shift + 2 * gamma.conductor() + 2 * q + 8;

    std::vector<SymbolicSeries> gens;
    for (std::size_t i = 0; i < tmpl.generators.size(); ++i) {
        SymbolicSeries g = tmpl.generator_series(i);
        for (const auto& slot : tmpl.generators[i].slots) {
            if (slot.kind == SlotKind::phi_dependent) continue;
            auto it = values.find(tmpl.vars.name(slot.var));
            const Rational v = it == values.end() ? Rational(0) : it->second;
            g = substitute(g, slot.var, LinExpr(v));
        }
        gens.push_back(std::move(g));
    }
    std::vector<RationalSeries> ring = {RationalSeries::monomial(p), tmpl.phi};
    return solve_membership(std::move(gens), ring, tmpl.vars, trunc);
}

SolveResult resolve_in_ring(const std::vector<SymbolicSeries>& gens,
                            const std::vector<RationalSeries>& ring_gens, const VarTable& vars,
                            Int trunc) {
    std::vector<Int> orders;
    Int max_order = 0;
    for (const auto& g : ring_gens) {
        orders.push_back(order_or_throw(g, "resolve_in_ring"));
        max_order = std::max(max_order, orders.back());
    }
    Int max_gen = 0;
    for (const auto& g : gens)
        if (auto o = g.order()) max_gen = std::max(max_gen, *o);
    if (trunc <= 0) {
        const auto gamma = NumericalSemigroup::from_generators(orders);
        trunc = max_gen + 2 * gamma.conductor() + 2 * max_order + 8;
    }
    return solve_membership(gens, ring_gens, vars, trunc);
}

} // namespace hilbcell
