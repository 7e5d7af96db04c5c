#pragma once

#include <map>
#include <vector>

#include "hilbcell/semimodule.hpp"
#include "hilbcell/series.hpp"

namespace hilbcell {

/// Representation of semigroup elements as products of ring generators;
/// earlier generators are preferred, so pure powers of the first generator
/// are used whenever possible.
class RingRep {
public:
    RingRep() = default;
    RingRep(std::vector<RationalSeries> gens, Int bound);
    bool reachable(Int s) const {
        return s >= 0 && s < static_cast<Int>(rep_.size()) && rep_[static_cast<std::size_t>(s)] != -1;
    }
    /// Product of ring generators with order s (s reachable).
    const RationalSeries& multiplier(Int s) const;

private:
    std::vector<RationalSeries> gens_;
    std::vector<Int> orders_;
    std::vector<int> rep_; // generator index used at s; -1 unreachable; -2 empty product
    mutable std::map<Int, RationalSeries> memo_;
};

/// A (G, H) pair: ring generators whose orders generate the semigroup, and
/// module generators.  All reductions work modulo t^trunc.
class StdBasisProblem {
public:
    /// trunc <= 0 picks a default large enough for the standard-basis
    /// criterion on these generators.  Throws std::invalid_argument on empty
    /// lists, zero series, non-coprime ring orders, or orders >= trunc.
    static StdBasisProblem create(std::vector<RationalSeries> ring_gens,
                                  std::vector<RationalSeries> module_gens, Int trunc = 0);

    const std::vector<RationalSeries>& ring_gens() const { return g_; }
    const std::vector<RationalSeries>& module_gens() const { return h_; }
    const NumericalSemigroup& gamma() const { return gamma_; }
    const std::vector<Int>& module_orders() const { return h_orders_; }
    Int trunc() const { return trunc_; }
    Int guard() const { return guard_; }

    /// Membership in Gamma(M) = union of (nu(h_l) + Gamma).
    bool module_contains(Int n) const;
    /// Smallest index l with n - nu(h_l) in Gamma; -1 when n not in Gamma(M).
    int module_index_for(Int n) const;
    /// Least C with [C, infinity) inside Gamma(M).
    Int module_conductor() const;

    const RingRep& rep() const { return rep_; }

    /// Same data with the listings permuted.
    StdBasisProblem permuted(const std::vector<std::size_t>& g_perm,
                             const std::vector<std::size_t>& h_perm) const;

private:
    std::vector<RationalSeries> g_, h_;
    std::vector<Int> h_orders_;
    NumericalSemigroup gamma_;
    RingRep rep_;
    Int trunc_ = 0;
    Int guard_ = 8;
};

struct ReduceResult {
    std::vector<RationalSeries> quotients; // one per module generator
    RationalSeries remainder;              // supported outside Gamma(M)
    Int exact_below;                       // all output is final below this
};

/// Division of f by (G, H): f = sum quotients[l] * h_l + remainder, with the
/// remainder supported outside Gamma(M).  Each step rewrites the leading
/// term by the smallest applicable module generator.  Raises PrecisionError
/// when the result is exact on less than [0, trunc - guard).
ReduceResult reduce(const RationalSeries& f, const StdBasisProblem& prob);

/// Remainder unchanged under `trials` random relistings of G and H.
bool reduction_invariance_check(const RationalSeries& f, const StdBasisProblem& prob,
                                int trials, unsigned seed = 0x5eedu);

/// Minimal-order S-process of module generators i and j: both are lifted by
/// ring-generator products to the least common reachable order, scaled monic,
/// and subtracted; the leading terms cancel by construction.
RationalSeries s_process_min(const StdBasisProblem& prob, std::size_t i, std::size_t j);

/// The p syzygy vectors of the monomial p-basis tuple (t^{a_0},...,t^{a_{p-1}}):
/// row i has t^q at position i and -t^{(alpha_{i+1}-alpha_i) p} at position
/// i+1 (the last row wraps with -t^{(q-alpha_{p-1}) p} at position 0).
/// Each row is checked to annihilate the tuple.
std::vector<std::vector<RationalSeries>> syzygy_generators(const NumericalSemigroup& gamma,
                                                           const NormalizedSemimodule& lambda);

struct PairResidue {
    std::size_t i = 0, j = 0;
    Int order = 0;           // common order the S-process cancels at
    RationalSeries residue;  // reduction of the S-process
};

struct StandardBasisCheck {
    bool is_standard = false;
    std::vector<PairResidue> pairs;
    Int verified_below = 0;
};

/// Standard-basis criterion: every minimal S-process reduces to zero.  The
/// truncation must reach the conductor of Gamma(M), where any nonzero
/// reduction necessarily shows up; otherwise PrecisionError.
StandardBasisCheck standard_basis_check(const StdBasisProblem& prob);
bool is_standard_basis(const StdBasisProblem& prob);

/// <nu(h_1),...,nu(h_n)>_Gamma as an embedded semimodule (two-generator
/// semigroups only).
EmbeddedSemimodule gamma_of_module(const StdBasisProblem& prob);

enum class SlotKind {
    free_coeff,    // exponent in Gamma \ Delta, inside the [a_i, a_i+q) window
    phi_dependent, // exponent outside Gamma: forced by ring membership
    tail,          // exponent in Gamma \ Delta beyond the window: fixed by the
                   // syzygy conditions in terms of the free slots
};

struct TemplateSlot {
    Int offset = 0;   // k > 0 with base + k outside Delta
    Int exponent = 0; // base + k
    SlotKind kind = SlotKind::free_coeff;
    int var = -1;     // id in the template's VarTable, named "l<i>_<k>"
};

struct GeneratorTemplate {
    Int base = 0; // b_i = shift + a_i
    std::vector<TemplateSlot> slots;
};

/// Generator shapes t^{b_i} + sum_{b_i+k not in Delta} l_{i,k} t^{b_i+k} for
/// the ideals with valuation set Delta, with every slot classified.
struct IdealTemplate {
    EmbeddedSemimodule delta;
    RationalSeries phi; // second ring generator, monic of order q
    std::vector<GeneratorTemplate> generators;
    VarTable vars;

    Int free_slot_count() const;
    /// Fully symbolic series of generator i.
    SymbolicSeries generator_series(std::size_t i) const;
};

IdealTemplate generator_template(const NumericalSemigroup& gamma, const EmbeddedSemimodule& delta,
                                 const RationalSeries& phi);

struct SolveResult {
    enum class Status { resolved, inconsistent, underdetermined };
    Status status = Status::resolved;
    std::vector<RationalSeries> generators;      // numeric when resolved
    std::map<std::string, Rational> assignments; // solved variables by name
    Int witness_exponent = -1;                   // inconsistent: exponent where
    Rational witness_value = 0;                  // ...a nonzero constant was forced to 0
    std::vector<std::string> unresolved;         // underdetermined: leftover names
};

/// Substitutes the given free/tail slot values (missing ones default to 0),
/// then resolves every phi-dependent coefficient by subduction against
/// {t^p, phi}: working leading terms with order in Gamma are subtracted,
/// orders outside Gamma yield affine-linear constraints that are solved and
/// substituted.  trunc <= 0 picks shift + 2c + 2q + 8.
SolveResult solve_dependent_coefficients(const IdealTemplate& tmpl,
                                         const std::map<std::string, Rational>& values = {},
                                         Int trunc = 0);

/// Same subduction loop for arbitrary symbolic series against an arbitrary
/// ring generator list (the CLI `solve` path).
SolveResult resolve_in_ring(const std::vector<SymbolicSeries>& gens,
                            const std::vector<RationalSeries>& ring_gens, const VarTable& vars,
                            Int trunc = 0);

} // namespace hilbcell
