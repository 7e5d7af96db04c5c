#pragma once

#include <optional>
#include <vector>

#include "hilbcell/semigroup.hpp"

namespace hilbcell {

/// 0-normalized semimodule over a two-generator semigroup <p,q>, stored as
/// the alpha-vector (a_0 = 0, a_i = i*q - alpha_i*p).  The underlying set is
/// the union of the arithmetic rays a_i + p*N; it contains 0 and is closed
/// under adding p and q.
class NormalizedSemimodule {
public:
    /// Validates and builds from an alpha-vector.  Requirements: length p,
    /// alpha_0 = 0, alphas non-decreasing, every basis element a_i >= 0.
    /// Violations raise std::invalid_argument.
    static NormalizedSemimodule from_alphas(const NumericalSemigroup& gamma,
                                            std::vector<Int> alphas);

    Int p() const { return p_; }
    Int q() const { return q_; }
    const std::vector<Int>& alphas() const { return alphas_; }
    const std::vector<Int>& p_basis() const { return basis_; }

    bool contains(Int n) const {
        if (n < 0) return false;
        return n >= basis_[static_cast<std::size_t>(class_of_[static_cast<std::size_t>(n % p_)])];
    }

    /// Number of nonnegative integers outside the set: sum of floor(a_i/p).
    Int gap_count() const;

    bool operator==(const NormalizedSemimodule& o) const {
        return p_ == o.p_ && q_ == o.q_ && alphas_ == o.alphas_;
    }

private:
    Int p_ = 0, q_ = 0;
    std::vector<Int> alphas_;
    std::vector<Int> basis_;
    std::vector<Int> class_of_; // residue mod p -> index i with a_i in that class
};

/// Shifted semimodule shift + Lambda.  When it arises from enumerate_mod_r
/// it is a subset of the ambient semigroup; delta-normalizations reuse the
/// same representation with a smaller shift.
struct EmbeddedSemimodule {
    NormalizedSemimodule lambda;
    Int shift = 0; // least element

    bool contains(Int n) const { return lambda.contains(n - shift); }
    /// #(Gamma \ Delta) = gap_count(Lambda) + shift - delta.
    Int codim(const NumericalSemigroup& gamma) const {
        return lambda.gap_count() + shift - gamma.delta();
    }
    /// Elements below `bound`, ascending.
    std::vector<Int> elements_below(Int bound) const;

    bool operator==(const EmbeddedSemimodule& o) const {
        return shift == o.shift && lambda == o.lambda;
    }
};

/// 0-normalization of the semimodule generated by a finite nonempty set:
/// returns (Lambda, shift) with shift = min of the generated set.
EmbeddedSemimodule semimodule_from_generators(const NumericalSemigroup& gamma,
                                              const std::vector<Int>& gens);

/// -r + Delta, the delta-normalization.  Checks that r equals the codimension
/// and that exactly delta elements of the result lie in [0, 2*delta - 1].
EmbeddedSemimodule delta_normalize(const NumericalSemigroup& gamma,
                                   const EmbeddedSemimodule& delta, Int r);

/// {x in Delta : x - p not in Delta and x - q not in Delta}, ascending.
std::vector<Int> minimal_generators(const EmbeddedSemimodule& delta);

/// All valid alpha-vectors (monotone, basis nonnegative) in lexicographic
/// order.  Their number is binom(p+q, p)/(p+q).
std::vector<std::vector<Int>> all_alpha_vectors(const NumericalSemigroup& gamma);

/// binom(p+q, p) / (p+q).
Int alpha_vector_count(Int p, Int q);

/// Every semimodule Delta inside Gamma with #(Gamma \ Delta) = r, in
/// lexicographic alpha order.  For each valid alpha-vector the shift is
/// forced: d = r + delta - gap_count(Lambda); the vector is kept when d >= 0
/// and d + a_i lies in Gamma for all i.
std::vector<EmbeddedSemimodule> enumerate_mod_r(const NumericalSemigroup& gamma, Int r);

struct OracleOptions {
    Int max_members = 48; // refuse when |Gamma ∩ [0,B)| exceeds this
};

/// B = r + delta + conductor: every element the enumeration may remove lies
/// below it (min Delta <= r + delta and the tail starts by min Delta + c).
Int oracle_bound(const NumericalSemigroup& gamma, Int r);

/// Independent brute-force enumeration of Mod_r: depth-first search over
/// r-element subsets T of Gamma ∩ [0,B) closed under x -> x-p and x -> x-q
/// whenever the step stays in Gamma; emits Delta = Gamma \ T as explicit
/// sorted element lists restricted to [0,B).  Throws OracleBoundError when
/// the member count exceeds the cap.
std::vector<std::vector<Int>> oracle_enumerate_mod_r(const NumericalSemigroup& gamma, Int r,
                                                     const OracleOptions& opts = {});

} // namespace hilbcell
