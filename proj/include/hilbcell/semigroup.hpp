#pragma once

#include <cstdint>
#include <vector>

namespace hilbcell {

using Int = std::int64_t;

/// Numerical semigroup with finitely many gaps: the additive closure of a
/// generator set with gcd 1.  Immutable after construction; membership below
/// the conductor is table-backed, everything at or above it is a member.
class NumericalSemigroup {
public:
    /// Default state is the full N (no gaps); use from_generators for
    /// anything real.
    NumericalSemigroup() = default;

    /// Builds the semigroup generated by `generators`.  Throws
    /// std::invalid_argument when the list is empty, contains a value < 1,
    /// or the gcd is not 1 (infinite gap set).
    static NumericalSemigroup from_generators(std::vector<Int> generators);

    bool contains(Int n) const {
        if (n < 0) return false;
        if (n >= conductor_) return true;
        return member_[static_cast<std::size_t>(n)];
    }

    const std::vector<Int>& generators() const { return gens_; }
    const std::vector<Int>& gaps() const { return gaps_; }
    Int delta() const { return static_cast<Int>(gaps_.size()); }
    Int conductor() const { return conductor_; }

    bool is_plane_branch() const { return gens_.size() == 2; }
    /// Smaller / larger generator of a two-generator semigroup.
    Int p() const;
    Int q() const;

    /// Closed-form membership for <p,q>: n lies in the semigroup iff
    /// n >= k*q where k is the residue index with k*q == n (mod p).
    /// Cross-checked against the generic reachability table in tests.
    static bool contains_closed_form(Int p, Int q, Int n);

private:
    std::vector<Int> gens_;
    std::vector<Int> gaps_;
    Int conductor_ = 0;
    std::vector<bool> member_; // indices [0, conductor_)
};

} // namespace hilbcell
