#include "hilbcell/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hilbcell {

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> generators) {
    if (generators.empty())
        throw std::invalid_argument("semigroup: generator list is empty");
    for (Int g : generators)
        if (g < 1)
            throw std::invalid_argument("semigroup: generator " + std::to_string(g) +
                                        " is not a positive integer");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    Int g = 0;
    for (Int v : generators) g = std::gcd(g, v);
    if (g != 1)
        throw std::invalid_argument("semigroup: gcd of generators is " + std::to_string(g) +
                                    ", gap set would be infinite");

    const Int least = generators.front();
    NumericalSemigroup s;
    s.gens_ = generators;

    if (least == 1) {
        // The whole of N: no gaps, conductor 0.
        s.conductor_ = 0;
        return s;
    }

    // Reachability table, grown until a run of `least` consecutive members
    // appears; from the start of such a run everything is reachable.
    Int bound = generators.back() * least + generators.back() + 1;
    for (;;) {
        std::vector<bool> reach(static_cast<std::size_t>(bound), false);
        reach[0] = true;
        for (Int n = 1; n < bound; ++n)
            for (Int gen : generators)
                if (n >= gen && reach[static_cast<std::size_t>(n - gen)]) {
                    reach[static_cast<std::size_t>(n)] = true;
                    break;
                }

        Int run = 0;
        Int run_start = -1;
        for (Int n = 0; n < bound; ++n) {
            run = reach[static_cast<std::size_t>(n)] ? run + 1 : 0;
            if (run == least) {
                run_start = n - least + 1;
                break;
            }
        }
        if (run_start < 0) {
            bound *= 2;
            continue;
        }

        Int conductor = 0;
        for (Int n = 0; n < run_start; ++n)
            if (!reach[static_cast<std::size_t>(n)]) {
                s.gaps_.push_back(n);
                conductor = n + 1;
            }
        s.conductor_ = conductor;
        s.member_.assign(reach.begin(), reach.begin() + conductor);
        return s;
    }
}

Int NumericalSemigroup::p() const {
    if (!is_plane_branch())
        throw std::logic_error("semigroup: p() requires exactly two generators");
    return gens_[0];
}

Int NumericalSemigroup::q() const {
    if (!is_plane_branch())
        throw std::logic_error("semigroup: q() requires exactly two generators");
    return gens_[1];
}

bool NumericalSemigroup::contains_closed_form(Int p, Int q, Int n) {
    if (n < 0) return false;
    // The least member congruent to k*q (mod p) is k*q itself.
    for (Int k = 0; k < p; ++k)
        if ((n - k * q) % p == 0) return n >= k * q;
    return false;
}

} // namespace hilbcell
