#include "hilbcell/semimodule.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "hilbcell/errors.hpp"

namespace hilbcell {

namespace {

void require_plane_branch(const NumericalSemigroup& gamma, const char* who) {
    if (!gamma.is_plane_branch())
        throw std::invalid_argument(std::string(who) +
                                    ": requires a two-generator semigroup");
}

} // namespace

NormalizedSemimodule NormalizedSemimodule::from_alphas(const NumericalSemigroup& gamma,
                                                       std::vector<Int> alphas) {
    require_plane_branch(gamma, "semimodule");
    const Int p = gamma.p(), q = gamma.q();
    if (static_cast<Int>(alphas.size()) != p)
        throw std::invalid_argument("semimodule: alpha-vector must have length p");
    if (alphas[0] != 0)
        throw std::invalid_argument("semimodule: alpha_0 must be 0");
    for (Int i = 1; i < p; ++i)
        if (alphas[static_cast<std::size_t>(i)] < alphas[static_cast<std::size_t>(i - 1)])
            throw std::invalid_argument("semimodule: alpha-vector not non-decreasing "
                                        "(set not closed under +q)");

    NormalizedSemimodule m;
    m.p_ = p;
    m.q_ = q;
    m.alphas_ = std::move(alphas);
    m.basis_.resize(static_cast<std::size_t>(p));
    m.class_of_.assign(static_cast<std::size_t>(p), 0);
    for (Int i = 0; i < p; ++i) {
        const Int a = i * q - m.alphas_[static_cast<std::size_t>(i)] * p;
        if (a < 0)
            throw std::invalid_argument("semimodule: basis element a_" + std::to_string(i) +
                                        " = " + std::to_string(a) + " is negative");
        m.basis_[static_cast<std::size_t>(i)] = a;
        m.class_of_[static_cast<std::size_t>(a % p)] = i;
    }
    return m;
}

Int NormalizedSemimodule::gap_count() const {
    Int total = 0;
    for (Int a : basis_) total += a / p_;
    return total;
}

std::vector<Int> EmbeddedSemimodule::elements_below(Int bound) const {
    std::vector<Int> out;
    for (Int n = shift; n < bound; ++n)
        if (contains(n)) out.push_back(n);
    return out;
}

EmbeddedSemimodule semimodule_from_generators(const NumericalSemigroup& gamma,
                                              const std::vector<Int>& gens) {
    require_plane_branch(gamma, "semimodule_from_generators");
    if (gens.empty())
        throw std::invalid_argument("semimodule_from_generators: empty generating set");
    const Int p = gamma.p(), q = gamma.q();
    const Int d = *std::min_element(gens.begin(), gens.end());

    // Least member of Gamma in each residue class mod p is k*q where
    // k*q == class (mod p); the class minimum of the generated union is the
    // min over generators of (generator + that offset).
    std::vector<Int> gamma_class_min(static_cast<std::size_t>(p), 0);
    for (Int k = 0; k < p; ++k)
        gamma_class_min[static_cast<std::size_t>((k * q) % p)] = k * q;

    std::vector<Int> basis(static_cast<std::size_t>(p), -1);
    for (Int s : gens) {
        const Int s0 = s - d;
        for (Int rho = 0; rho < p; ++rho) {
            const Int off = gamma_class_min[static_cast<std::size_t>(((rho - s0) % p + p) % p)];
            const Int candidate = s0 + off;
            auto& slot = basis[static_cast<std::size_t>(candidate % p)];
            if (slot < 0 || candidate < slot) slot = candidate;
        }
    }

    // Convert class minima to the alpha-vector: a_i == i*q (mod p).
    std::vector<Int> alphas(static_cast<std::size_t>(p), 0);
    for (Int i = 0; i < p; ++i) {
        const Int a = basis[static_cast<std::size_t>((i * q) % p)];
        alphas[static_cast<std::size_t>(i)] = (i * q - a) / p;
    }
    return {NormalizedSemimodule::from_alphas(gamma, std::move(alphas)), d};
}

EmbeddedSemimodule delta_normalize(const NumericalSemigroup& gamma,
                                   const EmbeddedSemimodule& delta, Int r) {
    if (delta.codim(gamma) != r)
        throw std::invalid_argument("delta_normalize: r = " + std::to_string(r) +
                                    " does not match the codimension " +
                                    std::to_string(delta.codim(gamma)));
    EmbeddedSemimodule out{delta.lambda, delta.shift - r};
    const Int two_delta = 2 * gamma.delta();
    Int witness = 0;
    for (Int n = 0; n < two_delta; ++n)
        if (out.contains(n)) ++witness;
    if (witness != gamma.delta())
        throw std::logic_error("delta_normalize: witness count " + std::to_string(witness) +
                               " != delta");
    return out;
}

std::vector<Int> minimal_generators(const EmbeddedSemimodule& delta) {
    // Candidates are the class minima shift + a_i (x - p is never inside);
    // keep those whose -q step also leaves the set.
    std::vector<Int> out;
    for (Int a : delta.lambda.p_basis()) {
        const Int x = delta.shift + a;
        if (!delta.contains(x - delta.lambda.q())) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Int>> all_alpha_vectors(const NumericalSemigroup& gamma) {
    require_plane_branch(gamma, "all_alpha_vectors");
    const Int p = gamma.p(), q = gamma.q();
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(static_cast<std::size_t>(p), 0);
    std::function<void(Int)> rec = [&](Int i) {
        if (i == p) {
            out.push_back(cur);
            return;
        }
        const Int lo = cur[static_cast<std::size_t>(i - 1)];
        const Int hi = (i * q) / p; // a_i >= 0
        for (Int a = lo; a <= hi; ++a) {
            cur[static_cast<std::size_t>(i)] = a;
            rec(i + 1);
        }
    };
    if (p == 1) {
        out.push_back({0});
        return out;
    }
    rec(1);
    return out;
}

Int alpha_vector_count(Int p, Int q) {
    // binom(p+q, p) / (p+q), kept exact by dividing as we multiply.
    const Int n = p + q;
    Int k = std::min(p, q);
    __int128 num = 1;
    for (Int i = 1; i <= k; ++i) {
        num = num * (n - k + i);
        num /= i; // binom prefix property keeps this exact
    }
    return static_cast<Int>(num / n);
}

std::vector<EmbeddedSemimodule> enumerate_mod_r(const NumericalSemigroup& gamma, Int r) {
    require_plane_branch(gamma, "enumerate_mod_r");
    if (r < 0) throw std::invalid_argument("enumerate_mod_r: r must be nonnegative");
    std::vector<EmbeddedSemimodule> out;
    for (auto& alphas : all_alpha_vectors(gamma)) {
        auto lambda = NormalizedSemimodule::from_alphas(gamma, alphas);
        const Int d = r + gamma.delta() - lambda.gap_count();
        if (d < 0) continue;
        bool inside = true;
        for (Int a : lambda.p_basis())
            if (!gamma.contains(d + a)) {
                inside = false;
                break;
            }
        if (inside) out.push_back({std::move(lambda), d});
    }
    return out;
}

Int oracle_bound(const NumericalSemigroup& gamma, Int r) {
    return r + gamma.delta() + gamma.conductor();
}

std::vector<std::vector<Int>> oracle_enumerate_mod_r(const NumericalSemigroup& gamma, Int r,
                                                     const OracleOptions& opts) {
    if (r < 0) throw std::invalid_argument("oracle_enumerate_mod_r: r must be nonnegative");
    const Int bound = oracle_bound(gamma, r);
    std::vector<Int> members;
    for (Int n = 0; n < bound; ++n)
        if (gamma.contains(n)) members.push_back(n);
    if (static_cast<Int>(members.size()) > opts.max_members)
        throw OracleBoundError("oracle_enumerate_mod_r: |Gamma ∩ [0," + std::to_string(bound) +
                                   ")| = " + std::to_string(members.size()) +
                                   " exceeds the cap " + std::to_string(opts.max_members),
                               static_cast<Int>(members.size()), opts.max_members);

    std::vector<Int> index_of(static_cast<std::size_t>(bound), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        index_of[static_cast<std::size_t>(members[i])] = static_cast<Int>(i);

    const auto& gens = gamma.generators();
    std::vector<bool> in_t(members.size(), false);

    // T is down-closed for the partial order "difference in Gamma", so its
    // elements sorted ascending form down-closed prefixes; grow T in strictly
    // ascending order and each T is produced exactly once.
    std::vector<std::vector<Int>> removed_sets;
    std::vector<Int> chosen;
    std::function<void(Int)> grow = [&](Int from) {
        if (static_cast<Int>(chosen.size()) == r) {
            removed_sets.push_back(chosen);
            return;
        }
        for (Int idx = from; idx < static_cast<Int>(members.size()); ++idx) {
            const Int x = members[static_cast<std::size_t>(idx)];
            bool addable = true;
            for (Int g : gens) {
                const Int pred = x - g;
                if (pred >= 0 && pred < bound && index_of[static_cast<std::size_t>(pred)] >= 0 &&
                    !in_t[static_cast<std::size_t>(index_of[static_cast<std::size_t>(pred)])]) {
                    addable = false;
                    break;
                }
            }
            if (!addable) continue;
            in_t[static_cast<std::size_t>(idx)] = true;
            chosen.push_back(x);
            grow(idx + 1);
            chosen.pop_back();
            in_t[static_cast<std::size_t>(idx)] = false;
        }
    };
    grow(0);

    std::vector<std::vector<Int>> out;
    out.reserve(removed_sets.size());
    for (const auto& t : removed_sets) {
        std::vector<Int> elems;
        std::size_t ti = 0;
        for (Int m : members) {
            if (ti < t.size() && t[ti] == m) {
                ++ti;
                continue;
            }
            elems.push_back(m);
        }
        out.push_back(std::move(elems));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hilbcell
