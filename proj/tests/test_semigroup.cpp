#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hilbcell/semigroup.hpp>

#include <set>
#include <stdexcept>

using namespace hilbcell;

namespace {

// Direct reachability {a1*x1 + ... + ak*xk} below a bound.
std::set<Int> brute_members(const std::vector<Int>& gens, Int bound) {
    std::set<Int> reach{0};
    bool grew = true;
    while (grew) {
        grew = false;
        for (Int m : std::set<Int>(reach))
            for (Int g : gens) {
                const Int n = m + g;
                if (n < bound && reach.insert(n).second) grew = true;
            }
    }
    return reach;
}

} // namespace

TEST_CASE("smallest branch <2,3>") {
    const auto g = NumericalSemigroup::from_generators({2, 3});
    CHECK(g.gaps() == std::vector<Int>{1});
    CHECK(g.delta() == 1);
    CHECK(g.conductor() == 2);
}

TEST_CASE("<3,4> invariants") {
    const auto g = NumericalSemigroup::from_generators({3, 4});
    CHECK(g.gaps() == std::vector<Int>{1, 2, 5});
    CHECK(g.delta() == 3);
    CHECK(g.conductor() == 6);
    CHECK(g.p() == 3);
    CHECK(g.q() == 4);
}

TEST_CASE("<3,5> invariants") {
    const auto g = NumericalSemigroup::from_generators({3, 5});
    CHECK(g.delta() == 4);
    CHECK(g.conductor() == 8);
}

TEST_CASE("membership") {
    const auto g34 = NumericalSemigroup::from_generators({3, 4});
    CHECK_FALSE(g34.contains(5));
    CHECK(g34.contains(0));
    CHECK_FALSE(g34.contains(-3));
    CHECK(g34.contains(100));
    const auto g27 = NumericalSemigroup::from_generators({2, 7});
    CHECK_FALSE(g27.contains(5));
    CHECK(g27.contains(9));
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), std::invalid_argument);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({-2, 3}), std::invalid_argument);
}

TEST_CASE("generator order and duplicates do not matter") {
    const auto a = NumericalSemigroup::from_generators({4, 3, 4});
    CHECK(a.generators() == std::vector<Int>{3, 4});
    CHECK(a.conductor() == 6);
}

TEST_CASE("two-generator grid: closed form, brute force, conductor identity") {
    const std::vector<std::pair<Int, Int>> grid = {{2, 3}, {2, 5}, {2, 7}, {2, 9}, {3, 4},
                                                   {3, 5}, {3, 7}, {4, 5}, {4, 7}, {5, 6}};
    for (const auto& [p, q] : grid) {
        CAPTURE(p);
        CAPTURE(q);
        const auto g = NumericalSemigroup::from_generators({p, q});
        CHECK(g.conductor() == 2 * g.delta());
        CHECK(g.conductor() == (p - 1) * (q - 1));
        if (!g.gaps().empty()) CHECK(g.conductor() == g.gaps().back() + 1);
        const Int bound = g.conductor() + 2 * q;
        const auto brute = brute_members({p, q}, bound);
        for (Int n = 0; n < bound; ++n) {
            CHECK(g.contains(n) == (brute.count(n) > 0));
            CHECK(g.contains(n) == NumericalSemigroup::contains_closed_form(p, q, n));
        }
    }
}

TEST_CASE("general generator sets") {
    const auto g = NumericalSemigroup::from_generators({6, 10, 15});
    CHECK(g.conductor() == 30); // Frobenius number 29
    const Int bound = g.conductor() + 20;
    const auto brute = brute_members({6, 10, 15}, bound);
    for (Int n = 0; n < bound; ++n) CHECK(g.contains(n) == (brute.count(n) > 0));

    const auto h = NumericalSemigroup::from_generators({4, 6, 9});
    const auto brute_h = brute_members({4, 6, 9}, 40);
    for (Int n = 0; n < 40; ++n) CHECK(h.contains(n) == (brute_h.count(n) > 0));

    const auto full = NumericalSemigroup::from_generators({1});
    CHECK(full.delta() == 0);
    CHECK(full.conductor() == 0);
    CHECK(full.contains(0));
    CHECK(full.contains(7));
}
