#include <doctest.h>

#include "atomlr/poset.hpp"
#include "atomlr/skyline.hpp"

using namespace atomlr;

TEST_CASE("extendable examples") {
    Perm s({4, 1, 2, 3});
    Comp a{3, 2, 0, 2};
    CHECK(is_sigma_extendable(a, a, s));
    CHECK(is_sigma_extendable({2, 0, 0, 2}, a, s));
    CHECK(is_sigma_extendable({3, 0, 0, 2}, a, s));
    CHECK_THROWS_AS(is_sigma_extendable({1, 0}, a, s), std::invalid_argument);
}

TEST_CASE("covers") {
    Perm s({4, 1, 2, 3});
    CHECK(covers({2, 0, 2}, {3, 2, 0, 2}, s));
    CHECK(covers({3, 0, 2}, {3, 2, 0, 2}, s));
    CHECK(covers({}, {0}, Perm({1})));
    CHECK(covers({}, {1}, Perm({1})));
    CHECK_THROWS_AS(covers({1, 1}, {1, 1}, s), std::invalid_argument);
}

TEST_CASE("decompose identity and chain expansion agree with fillings") {
    for (int n = 1; n <= 3; ++n)
        for (auto& s : Perm::all(n))
            for (int d = 0; d <= 2 * n; ++d)
                for (auto& a : compositions(d, n)) {
                    if (max_part(a) > 2) continue;
                    Poly atom = atom_via_ssaf(a, s);
                    REQUIRE(atom_via_chains(a, s) == atom);
                    Poly rhs(n);
                    for (auto& [b, e] : decompose(a, s)) {
                        Poly tail = atom_via_ssaf(b, s).evaluate_first_zero_keep_vars();
                        Exp x(n, 0);
                        x[0] = e;
                        rhs += Poly::monomial(x) * tail;
                    }
                    REQUIRE(rhs == atom);
                }
}

TEST_CASE("stability of covers under sigma_k") {
    for (auto& s : Perm::all(4))
        for (int la = 1; la <= 3; ++la)
            for (int d = 0; d <= 3; ++d)
                for (auto& a : compositions(d, la))
                    for (int k = 0; k < 4 - la; ++k)
                        for (auto& b : lower_covers(a, s))
                            REQUIRE(covers(b, a, sigma_chain(s, k)));
}

TEST_CASE("poset interval") {
    auto P = poset_interval({0, 0}, Perm({1, 2}));
    CHECK(P.nodes.size() == 3);
    for (auto& [lo, hi] : P.edges) CHECK(P.nodes[lo].size() + 1 == P.nodes[hi].size());
    auto Q = poset_interval({1, 0, 2, 1}, Perm({2, 1, 4, 3}));
    CHECK(Q.nodes.front() == Comp{1, 0, 2, 1});
    CHECK(Q.nodes.back().empty());
}

TEST_CASE("first branch for the 3202 example") {
    Perm s({4, 1, 2, 3});
    auto lc = lower_covers({3, 2, 0, 2}, s);
    CHECK(std::find(lc.begin(), lc.end(), Comp{2, 0, 2}) != lc.end());
    CHECK(std::find(lc.begin(), lc.end(), Comp{3, 0, 2}) != lc.end());
}
