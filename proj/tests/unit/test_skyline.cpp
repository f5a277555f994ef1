#include <doctest.h>

#include "atomlr/poset.hpp"
#include "atomlr/skyline.hpp"

using namespace atomlr;

namespace {

Poly from_terms(int n, std::vector<Exp> es) {
    Poly p(n);
    for (auto& e : es) p.add_term(e, 1);
    return p;
}

}  // namespace

TEST_CASE("five fillings of (1,0,2,1) over 2143") {
    Perm s({2, 1, 4, 3});
    auto fs = enumerate_ssaf({1, 0, 2, 1}, s);
    CHECK(fs.size() == 5);
    Filling first{{1, 0, 2, 1}, s, {{1}, {}, {4, 2}, {3}}};
    CHECK(check_filling(first));
    CHECK(std::find(fs.begin(), fs.end(), first) != fs.end());
    Poly expect = from_terms(4, {{1, 1, 1, 1}, {1, 0, 2, 1}, {1, 0, 1, 2}, {0, 1, 2, 1}, {0, 1, 1, 2}});
    CHECK(atom_via_ssaf({1, 0, 2, 1}, s) == expect);
}

TEST_CASE("out of range entry is rejected") {
    Filling bad{{1, 0, 2, 1}, Perm({2, 1, 4, 3}), {{1}, {}, {4, 5}, {3}}};
    CHECK_THROWS_AS(check_filling(bad), std::invalid_argument);
}

TEST_CASE("two-cell triple instance") {
    Filling f{{1, 1}, Perm({1, 2}), {{1}, {2}}};
    CHECK(check_filling(f));
}

TEST_CASE("empty shape and the 1022 atom") {
    for (auto& s : Perm::all(3)) CHECK(enumerate_ssaf({0, 0, 0}, s).size() == 1);
    Poly expect = from_terms(4, {{1, 2, 2, 0}, {1, 2, 1, 1}, {1, 1, 2, 1}, {0, 2, 2, 1}});
    CHECK(enumerate_ssaf({1, 0, 2, 2}, Perm({4, 1, 2, 3})).size() == 4);
    CHECK(atom_via_ssaf({1, 0, 2, 2}, Perm({4, 1, 2, 3})) == expect);
}

TEST_CASE("deleting 1-cells") {
    Perm s({2, 1, 4, 3});
    Filling f{{1, 0, 2, 1}, s, {{1}, {}, {4, 2}, {3}}};
    auto d = delete_one_cells(f);
    CHECK(d.beta == Comp{0, 0, 2, 1});
    CHECK(d.rest.cols == std::vector<std::vector<int>>{{}, {}, {4, 2}, {3}});
    CHECK(check_filling(d.rest));
    Filling g{{1, 0, 2, 1}, s, {{2}, {}, {4, 3}, {3}}};
    CHECK(delete_one_cells(g).beta == g.shape);
    for (auto& h : enumerate_ssaf({2, 0}, Perm({1, 2}))) CHECK(delete_one_cells(h).beta[0] == 0);
}

TEST_CASE("below lemma holds on every filling, n <= 4, parts <= 2") {
    for (int n = 1; n <= 4; ++n)
        for (auto& s : Perm::all(n))
            for (int d = 0; d <= 2 * n; ++d)
                for (auto& a : compositions(d, n)) {
                    if (max_part(a) > 2) continue;
                    for (auto& f : enumerate_ssaf(a, s)) {
                        for (int i = 1; i <= n; ++i)
                            for (auto v : f.cols[i - 1]) REQUIRE(v <= s(i));
                        for (int l = 1; l <= n; ++l)
                            for (int r = l + 1; r <= n; ++r) REQUIRE(check_below_lemma(f, l, r));
                        auto dd = delete_one_cells(f);
                        REQUIRE(is_sigma_extendable(dd.beta, a, s));
                    }
                }
}

TEST_CASE("below lemma negative control") {
    // column 1 below column 2 at height 1 but above at the basement
    Filling f{{1, 1}, Perm({1, 2}), {{1}, {2}}};
    f.cols = {{1}, {1}};
    CHECK_FALSE(check_filling(f));
}
