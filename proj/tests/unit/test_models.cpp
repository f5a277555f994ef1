#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "atomlr/models.hpp"
#include "atomlr/poset.hpp"

using namespace atomlr;

namespace {

Poly from_terms(int n, std::vector<Exp> es) {
    Poly p(n);
    for (auto& e : es) p.add_term(e, 1);
    return p;
}

std::vector<Comp> all_comps(int n, int maxpart) {
    std::vector<Comp> out;
    Comp a(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(a);
            return;
        }
        for (int v = 0; v <= maxpart; ++v) {
            a[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("atom model for (1,0,2,2) over 4123") {
    Perm s({4, 1, 2, 3});
    auto m = build_atom_model({1, 0, 2, 2}, s);
    CHECK(m.region.cells.size() == 4 * 6);
    auto ts = enumerate_tilings(m.region, m.tiles);
    CHECK(ts.size() == 4);
    Poly expect = from_terms(4, {{1, 2, 2, 0}, {1, 2, 1, 1}, {1, 1, 2, 1}, {0, 2, 2, 1}});
    CHECK(partition_function(m.region, m.tiles) == expect);
    Poly sum(4);
    for (auto& t : ts) sum += tiling_weight(m.region, m.tiles, t);
    CHECK(sum == expect);
}

TEST_CASE("schur model for (2,2,1)") {
    auto m = build_schur_model({2, 2, 1}, 3);
    CHECK(enumerate_tilings(m.region, m.tiles).size() == 3);
    CHECK(schur_via_tiling({2, 2, 1}, 3) == from_terms(3, {{2, 2, 1}, {2, 1, 2}, {1, 2, 2}}));
    CHECK(schur_via_tiling({1, 0}, 2) == from_terms(2, {{1, 0}, {0, 1}}));
    CHECK(schur_via_tiling({0, 0, 0}, 3) == Poly::constant(3, 1));
}

TEST_CASE("schur polynomials are symmetric, n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 4; ++d)
            for (auto& lam : partitions(d, n)) {
                Poly p = schur_via_tiling(lam, n);
                CHECK(p.eval_ones() > 0);
                for (auto& pi : Perm::all(n)) CHECK(p.permute_vars(pi.images()) == p);
            }
}

TEST_CASE("zero composition gives 1") {
    for (int n = 1; n <= 4; ++n)
        for (auto& s : Perm::all(n)) CHECK(atom_via_tiling(Comp(n, 0), s) == Poly::constant(n, 1));
}

TEST_CASE("tiling, fillings and chains agree, n <= 3, parts <= 2") {
    for (int n = 1; n <= 3; ++n)
        for (auto& s : Perm::all(n))
            for (auto& a : all_comps(n, 2)) {
                Poly t = atom_via_tiling(a, s);
                CHECK(t == atom_via_ssaf(a, s));
                CHECK(t == atom_via_chains(a, s));
            }
}

TEST_CASE("verticals are descending") {
    for (int n = 1; n <= 3; ++n)
        for (auto& s : Perm::all(n))
            for (auto& a : all_comps(n, 2)) {
                auto m = build_atom_model(a, s);
                for (auto& t : enumerate_tilings(m.region, m.tiles))
                    for (auto& v : intermediate_verticals(m, t)) CHECK(is_descending_string(v));
            }
}

TEST_CASE("first column of 3202 over 4123") {
    auto got = first_column_betas({3, 2, 0, 2}, Perm({4, 1, 2, 3}));
    CHECK(got == std::set<Comp>{{2, 0, 0, 2}, {3, 0, 0, 2}});
    CHECK(first_column_betas({0, 0, 0}, Perm({2, 3, 1})) == std::set<Comp>{{0, 0, 0}});
}

TEST_CASE("first column agrees with the extendable filter, n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (auto& s : Perm::all(n)) {
            int pos = s.inverse()(1);
            for (auto& a : all_comps(n, 3)) {
                std::set<Comp> expect;
                for (auto& b : all_comps(n, 3))
                    if (b[pos - 1] == 0 && is_sigma_extendable(b, a, s)) expect.insert(b);
                CHECK(first_column_betas(a, s) == expect);
            }
        }
}

TEST_CASE("tilings map bijectively onto fillings, n <= 3, parts <= 2") {
    for (int n = 1; n <= 3; ++n)
        for (auto& s : Perm::all(n))
            for (auto& a : all_comps(n, 2)) {
                auto m = build_atom_model(a, s);
                auto fills = enumerate_ssaf(a, s);
                std::set<Filling> image;
                for (auto& t : enumerate_tilings(m.region, m.tiles)) {
                    Filling f = tiling_to_ssaf(m, t, a);
                    CHECK(check_filling(f));
                    CHECK(Poly::monomial(f.weight()) == tiling_weight(m.region, m.tiles, t));
                    image.insert(f);
                }
                CHECK(image == std::set<Filling>(fills.begin(), fills.end()));
            }
}

TEST_CASE("tile files: loading and validation") {
    Perm id = Perm::identity(2);
    CHECK(load_tileset(nlohmann::json::array(), 2, id).tiles.empty());
    auto bad_weight = nlohmann::json::parse(
        R"([{"orientation":"diamond","edges":{"SE":"0","SW":"0","NW":"0","NE":"0"},"weight":"-x_c"}])");
    CHECK_THROWS(load_tileset(bad_weight, 2, id));
    auto dup = nlohmann::json::parse(
        R"([{"orientation":"right-sheared","edges":{"S":"i","E":"0","N":"i","W":"0"}},
            {"orientation":"right-sheared","edges":{"S":"1","E":"0","N":"1","W":"0"}}])");
    CHECK_THROWS(load_tileset(dup, 2, id));
    auto ts = load_tileset_file(tileset_path("atom_tiles.json"), 2, id);
    // empty, 2 verticals, 2 drops, 2 pickups, 3 kisses, 1 cross
    CHECK(ts.tiles.size() == 11);
    CHECK(ts.version >= 1);

    auto m = build_atom_model({1, 0}, id);
    TileSet none;
    none.build_index();
    CHECK(partition_function(m.region, none).is_zero());
}

TEST_CASE("tile directory override") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "atomlr_tiles_override";
    fs::create_directories(dir);
    std::ofstream(dir / "atom_tiles.json") << "[]";
    setenv("ATOMLR_TILESETS", dir.c_str(), 1);
    CHECK(atom_via_tiling({1, 0}, Perm::identity(2)).is_zero());
    unsetenv("ATOMLR_TILESETS");
    CHECK(!atom_via_tiling({1, 0}, Perm::identity(2)).is_zero());
    fs::remove_all(dir);
}
