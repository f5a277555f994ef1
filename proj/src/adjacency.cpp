#include <set>

#include "atomlr/verify.hpp"

namespace atomlr {

namespace {

struct Sides {
    std::vector<Label> se, sw, nw, ne;
};

Sides labels_on(const TileSet& ts) {
    std::set<Label> se, sw, nw, ne;
    for (auto& t : ts.tiles) {
        se.insert(t.edges[SE]);
        sw.insert(t.edges[SW]);
        nw.insert(t.edges[NW]);
        ne.insert(t.edges[NE]);
    }
    return {{se.begin(), se.end()}, {sw.begin(), sw.end()}, {nw.begin(), nw.end()}, {ne.begin(), ne.end()}};
}

// Same layout as the atom-Schur model: row j from the SE side upward, cell i from the SW side.
Region block(int rows, int cols, const Sides& s) {
    Region r;
    r.nvars = 1;
    std::vector<int> up(cols);
    for (int i = 0; i < cols; ++i) up[i] = r.add_choice_boundary(s.se);
    for (int j = 0; j < rows; ++j) {
        int carry = r.add_choice_boundary(s.sw);
        for (int i = 0; i < cols; ++i) {
            Cell c;
            c.orientation = Orientation::Diamond;
            c.edges[SE] = up[i];
            c.edges[SW] = carry;
            c.edges[NW] = up[i] = j == rows - 1 ? r.add_choice_boundary(s.nw) : r.add_edge();
            c.edges[NE] = carry = i == cols - 1 ? r.add_choice_boundary(s.ne) : r.add_edge();
            r.cells.push_back(c);
        }
    }
    return r;
}

mpz_class count(const Region& r, const TileSet& ts) { return partition_function(r, ts).eval_ones(); }

}  // namespace

AdjacencyCase compare_adjacency_rules(int rows, int cols, const Perm& sigma) {
    const TileSet& bp = diamond_tiles(sigma, DiamondRule::BannedPairs);
    const TileSet& tl = diamond_tiles(sigma, DiamondRule::TriangleLabels);
    TileSet both = tl;
    both.rule = bp.rule;
    AdjacencyCase c;
    c.rows = rows;
    c.cols = cols;
    c.sigma = sigma;
    c.banned_pairs = count(block(rows, cols, labels_on(bp)), bp);
    Sides s = labels_on(tl);
    std::set<Label> ne;
    for (auto& t : bp.tiles) ne.insert(with_extra(t.edges[NE], 0));
    s.ne.assign(ne.begin(), ne.end());
    Region r = block(rows, cols, s);
    c.triangle_labels = count(r, tl);
    c.both = count(r, both);
    return c;
}

bool AdjacencyReport::ok() const {
    for (auto& c : cases)
        if (!c.ok()) return false;
    return true;
}

nlohmann::json AdjacencyReport::to_json() const {
    nlohmann::json j;
    j["sweep"] = {{"max_cells", max_cells}, {"max_n", max_n}};
    j["tested"] = cases.size();
    j["failures"] = nlohmann::json::array();
    for (auto& c : cases)
        if (!c.ok())
            j["failures"].push_back({{"rows", c.rows},
                                     {"cols", c.cols},
                                     {"sigma", c.sigma.images()},
                                     {"banned_pairs", c.banned_pairs.get_str()},
                                     {"triangle_labels", c.triangle_labels.get_str()},
                                     {"both", c.both.get_str()}});
    return j;
}

AdjacencyReport verify_adjacency_equivalence(int max_cells, int max_n) {
    AdjacencyReport rep;
    rep.max_cells = max_cells;
    rep.max_n = max_n;
    for (int n = 1; n <= max_n; ++n)
        for (auto& s : Perm::all(n))
            for (int rows = 1; rows <= max_cells; ++rows)
                for (int cols = 1; rows * cols <= max_cells; ++cols) rep.cases.push_back(compare_adjacency_rules(rows, cols, s));
    return rep;
}

}  // namespace atomlr
