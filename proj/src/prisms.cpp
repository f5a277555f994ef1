#include "atomlr/models.hpp"

namespace atomlr {

namespace {

// Appends b's cells to a with fresh edge ids.
void append_region(Region& a, const Region& b) {
    int off = static_cast<int>(a.boundary.size());
    a.boundary.insert(a.boundary.end(), b.boundary.begin(), b.boundary.end());
    for (auto& [e, ls] : b.choices) a.choices[e + off] = ls;
    for (Cell c : b.cells) {
        for (int& e : c.edges) e += off;
        a.cells.push_back(c);
    }
}

TileSet merged(const TileSet& a, const TileSet& b, const std::string& name) {
    TileSet ts;
    ts.name = name;
    ts.tiles = a.tiles;
    ts.tiles.insert(ts.tiles.end(), b.tiles.begin(), b.tiles.end());
    ts.rule = b.rule ? b.rule : a.rule;
    ts.build_index();
    return ts;
}

}  // namespace

PrismPair build_prisms(const Comp& alpha, const Comp& lambda, const Perm& sigma) {
    int n = sigma.n();
    if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("alpha and sigma lengths differ");
    Comp lam = lambda;
    for (std::size_t i = n; i < lam.size(); ++i)
        if (lam[i] != 0) throw std::invalid_argument("lambda has more than n parts");
    lam.resize(n, 0);
    if (!is_partition(lam)) throw std::invalid_argument("lambda must be a partition");
    PrismPair p;

    auto atom = build_atom_model(alpha, sigma);
    auto schur = build_schur_model(lam, n);
    p.lhs.descriptor = "prism-lhs";
    p.lhs.sigma = sigma;
    p.lhs.tiles = atom.tiles;  // the Schur tiles are the colour-1 atom tiles
    p.lhs.region = atom.region;
    append_region(p.lhs.region, schur.region);

    int k = max_part(alpha) + max_part(lam), size = n + k;
    p.rhs.descriptor = "prism-rhs";
    p.rhs.sigma = sigma;
    p.rhs.tiles = merged(atom_tiles(sigma), diamond_tiles(sigma, DiamondRule::BannedPairs), "prism");
    Region& r = p.rhs.region;
    r.nvars = n;
    BString nw = pad(encode_alpha_star(alpha), size, Token::zero());
    BString sw = pad(encode_lambda_plus(lam, n), size, Token::plus());
    std::vector<int> up(size);
    for (int i = 0; i < size; ++i) up[i] = r.add_edge();  // shared with the atom grid
    std::vector<int> shared = up;
    for (int j = 0; j < size; ++j) {
        int carry = r.add_boundary(label_of(sw[j]));
        for (int i = 0; i < size; ++i) {
            Cell c;
            c.orientation = Orientation::Diamond;
            c.edges[SE] = up[i];
            c.edges[SW] = carry;
            c.edges[NW] = up[i] = j == size - 1 ? r.add_boundary(label_of(nw[i])) : r.add_edge();
            c.edges[NE] = carry = i == size - 1 ? r.add_boundary(label_of(j < k ? Token::plus() : Token::zero()))
                                             : r.add_edge();
            r.cells.push_back(c);
        }
    }
    Label zero = label_of(Token::zero());
    Perm inv = sigma.inverse();
    std::vector<int> left = shared;
    for (int c = 1; c <= n; ++c) {
        int below = r.add_boundary(label_of(Token::colour(inv(c))));
        for (int h = 0; h < size; ++h) {
            Cell cell;
            cell.orientation = Orientation::RightSheared;
            cell.column = c;
            cell.edges[S] = below;
            cell.edges[W] = left[h];
            cell.edges[E] = left[h] = c == n ? r.add_boundary(zero) : r.add_edge();
            cell.edges[N] = below = h == size - 1 ? r.add_boundary(zero) : r.add_edge();
            r.cells.push_back(cell);
        }
    }
    return p;
}

}  // namespace atomlr
