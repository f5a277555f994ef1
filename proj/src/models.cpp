#include "atomlr/models.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace atomlr {

const TileSet& atom_tiles(const Perm& sigma) {
    static std::mutex m;
    static std::map<std::pair<std::string, Perm>, TileSet> cache;
    std::lock_guard<std::mutex> g(m);
    auto key = std::make_pair(tileset_dir(), sigma);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, load_tileset_file(tileset_path("atom_tiles.json"), sigma.n(), sigma)).first;
    return it->second;
}

const TileSet& schur_tiles() { return atom_tiles(Perm::identity(1)); }

namespace {

// n columns by H rows; left labels bottom to top, bottom labels per column, top and right 0.
ModelInstance grid_model(const std::string& name, const BString& left, const BString& bottom, const TileSet& ts,
                         const Perm& sigma) {
    ModelInstance m;
    m.descriptor = name;
    m.tiles = ts;
    m.sigma = sigma;
    int n = static_cast<int>(bottom.size()), H = static_cast<int>(left.size());
    m.ncols = n;
    m.nrows = H;
    Region& r = m.region;
    r.nvars = n;
    Label zero = label_of(Token::zero());
    // vertical edges v[c][h], c = 0..n; horizontal edges hz[c][h], c = 1..n, h = 0..H
    std::vector<std::vector<int>> v(n + 1, std::vector<int>(H)), hz(n + 1, std::vector<int>(H + 1));
    for (int h = 0; h < H; ++h) v[0][h] = r.add_boundary(label_of(left[h]));
    for (int c = 1; c <= n; ++c) {
        for (int h = 0; h < H; ++h) v[c][h] = c == n ? r.add_boundary(zero) : r.add_edge();
        hz[c][0] = r.add_boundary(label_of(bottom[c - 1]));
        for (int h = 1; h < H; ++h) hz[c][h] = r.add_edge();
        hz[c][H] = r.add_boundary(zero);
    }
    for (int c = 1; c <= n; ++c)
        for (int h = 0; h < H; ++h) {
            Cell cell;
            cell.orientation = Orientation::RightSheared;
            cell.column = c;
            cell.edges[S] = hz[c][h];
            cell.edges[N] = hz[c][h + 1];
            cell.edges[W] = v[c - 1][h];
            cell.edges[E] = v[c][h];
            r.cells.push_back(cell);
        }
    return m;
}

}  // namespace

ModelInstance build_atom_model(const Comp& alpha, const Perm& sigma) {
    if (static_cast<int>(alpha.size()) != sigma.n()) throw std::invalid_argument("alpha and sigma lengths differ");
    BString bottom;
    Perm inv = sigma.inverse();
    for (int c = 1; c <= sigma.n(); ++c) bottom.push_back(Token::colour(inv(c)));
    return grid_model("atom", encode_alpha_star(alpha), bottom, atom_tiles(sigma), sigma);
}

Poly atom_via_tiling(const Comp& alpha, const Perm& sigma) {
    auto m = build_atom_model(alpha, sigma);
    return partition_function(m.region, m.tiles);
}

ModelInstance build_schur_model(const Comp& lambda, int n) {
    if (!is_partition(lambda)) throw std::invalid_argument("lambda must be a partition");
    BString bottom(n, Token::colour(1));
    return grid_model("schur", encode_lambda_minus(lambda, n), bottom, schur_tiles(), Perm::identity(1));
}

Poly schur_via_tiling(const Comp& lambda, int n) {
    auto m = build_schur_model(lambda, n);
    return partition_function(m.region, m.tiles);
}

std::vector<BString> intermediate_verticals(const ModelInstance& m, const Tiling& t) {
    std::vector<BString> out(m.ncols + 1);
    for (int c = 1; c <= m.ncols; ++c)
        for (int h = 0; h < m.nrows; ++h) {
            const Tile& tile = m.tiles.tiles[t[(c - 1) * m.nrows + h]];
            if (c == 1) out[0].push_back(Token::parse(label_name(tile.edges[W])));
            out[c].push_back(Token::parse(label_name(tile.edges[E])));
        }
    return out;
}

namespace {

// Inverse of beta_skip_string: put colour s back at the end of the width-0 group and drop the final 0.
Comp decode_skip_string(BString r, int s) {
    if (r.empty() || r.back().kind != Token::Zero) throw std::invalid_argument("skip string must end in 0");
    r.pop_back();
    auto pos = r.begin();
    while (pos != r.end() && pos->kind == Token::Colour && pos->a > s) ++pos;
    r.insert(pos, Token::colour(s));
    return decode_alpha_star(r);
}

}  // namespace

std::set<Comp> first_column_betas(const Comp& alpha, const Perm& sigma) {
    const TileSet& ts = atom_tiles(sigma);
    BString left = encode_alpha_star(alpha);
    int H = static_cast<int>(left.size());
    int s = sigma.inverse()(1);
    Label zero = label_of(Token::zero());
    std::set<Comp> out;
    BString right;
    // bottom to top; carry is the label entering the current cell from below
    std::function<void(int, Label)> rec = [&](int h, Label carry) {
        if (h == H) {
            // only descending right sides encode a composition
            if (carry == zero && is_descending_string(right)) {
                Comp beta = decode_skip_string(right, s);
                beta.resize(alpha.size(), 0);
                out.insert(beta);
            }
            return;
        }
        for (int t : ts.with(Orientation::RightSheared, S, carry)) {
            const Tile& tile = ts.tiles[t];
            if (tile.edges[W] != label_of(left[h])) continue;
            right.push_back(Token::parse(label_name(tile.edges[E])));
            rec(h + 1, tile.edges[N]);
            right.pop_back();
        }
    };
    rec(0, label_of(Token::colour(s)));
    return out;
}

Filling tiling_to_ssaf(const ModelInstance& m, const Tiling& t, const Comp& alpha) {
    Filling f;
    f.shape = alpha;
    f.basement = m.sigma;
    int n = m.ncols;
    f.cols.assign(n, {});
    // Lines only move up and left, so following a line visits columns right to left, rows upward.
    for (int c = n; c >= 1; --c)
        for (int h = 0; h < m.nrows; ++h) {
            const Tile& tile = m.tiles.tiles[t[(c - 1) * m.nrows + h]];
            if (tile.weight == Weight::One) continue;
            int colour = Token::parse(label_name(tile.edges[S])).colour_of();
            f.cols.at(colour - 1).push_back(c);
        }
    return f;
}

}  // namespace atomlr

namespace atomlr {

ModelInstance build_atom_schur_model(const Comp& alpha, const Comp& lambda, const Comp& beta, const Perm& sigma,
                                     DiamondRule rule) {
    int n = sigma.n();
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
        throw std::invalid_argument("alpha, beta and sigma lengths differ");
    Comp lam = lambda;
    if (static_cast<int>(lam.size()) > n) {
        for (std::size_t i = n; i < lam.size(); ++i)
            if (lam[i] != 0) throw std::invalid_argument("lambda has more than n parts");
        lam.resize(n);
    }
    lam.resize(n, 0);
    if (!is_partition(lam)) throw std::invalid_argument("lambda must be a partition");
    ModelInstance m;
    m.descriptor = "atom-schur";
    m.sigma = sigma;
    m.tiles = diamond_tiles(sigma, rule);
    int k = max_part(beta), N = n + k;
    BString se = encode_alpha_star(beta), nw = encode_alpha_star(alpha), sw = encode_lambda_plus(lam, n), ne;
    if (static_cast<int>(nw.size()) > N || static_cast<int>(sw.size()) > N) return m;
    nw = pad(nw, N, Token::zero());
    sw = pad(sw, N, Token::plus());
    for (int j = 0; j < N; ++j) ne.push_back(j < k ? Token::plus() : Token::zero());
    m.ncols = m.nrows = N;
    Region& r = m.region;
    r.nvars = n;
    auto b_label = [&](const Token& t, int extra) {
        Label l = label_of(t);
        return rule == DiamondRule::TriangleLabels ? with_extra(l, extra) : l;
    };
    std::vector<int> up(N);  // edge ids entering row j from below, by i
    for (int i = 0; i < N; ++i) up[i] = r.add_boundary(label_of(se[i]));
    for (int j = 0; j < N; ++j) {
        int carry;
        if (rule == DiamondRule::TriangleLabels) {
            std::vector<Label> opts;
            for (int x = 0; x <= n; ++x) opts.push_back(b_label(sw[j], x));
            carry = r.add_choice_boundary(opts);
        } else {
            carry = r.add_boundary(label_of(sw[j]));
        }
        for (int i = 0; i < N; ++i) {
            Cell c;
            c.orientation = Orientation::Diamond;
            c.edges[SE] = up[i];
            c.edges[SW] = carry;
            c.edges[NW] = up[i] = j == N - 1 ? r.add_boundary(label_of(nw[i])) : r.add_edge();
            c.edges[NE] = carry = i == N - 1 ? r.add_boundary(b_label(ne[j], 0)) : r.add_edge();
            r.cells.push_back(c);
        }
    }
    return m;
}

mpz_class structure_coeff_via_tiling(const Comp& alpha, const Comp& lambda, const Comp& beta, const Perm& sigma,
                                     DiamondRule rule) {
    if (size(beta) != size(alpha) + size(lambda)) return 0;
    auto m = build_atom_schur_model(alpha, lambda, beta, sigma, rule);
    if (m.region.cells.empty()) return 0;
    Poly p = partition_function(m.region, m.tiles);
    if (p.is_zero()) return 0;
    if (p.nterms() != 1 || !p.homogeneous(0)) throw std::logic_error("atom-schur model produced a weighted tiling");
    return p.terms().begin()->second;
}

std::map<Comp, mpz_class> structure_coeffs_via_tiling(const Comp& alpha, const Comp& lambda, const Perm& sigma) {
    std::map<Comp, mpz_class> out;
    int kmax = max_part(alpha) + max_part(lambda);
    for (auto& b : compositions(size(alpha) + size(lambda), sigma.n())) {
        if (max_part(b) > kmax) continue;
        mpz_class v = structure_coeff_via_tiling(alpha, lambda, b, sigma);
        if (v != 0) out[b] = v;
    }
    return out;
}

}  // namespace atomlr
