#include "atomlr/column.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace atomlr {

const TileSet& left_sheared_tiles(const Perm& sigma) {
    static std::mutex m;
    static std::map<std::pair<std::string, Perm>, TileSet> cache;
    std::lock_guard<std::mutex> g(m);
    auto key = std::make_pair(tileset_dir(), sigma);
    auto it = cache.find(key);
    if (it == cache.end()) {
        TileSet ts = load_tileset_file(tileset_path("left_tiles.json"), sigma.n(), sigma);
        for (auto& t : ts.tiles)
            if (t.orientation != Orientation::LeftSheared)
                throw std::invalid_argument("left_tiles.json holds a " + orientation_name(t.orientation) + " tile");
        it = cache.emplace(key, std::move(ts)).first;
    }
    return it->second;
}

const TileSet& column_tiles(const Perm& sigma) {
    static std::mutex m;
    static std::map<std::pair<std::string, Perm>, TileSet> cache;
    const TileSet& left = left_sheared_tiles(sigma);
    const TileSet& dia = diamond_tiles(sigma, DiamondRule::BannedPairs);
    std::lock_guard<std::mutex> g(m);
    auto key = std::make_pair(tileset_dir(), sigma);
    auto it = cache.find(key);
    if (it == cache.end()) {
        TileSet ts = glue_right_sheared(load_triangles("ABC", sigma));
        ts.name = "column";
        ts.tiles.insert(ts.tiles.end(), left.tiles.begin(), left.tiles.end());
        ts.tiles.insert(ts.tiles.end(), dia.tiles.begin(), dia.tiles.end());
        ts.rule = dia.rule;
        ts.build_index();
        it = cache.emplace(key, std::move(ts)).first;
    }
    return it->second;
}

std::vector<Label> ColumnBoundary::key() const {
    std::vector<Label> k{s};
    k.insert(k.end(), t.begin(), t.end());
    k.push_back(u);
    k.push_back(v);
    k.insert(k.end(), q.begin(), q.end());
    k.push_back(r);
    return k;
}

ColumnBoundary ColumnBoundary::from_key(const std::vector<Label>& k) {
    int m = (static_cast<int>(k.size()) - 4) / 2;
    ColumnBoundary b;
    b.s = k[0];
    b.t.assign(k.begin() + 1, k.begin() + 1 + m);
    b.u = k[1 + m];
    b.v = k[2 + m];
    b.q.assign(k.begin() + 3 + m, k.begin() + 3 + 2 * m);
    b.r = k[3 + 2 * m];
    return b;
}

namespace {

std::string join(const std::vector<Label>& ls) {
    std::string out;
    for (std::size_t i = 0; i < ls.size(); ++i) out += (i ? "," : "") + label_name(ls[i]);
    return out;
}

std::vector<Label> split(const std::string& s) {
    std::vector<Label> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(intern(tok));
    return out;
}

}  // namespace

std::string ColumnBoundary::str() const {
    return "q=" + join(q) + " r=" + label_name(r) + " s=" + label_name(s) + " t=" + join(t) + " u=" + label_name(u) +
           " v=" + label_name(v);
}

nlohmann::json ColumnBoundary::to_json() const {
    auto names = [](const std::vector<Label>& ls) {
        std::vector<std::string> v;
        for (auto l : ls) v.push_back(label_name(l));
        return v;
    };
    nlohmann::json j;
    j["q"] = names(q);
    j["r"] = label_name(r);
    j["s"] = label_name(s);
    j["t"] = names(t);
    j["u"] = label_name(u);
    j["v"] = label_name(v);
    return j;
}

ColumnBoundary parse_column_boundary(const std::string& q, const std::string& r, const std::string& s,
                                     const std::string& t, const std::string& u, const std::string& v) {
    ColumnBoundary b;
    b.q = split(q);
    b.t = split(t);
    if (b.q.empty() || b.q.size() != b.t.size()) throw std::invalid_argument("q and t must have the same length m >= 1");
    b.r = intern(r);
    b.s = intern(s);
    b.u = intern(u);
    b.v = intern(v);
    return b;
}

namespace {

// Boundary positions in key order; each is fixed or summed over a list of labels.
using Slots = std::vector<std::vector<Label>>;

struct Hexagon {
    Region region;
    std::vector<std::pair<int, int>> where;  // per key position: (cell, side)
};

Hexagon hexagon(int m, bool lhs, const Slots& slots) {
    Hexagon hx;
    Region& r = hx.region;
    r.nvars = 1;
    hx.where.assign(2 * m + 4, {-1, -1});
    auto bnd = [&](int pos) {
        return slots[pos].size() == 1 ? r.add_boundary(slots[pos][0]) : r.add_choice_boundary(slots[pos]);
    };
    const int S_ = 0, U_ = m + 1, V_ = m + 2, R_ = 2 * m + 3;
    auto T_ = [&](int k) { return 1 + k; };
    auto Q_ = [&](int k) { return m + 3 + k; };
    auto cell = [&](Orientation o, std::array<int, 4> e, int column) {
        Cell c;
        c.orientation = o;
        c.edges = e;
        c.column = column;
        r.cells.push_back(c);
        return static_cast<int>(r.cells.size()) - 1;
    };
    if (lhs) {
        int below = bnd(S_), carry = bnd(R_);
        for (int k = 0; k < m; ++k) {
            int w = r.add_edge(), n = r.add_edge(), ne = r.add_edge();
            int e = bnd(T_(k)), nw = bnd(Q_(k));
            std::array<int, 4> rs{};
            rs[S] = below, rs[E] = e, rs[N] = n, rs[W] = w;
            int rc = cell(Orientation::RightSheared, rs, 1);
            std::array<int, 4> ds{};
            ds[SE] = w, ds[SW] = carry, ds[NW] = nw, ds[NE] = ne;
            int dc = cell(Orientation::Diamond, ds, 0);
            if (k == 0) hx.where[S_] = {rc, S}, hx.where[R_] = {dc, SW};
            hx.where[T_(k)] = {rc, E};
            hx.where[Q_(k)] = {dc, NW};
            below = n;
            carry = ne;
        }
        int top = bnd(V_), ue = bnd(U_);
        std::array<int, 4> ls{};
        ls[S] = below, ls[W] = carry, ls[N] = top, ls[E] = ue;
        int lc = cell(Orientation::LeftSheared, ls, 1);
        hx.where[V_] = {lc, N};
        hx.where[U_] = {lc, E};
    } else {
        int bottom = bnd(S_), rw = bnd(R_), up = r.add_edge(), carry = r.add_edge();
        std::array<int, 4> ls{};
        ls[S] = bottom, ls[W] = rw, ls[N] = up, ls[E] = carry;
        int lc = cell(Orientation::LeftSheared, ls, 1);
        hx.where[S_] = {lc, S};
        hx.where[R_] = {lc, W};
        for (int k = 0; k < m; ++k) {
            int w = bnd(Q_(k)), e = r.add_edge();
            int n = k == m - 1 ? bnd(V_) : r.add_edge();
            std::array<int, 4> rs{};
            rs[S] = up, rs[E] = e, rs[N] = n, rs[W] = w;
            int rc = cell(Orientation::RightSheared, rs, 1);
            int se = bnd(T_(k));
            int ne = k == m - 1 ? bnd(U_) : r.add_edge();
            std::array<int, 4> ds{};
            ds[SE] = se, ds[SW] = carry, ds[NW] = e, ds[NE] = ne;
            int dc = cell(Orientation::Diamond, ds, 0);
            hx.where[Q_(k)] = {rc, W};
            hx.where[T_(k)] = {dc, SE};
            if (k == m - 1) hx.where[V_] = {rc, N}, hx.where[U_] = {dc, NE};
            up = n;
            carry = ne;
        }
    }
    return hx;
}

Slots fixed_slots(const ColumnBoundary& b) {
    Slots s;
    for (Label l : b.key()) s.push_back({l});
    return s;
}

struct Alphabets {
    std::vector<Label> h, slash, back;
};

Alphabets alphabets(const TileSet& ts) {
    std::set<Label> h, slash, back;
    for (auto& t : ts.tiles) {
        if (t.orientation == Orientation::RightSheared) {
            h.insert(t.edges[S]), h.insert(t.edges[N]);
            slash.insert(t.edges[W]), slash.insert(t.edges[E]);
        } else if (t.orientation == Orientation::LeftSheared) {
            h.insert(t.edges[S]), h.insert(t.edges[N]);
            back.insert(t.edges[W]), back.insert(t.edges[E]);
        } else if (t.orientation == Orientation::Diamond) {
            slash.insert(t.edges[SE]), slash.insert(t.edges[NW]);
            back.insert(t.edges[SW]), back.insert(t.edges[NE]);
        }
    }
    return {{h.begin(), h.end()}, {slash.begin(), slash.end()}, {back.begin(), back.end()}};
}

using SideTable = std::map<std::vector<Label>, Poly>;

SideTable side_table(int m, bool lhs, const Slots& slots, const TileSet& ts) {
    Hexagon hx = hexagon(m, lhs, slots);
    SideTable out;
    for_each_tiling(hx.region, ts, [&](const Tiling& t) {
        std::vector<Label> k;
        for (auto [c, s] : hx.where) k.push_back(ts.tiles[t[c]].edges[s]);
        Poly w = tiling_weight(hx.region, ts, t);
        auto [it, fresh] = out.try_emplace(k, w);
        if (!fresh) it->second += w;
        return true;
    });
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::vector<Label> zero_plus() { return {intern("0"), intern("+")}; }

Slots sweep_slots(int m, const Alphabets& a, bool restricted) {
    Slots s;
    s.push_back(a.h);
    for (int k = 0; k < m; ++k) s.push_back(a.slash);
    s.push_back(restricted ? zero_plus() : a.back);
    s.push_back(a.h);
    for (int k = 0; k < m; ++k) s.push_back(a.slash);
    s.push_back(restricted ? zero_plus() : a.back);
    return s;
}

long long product(const Slots& s) {
    long long p = 1;
    for (auto& v : s) p *= static_cast<long long>(v.size());
    return p;
}

Poly at_zero(const Poly& p) {
    Poly out(p.nvars());
    mpz_class c = p.coeff(Exp(p.nvars(), 0));
    if (c != 0) out.add_term(Exp(p.nvars(), 0), c);
    return out;
}

ColumnSweepReport compare(const std::string& mode, int m, const Perm& sigma, bool restricted, const Slots& slots,
                          bool xc_zero, const TileSet& ts) {
    SideTable lhs = side_table(m, true, slots, ts), rhs = side_table(m, false, slots, ts);
    ColumnSweepReport rep;
    rep.mode = mode;
    rep.m = m;
    rep.n = sigma.n();
    rep.sigma = sigma;
    rep.restricted = restricted;
    rep.tested = product(slots);
    std::set<std::vector<Label>> keys;
    for (auto& [k, p] : lhs) keys.insert(k);
    for (auto& [k, p] : rhs) keys.insert(k);
    for (auto& k : keys) {
        Poly a = lhs.count(k) ? lhs.at(k) : Poly(1), b = rhs.count(k) ? rhs.at(k) : Poly(1);
        if (xc_zero) a = at_zero(a), b = at_zero(b);
        if (a.is_zero() && b.is_zero()) continue;
        ++rep.nonzero;
        if (a != b) rep.failures.push_back({ColumnBoundary::from_key(k), a, b});
    }
    return rep;
}

}  // namespace

ColumnPair build_column_pair(const ColumnBoundary& b, const Perm& sigma) {
    int m = b.m();
    if (m < 1 || static_cast<int>(b.t.size()) != m) throw std::invalid_argument("q and t must have the same length m >= 1");
    const TileSet& ts = column_tiles(sigma);
    ColumnPair p;
    for (bool lhs : {true, false}) {
        ModelInstance& mi = lhs ? p.lhs : p.rhs;
        mi.descriptor = lhs ? "column-lhs" : "column-rhs";
        mi.sigma = sigma;
        mi.tiles = ts;
        mi.region = hexagon(m, lhs, fixed_slots(b)).region;
    }
    return p;
}

nlohmann::json ColumnSweepReport::to_json() const {
    nlohmann::json j;
    j["sweep"] = {{"mode", mode}, {"m", m}, {"n", n}, {"sigma", sigma.images()}, {"restricted", restricted}};
    j["tested"] = tested;
    j["nonzero"] = nonzero;
    j["failures"] = nlohmann::json::array();
    for (auto& f : failures) {
        nlohmann::json x = f.boundary.to_json();
        x["lhs"] = f.lhs.str();
        x["rhs"] = f.rhs.str();
        j["failures"].push_back(x);
    }
    return j;
}

ColumnSweepReport verify_column_lemma(int m, const Perm& sigma, bool restricted) {
    Slots slots = sweep_slots(m, alphabets(column_tiles(sigma)), restricted);
    return compare(restricted ? "restricted" : "unrestricted", m, sigma, restricted, slots, false, column_tiles(sigma));
}

ColumnSweepReport verify_column_trivial(int m, const Perm& sigma) {
    Slots slots = sweep_slots(m, alphabets(column_tiles(sigma)), true);
    return compare("x_c=0", m, sigma, true, slots, true, column_tiles(sigma));
}

std::vector<ColumnSweepReport> verify_unit_hexagons(const Perm& sigma) {
    Alphabets a = alphabets(column_tiles(sigma));
    std::vector<ColumnSweepReport> out;
    out.push_back(compare("hexagon", 1, sigma, true, sweep_slots(1, a, true), false, column_tiles(sigma)));
    Slots s = sweep_slots(1, a, false);
    s[1] = s[4] = {intern("0")};  // t_1 = q_1 = 0
    out.push_back(compare("hexagon q=t=0", 1, sigma, false, s, false, column_tiles(sigma)));
    return out;
}

// Boundaries reusing a colour never arise inside a model, so tilings there are only reported.
bool MinlinesReport::ok() const {
    for (auto& [k, c] : classes)
        if (c.failures) return false;
    return true;
}

nlohmann::json MinlinesReport::to_json() const {
    nlohmann::json j;
    j["sweep"] = {{"mode", "minlines"}, {"m", m}, {"n", n}, {"sigma", sigma.images()}};
    j["classes"] = nlohmann::json::array();
    for (auto& [k, c] : classes)
        j["classes"].push_back({{"lines", k}, {"tested", c.tested}, {"nonzero", c.nonzero}, {"failures", c.failures}});
    j["reused_colour"] = reused_colour;
    j["reused_colour_tiled"] = reused_colour_tiled;
    return j;
}

MinlinesReport verify_minlines_cases(int m, const Perm& sigma) {
    const TileSet& ts = column_tiles(sigma);
    Slots slots = sweep_slots(m, alphabets(ts), true);
    SideTable lhs = side_table(m, true, slots, ts), rhs = side_table(m, false, slots, ts);
    MinlinesReport rep;
    rep.m = m;
    rep.n = sigma.n();
    rep.sigma = sigma;
    auto colour = [](Label l) { return Token::parse(label_name(l)).colour_of(); };
    // entries are s, t_1..t_m; exits v, q_1..q_m
    auto classify = [&](const std::vector<Label>& k, int& lines, bool& reused) {
        std::vector<int> in, out;
        for (int i = 0; i <= m; ++i) in.push_back(colour(k[i]));
        out.push_back(colour(k[m + 2]));
        for (int i = 0; i < m; ++i) out.push_back(colour(k[m + 3 + i]));
        lines = 0;
        reused = false;
        for (auto* side : {&in, &out}) {
            std::set<int> seen;
            for (int c : *side)
                if (c && !seen.insert(c).second) reused = true;
        }
        for (int c : in) lines += c != 0;
    };
    std::vector<std::size_t> idx(slots.size(), 0);
    std::vector<Label> k(slots.size());
    for (;;) {
        for (std::size_t i = 0; i < slots.size(); ++i) k[i] = slots[i][idx[i]];
        int lines;
        bool reused;
        classify(k, lines, reused);
        auto& c = rep.classes[lines];
        ++c.tested;
        auto a = lhs.find(k), b = rhs.find(k);
        bool any = a != lhs.end() || b != rhs.end();
        if (reused) {
            ++rep.reused_colour;
            if (any) ++rep.reused_colour_tiled;
        }
        if (any) {
            ++c.nonzero;
            Poly pa = a != lhs.end() ? a->second : Poly(1), pb = b != rhs.end() ? b->second : Poly(1);
            if (pa != pb) ++c.failures;
        }
        std::size_t i = 0;
        while (i < slots.size() && ++idx[i] == slots[i].size()) idx[i++] = 0;
        if (i == slots.size()) break;
    }
    return rep;
}

std::vector<TileRemoval> check_tile_minimality(int max_m, const Perm& sigma) {
    const TileSet& full = column_tiles(sigma);
    Alphabets a = alphabets(full);
    std::vector<TileRemoval> out;
    for (std::size_t i = 0; i < full.tiles.size(); ++i) {
        TileSet ts = full;
        ts.tiles.erase(ts.tiles.begin() + static_cast<std::ptrdiff_t>(i));
        ts.build_index();
        TileRemoval r{full.tiles[i], 0};
        for (int m = 1; m <= max_m && !r.broken_at; ++m)
            if (!compare("restricted", m, sigma, true, sweep_slots(m, a, true), false, ts).ok()) r.broken_at = m;
        out.push_back(r);
    }
    return out;
}

}  // namespace atomlr
