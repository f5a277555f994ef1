#include "atomlr/triangles.hpp"

#include <fstream>
#include <map>
#include <mutex>

namespace atomlr {

TileSet load_triangles(const std::string& sets, const Perm& sigma) {
    std::string path = tileset_path("triangles.json");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    nlohmann::json rows = nlohmann::json::array();
    for (auto& row : j.at("triangles"))
        if (sets.find(row.at("set").get<std::string>()) != std::string::npos) rows.push_back(row);
    TileSet ts = load_tileset(rows, sigma.n(), sigma);
    ts.name = j.value("name", "triangles") + ":" + sets;
    ts.version = j.value("version", 0);
    for (auto& t : ts.tiles)
        if (t.orientation != Orientation::UpTriangle && t.orientation != Orientation::DownTriangle)
            throw std::invalid_argument("triangle file holds a " + orientation_name(t.orientation) + " row");
    return ts;
}

namespace {

Weight times(Weight a, Weight b) {
    if (a == Weight::One) return b;
    if (b == Weight::One) return a;
    throw std::invalid_argument("glued tile would carry two weighted halves");
}

std::vector<int> of(const TileSet& tri, Orientation o) {
    std::vector<int> v;
    for (int t = 0; t < static_cast<int>(tri.tiles.size()); ++t)
        if (tri.tiles[t].orientation == o) v.push_back(t);
    return v;
}

class BannedPairs : public AdjacencyRule {
public:
    std::string name() const override { return "banned-pairs"; }
    // NE side: the upper half's drop colour; SW side: the lower half's pickup colour
    int summary(const Tile& a, int sa) const override {
        if (a.orientation != Orientation::Diamond) return 0;
        if (sa == NE) return a.aux / 256;
        if (sa == SW) return a.aux % 256;
        return 0;
    }
    bool allowed(int sum_a, int sa, const Tile& b, int sb) const override {
        if (b.orientation != Orientation::Diamond) return true;
        int drop = 0, pickup = 0;
        if (sa == NE && sb == SW) {
            drop = sum_a;
            pickup = b.aux % 256;
        } else if (sa == SW && sb == NE) {
            pickup = sum_a;
            drop = b.aux / 256;
        } else {
            return true;
        }
        return !(drop > 0 && pickup > 0 && drop < pickup);
    }
};

}  // namespace

Label with_extra(Label base, int extra) { return intern(label_name(base) + "#" + std::to_string(extra)); }

std::string rule_name(DiamondRule r) {
    switch (r) {
        case DiamondRule::None: return "none";
        case DiamondRule::BannedPairs: return "banned-pairs";
        case DiamondRule::TriangleLabels: return "triangle-labels";
    }
    return "?";
}

TileSet glue_right_sheared(const TileSet& tri) {
    TileSet ts;
    ts.name = tri.name + ":right-sheared";
    ts.version = tri.version;
    int pair = 0;
    for (int u : of(tri, Orientation::UpTriangle))
        for (int d : of(tri, Orientation::DownTriangle)) {
            const Tile &up = tri.tiles[u], &dn = tri.tiles[d];
            if (up.edges[B] != dn.edges[B]) continue;
            ++pair;
            if (up.aux > 0 && dn.aux > up.aux) continue;
            Tile t;
            t.orientation = Orientation::RightSheared;
            t.edges[S] = up.edges[H];
            t.edges[W] = up.edges[A];
            t.edges[N] = dn.edges[H];
            t.edges[E] = dn.edges[A];
            t.weight = times(up.weight, dn.weight);
            t.family = up.family + " / " + dn.family;
            t.origin = pair - 1;
            ts.tiles.push_back(t);
        }
    ts.build_index();
    return ts;
}

TileSet glue_diamonds(const TileSet& tri, int n, DiamondRule rule) {
    TileSet ts;
    ts.name = tri.name + ":diamond:" + rule_name(rule);
    ts.version = tri.version;
    int pair = 0;
    for (int d : of(tri, Orientation::DownTriangle))
        for (int u : of(tri, Orientation::UpTriangle)) {
            const Tile &lo = tri.tiles[d], &hi = tri.tiles[u];
            if (lo.edges[H] != hi.edges[H]) continue;
            Tile t;
            t.orientation = Orientation::Diamond;
            t.edges[SE] = lo.edges[A];
            t.edges[SW] = lo.edges[B];
            t.edges[NW] = hi.edges[A];
            t.edges[NE] = hi.edges[B];
            t.weight = times(lo.weight, hi.weight);
            t.family = lo.family + " / " + hi.family;
            t.origin = pair++;
            t.aux = hi.aux * 256 + lo.aux;
            if (rule != DiamondRule::TriangleLabels) {
                ts.tiles.push_back(t);
                continue;
            }
            t.edges[SW] = with_extra(lo.edges[B], lo.aux);
            int top = hi.aux > 0 ? hi.aux : n;
            Label ne = hi.edges[B];
            for (int x = 0; x <= top; ++x) {
                t.edges[NE] = with_extra(ne, x);
                ts.tiles.push_back(t);
            }
        }
    if (rule == DiamondRule::BannedPairs) ts.rule = std::make_shared<BannedPairs>();
    ts.build_index();
    return ts;
}

const TileSet& diamond_tiles(const Perm& sigma, DiamondRule rule) {
    static std::mutex m;
    static std::map<std::tuple<std::string, Perm, int>, TileSet> cache;
    std::lock_guard<std::mutex> g(m);
    auto key = std::make_tuple(tileset_dir(), sigma, static_cast<int>(rule));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, glue_diamonds(load_triangles("AB", sigma), sigma.n(), rule)).first;
    return it->second;
}

}  // namespace atomlr
