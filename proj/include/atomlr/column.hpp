#pragma once
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "atomlr/models.hpp"

namespace atomlr {

// Right-sheared tiles glued from triangle sets A, B and C, the left-sheared tiles of left_tiles.json and the
// diamonds, in one set. Only diamonds are subject to the banned pairs.
const TileSet& column_tiles(const Perm& sigma);
const TileSet& left_sheared_tiles(const Perm& sigma);

// Labels around a column hexagon. s and v are the bottom and top H sides, t_1..t_m the lower-right "/"
// sides and q_1..q_m the upper-left ones (both bottom to top), u the upper-right and r the lower-left "\\".
struct ColumnBoundary {
    std::vector<Label> q, t;
    Label r = 0, s = 0, u = 0, v = 0;

    int m() const { return static_cast<int>(q.size()); }
    std::vector<Label> key() const;  // s, t.., u, v, q.., r
    static ColumnBoundary from_key(const std::vector<Label>& k);
    std::string str() const;
    nlohmann::json to_json() const;
};

ColumnBoundary parse_column_boundary(const std::string& q, const std::string& r, const std::string& s,
                                     const std::string& t, const std::string& u, const std::string& v);

// lhs: right-sheared column with diamonds on its left and a left-sheared tile on top.
// rhs: left-sheared tile at the bottom, right-sheared column above it and diamonds on its right.
// Both are in the single variable x_c.
struct ColumnPair {
    ModelInstance lhs, rhs;
};
ColumnPair build_column_pair(const ColumnBoundary& b, const Perm& sigma);

struct ColumnFailure {
    ColumnBoundary boundary;
    Poly lhs, rhs;
};

struct ColumnSweepReport {
    std::string mode;
    int m = 0, n = 0;
    Perm sigma;
    bool restricted = true;
    long long tested = 0;   // boundary assignments covered
    long long nonzero = 0;  // assignments with a tiling on either side
    std::vector<ColumnFailure> failures;

    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

// Every boundary, symbolic in x_c. Restricted: r and u in {0,+}.
ColumnSweepReport verify_column_lemma(int m, const Perm& sigma, bool restricted = true);
// The same comparison with x_c = 0.
ColumnSweepReport verify_column_trivial(int m, const Perm& sigma);
// m = 1: the restricted hexagons, and the hexagons with q_1 = t_1 = 0 and r, u free.
std::vector<ColumnSweepReport> verify_unit_hexagons(const Perm& sigma);

struct MinlinesReport {
    int m = 0, n = 0;
    Perm sigma;
    struct Class {
        long long tested = 0, nonzero = 0, failures = 0;
    };
    std::map<int, Class> classes;  // by number of separate blue lines
    long long reused_colour = 0;   // boundaries where a colour enters or leaves twice
    long long reused_colour_tiled = 0;

    bool ok() const;
    nlohmann::json to_json() const;
};
MinlinesReport verify_minlines_cases(int m, const Perm& sigma);

// Drop one tile at a time and rerun the restricted sweeps for m = 1..max_m.
struct TileRemoval {
    Tile tile;
    int broken_at = 0;  // smallest m with a failure, 0 if the lemma survives
};
std::vector<TileRemoval> check_tile_minimality(int max_m, const Perm& sigma);

}  // namespace atomlr
