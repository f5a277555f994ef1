#pragma once
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "atomlr/core.hpp"
#include "atomlr/poly.hpp"

namespace atomlr {

// Edge labels are interned strings ("0", "+", "3", "3+", "2|4", ...).
using Label = int;
Label intern(const std::string& s);
const std::string& label_name(Label l);
Label label_of(const Token& t);

// Triangles are the halves rhombi are cut into; their sides are H (horizontal), A ("/") and B ("\\").
enum class Orientation { RightSheared, LeftSheared, Diamond, UpTriangle, DownTriangle };
Orientation parse_orientation(const std::string& s);
std::string orientation_name(Orientation o);

// Sides are indexed 0..3. Sheared tiles use S,E,N,W; diamonds use SE,SW,NW,NE.
inline constexpr int S = 0, E = 1, N = 2, W = 3;
inline constexpr int SE = 0, SW = 1, NW = 2, NE = 3;
inline constexpr int H = 0, A = 1, B = 2;
int sides_of(Orientation o);  // 3 for triangles, else 4
int parse_side(Orientation o, const std::string& s);
std::string side_name(Orientation o, int side);

enum class Weight { One, X, MinusX };

struct Tile {
    Orientation orientation = Orientation::RightSheared;
    std::array<Label, 4> edges{};
    Weight weight = Weight::One;
    std::string family;  // provenance of the generating row
    int aux = 0;         // rule data, e.g. the colour a triangle turns
    int origin = -1;     // for glued tiles: index of the generating pair
};

class AdjacencyRule;

struct TileSet {
    std::string name;
    int version = 0;
    std::vector<Tile> tiles;
    std::shared_ptr<const AdjacencyRule> rule;  // null: labels only

    // Tiles indexed by orientation and by the label on each side.
    void build_index();
    const std::vector<int>& with(Orientation o, int side, Label l) const;
    const std::vector<int>& all_of(Orientation o) const;

private:
    std::map<std::tuple<int, int, Label>, std::vector<int>> by_side_;
    std::map<int, std::vector<int>> by_orientation_;
};

// A rule between two cells sharing an edge. The cell placed first is reduced to summary(tile, side),
// so the sweep only has to remember a small key per open edge.
class AdjacencyRule {
public:
    virtual ~AdjacencyRule() = default;
    virtual std::string name() const = 0;
    virtual int summary(const Tile& a, int sa) const = 0;
    virtual bool allowed(int summary_a, int sa, const Tile& b, int sb) const = 0;
};

// Directory holding tile-set files: $ATOMLR_TILESETS, else the shipped data directory.
std::string tileset_dir();
std::string tileset_path(const std::string& file);

// Expands the parametric families of a tile-set file for colours 1..ncolours.
TileSet load_tileset(const nlohmann::json& def, int ncolours, const Perm& sigma);
TileSet load_tileset_file(const std::string& path, int ncolours, const Perm& sigma);

struct Cell {
    Orientation orientation = Orientation::RightSheared;
    std::array<int, 4> edges{};  // edge ids
    int column = 0;              // 1-based, 0 if weights never depend on it
};

struct Region {
    int nvars = 0;
    std::vector<Cell> cells;  // evaluated in this order
    std::vector<std::optional<Label>> boundary;  // per edge id; set for exterior edges
    std::map<int, std::vector<Label>> choices;   // exterior edges summed over a label set

    int add_edge() {
        boundary.emplace_back();
        return static_cast<int>(boundary.size()) - 1;
    }
    int add_boundary(Label l) {
        boundary.emplace_back(l);
        return static_cast<int>(boundary.size()) - 1;
    }
    int add_choice_boundary(std::vector<Label> ls) {
        int e = add_edge();
        choices[e] = std::move(ls);
        return e;
    }
    bool is_choice(int e) const { return choices.count(e) > 0; }
    void validate() const;
};

using Tiling = std::vector<int>;  // tile index per cell

Poly partition_function(const Region& r, const TileSet& ts);
std::vector<Tiling> enumerate_tilings(const Region& r, const TileSet& ts, std::size_t limit = SIZE_MAX);
void for_each_tiling(const Region& r, const TileSet& ts, const std::function<bool(const Tiling&)>& visit);
Poly tiling_weight(const Region& r, const TileSet& ts, const Tiling& t);

}  // namespace atomlr
