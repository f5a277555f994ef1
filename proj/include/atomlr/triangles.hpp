#pragma once
#include <string>
#include <vector>

#include "atomlr/tiling.hpp"

namespace atomlr {

// Triangle rows from the triangle file restricted to the given sets, e.g. "AB".
TileSet load_triangles(const std::string& sets, const Perm& sigma);

// Up-triangle below-left of a down-triangle, glued along B. A drop of colour j may only meet a
// pickup of colour i <= j across the cut, which is what the extra B labels enforce.
TileSet glue_right_sheared(const TileSet& tri);

enum class DiamondRule { None, BannedPairs, TriangleLabels };
std::string rule_name(DiamondRule r);

// Down-triangle below an up-triangle, glued along H. With TriangleLabels the B sides carry the
// extra label: SW shows the pickup colour of the lower half (0 if none), NE any value the upper
// half accepts, 0..drop colour for a drop and 0..n otherwise.
TileSet glue_diamonds(const TileSet& tri, int n, DiamondRule rule);

// Extra labels on a B edge: "<label>#<extra>".
Label with_extra(Label base, int extra);

// Diamonds from sets A and B, cached per (data dir, sigma, rule).
const TileSet& diamond_tiles(const Perm& sigma, DiamondRule rule);

}  // namespace atomlr
