#pragma once
#include <map>
#include <set>
#include <string>
#include <vector>

#include "atomlr/core.hpp"
#include "atomlr/poly.hpp"
#include "atomlr/skyline.hpp"
#include "atomlr/tiling.hpp"
#include "atomlr/triangles.hpp"

namespace atomlr {

struct ModelInstance {
    std::string descriptor;
    Region region;
    TileSet tiles;
    Perm sigma;
    int ncols = 0, nrows = 0;  // grid models only
};

const TileSet& atom_tiles(const Perm& sigma);  // cached per sigma
const TileSet& schur_tiles();

// Grid of n columns by H rows of right-sheared cells, columns left to right, cells bottom to top.
// Cell (c,h) has index (c-1)*H+h.
ModelInstance build_atom_model(const Comp& alpha, const Perm& sigma);
Poly atom_via_tiling(const Comp& alpha, const Perm& sigma);

ModelInstance build_schur_model(const Comp& lambda, int n);
Poly schur_via_tiling(const Comp& lambda, int n);

// Labels on the vertical edges between columns c and c+1, c = 0..n, bottom to top.
std::vector<BString> intermediate_verticals(const ModelInstance& m, const Tiling& t);

// Column 1 of the atom model, read off its right side.
std::set<Comp> first_column_betas(const Comp& alpha, const Perm& sigma);

Filling tiling_to_ssaf(const ModelInstance& m, const Tiling& t, const Comp& alpha);

// N x N diamonds with N = n + max(beta). Cell (j,i) has index j*N+i; its SE side continues the
// NW side of (j-1,i) and its SW side the NE side of (j,i-1). Boundaries: SE beta*, NW alpha* padded
// with 0, SW lambda+ padded with +, NE +^k 0^n. Returns an empty region when the strings do not fit.
ModelInstance build_atom_schur_model(const Comp& alpha, const Comp& lambda, const Comp& beta, const Perm& sigma,
                                     DiamondRule rule = DiamondRule::BannedPairs);
mpz_class structure_coeff_via_tiling(const Comp& alpha, const Comp& lambda, const Comp& beta, const Perm& sigma,
                                     DiamondRule rule = DiamondRule::BannedPairs);
// All beta with |beta| = |alpha|+|lambda| and max(beta) <= max(alpha)+max(lambda).
std::map<Comp, mpz_class> structure_coeffs_via_tiling(const Comp& alpha, const Comp& lambda, const Perm& sigma);

}  // namespace atomlr

namespace atomlr {

// Prism configurations with k = max(alpha) + max(lambda), N = n + k.
// lhs: the atom model for alpha beside the Schur model for lambda (disjoint, so the weights multiply).
// rhs: an N x N diamond region whose SE side is glued to the left side of an n x N atom grid; the shared
// edges range over every string, so the sum over beta is taken by the tiling itself.
struct PrismPair {
    ModelInstance lhs, rhs;
};
PrismPair build_prisms(const Comp& alpha, const Comp& lambda, const Perm& sigma);

}  // namespace atomlr
