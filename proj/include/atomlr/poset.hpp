#pragma once
#include <utility>
#include <vector>

#include <json.hpp>

#include "atomlr/core.hpp"
#include "atomlr/poly.hpp"

namespace atomlr {

bool is_sigma_extendable(const Comp& beta, const Comp& alpha, const Perm& sigma);
// beta covers-below alpha in the order attached to sigma (len beta = len alpha - 1 <= n - 1).
bool covers(const Comp& beta, const Comp& alpha, const Perm& sigma);
// All beta with beta covered by alpha, generated by the box sweep.
std::vector<Comp> lower_covers(const Comp& alpha, const Perm& sigma);

struct Piece {
    Comp beta;
    int x1_exponent;
};
std::vector<Piece> decompose(const Comp& alpha, const Perm& sigma);

Poly atom_via_chains(const Comp& alpha, const Perm& sigma);

struct PosetInterval {
    std::vector<Comp> nodes;                 // sorted by rank, descending
    std::vector<std::pair<int, int>> edges;  // (lower, upper) node indices
    nlohmann::json to_json() const;
};
PosetInterval poset_interval(const Comp& alpha, const Perm& sigma);

}  // namespace atomlr
