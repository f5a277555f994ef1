#pragma once
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "atomlr/core.hpp"
#include "atomlr/poly.hpp"

namespace atomlr {

// Schur polynomial from semistandard tableaux, independent of any tile data.
Poly schur_via_ssyt(const Comp& lambda, int n);

struct ExpansionResult {
    std::map<Comp, mpz_class> coefficients;  // nonzero entries only
    Poly residual;
    nlohmann::json to_json() const;
};

// Exact solve against the atoms A_beta^sigma, |beta| = deg p. Throws if p is not homogeneous,
// the system is singular or the solution is not integral.
ExpansionResult expand_in_atom_basis(const Poly& p, const Perm& sigma);

std::map<Comp, mpz_class> structure_coeffs_oracle(const Comp& alpha, const Comp& lambda, const Perm& sigma);

}  // namespace atomlr

#include "atomlr/triangles.hpp"

namespace atomlr {

// Tilings of a rows x cols block of diamonds with every boundary label free. Under triangle labels the
// SW extras are summed and the NE extras are 0, so dropping the extras is injective; equal counts with and
// without the banned pairs on top then mean the two rules admit the same tilings.
struct AdjacencyCase {
    int rows = 0, cols = 0;
    Perm sigma;
    mpz_class banned_pairs, triangle_labels, both;
    bool ok() const { return banned_pairs == triangle_labels && triangle_labels == both; }
};
AdjacencyCase compare_adjacency_rules(int rows, int cols, const Perm& sigma);

struct AdjacencyReport {
    int max_cells = 0, max_n = 0;
    std::vector<AdjacencyCase> cases;
    bool ok() const;
    nlohmann::json to_json() const;
};
AdjacencyReport verify_adjacency_equivalence(int max_cells, int max_n);

}  // namespace atomlr
