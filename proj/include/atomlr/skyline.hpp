#pragma once
#include <vector>

#include <json.hpp>

#include "atomlr/core.hpp"
#include "atomlr/poly.hpp"

namespace atomlr {

// cols[i] holds the entries of column i+1 from height 1 upward; the basement is sigma(i+1).
struct Filling {
    Comp shape;
    Perm basement;
    std::vector<std::vector<int>> cols;

    int at(int i, int j) const { return j == 0 ? basement(i) : cols[i - 1][j - 1]; }  // 1-based column
    Exp weight() const;
    bool operator==(const Filling& o) const { return shape == o.shape && basement == o.basement && cols == o.cols; }
    bool operator<(const Filling& o) const { return cols < o.cols; }
    nlohmann::json to_json() const;
};

bool check_filling(const Filling& f);
// Triples between columns l < r only (1-based), heights up to the current column lengths.
bool triples_ok(const Filling& f, int l, int r);
std::vector<Filling> enumerate_ssaf(const Comp& alpha, const Perm& sigma);
Poly atom_via_ssaf(const Comp& alpha, const Perm& sigma);

struct Deleted {
    Comp beta;
    Filling rest;
};
Deleted delete_one_cells(const Filling& f);

bool check_below_lemma(const Filling& f, int l, int r);

}  // namespace atomlr
