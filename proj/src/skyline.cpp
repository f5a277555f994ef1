#include "atomlr/skyline.hpp"

#include <algorithm>
#include <stdexcept>

namespace atomlr {

namespace {

bool coinversion(int a, int b, int c) { return std::min(a, c) <= b && b <= std::max(a, c); }

}  // namespace

Exp Filling::weight() const {
    Exp e(shape.size(), 0);
    for (auto& c : cols)
        for (int v : c) ++e[v - 1];
    return e;
}

nlohmann::json Filling::to_json() const {
    return {{"shape", shape}, {"basement", basement.images()}, {"columns", cols}};
}

bool triples_ok(const Filling& f, int l, int r) {
    int al = static_cast<int>(f.cols[l - 1].size()), ar = static_cast<int>(f.cols[r - 1].size());
    if (f.shape[l - 1] >= f.shape[r - 1]) {
        for (int i = 0; i + 1 <= std::min(ar, al); ++i)
            if (coinversion(f.at(l, i + 1), f.at(r, i + 1), f.at(l, i))) return false;
    } else {
        for (int i = 0; i <= al && i + 1 <= ar; ++i)
            if (coinversion(f.at(r, i + 1), f.at(l, i), f.at(r, i))) return false;
    }
    return true;
}

bool check_filling(const Filling& f) {
    int n = static_cast<int>(f.shape.size());
    if (f.basement.n() != n || static_cast<int>(f.cols.size()) != n)
        throw std::invalid_argument("check_filling: length mismatch");
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(f.cols[i - 1].size()) != f.shape[i - 1])
            throw std::invalid_argument("check_filling: column " + std::to_string(i) + " has wrong height");
        for (int v : f.cols[i - 1])
            if (v < 1 || v > n) throw std::invalid_argument("check_filling: entry " + std::to_string(v) + " out of range");
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < f.shape[i - 1]; ++j)
            if (f.at(i, j + 1) > f.at(i, j)) return false;
    for (int l = 1; l <= n; ++l)
        for (int r = l + 1; r <= n; ++r)
            if (!triples_ok(f, l, r)) return false;
    return true;
}

namespace {

struct Search {
    Filling f;
    int n;
    std::vector<Filling> out;

    // Fill column i bottom to top, then check triples against earlier columns.
    void column(int i) {
        if (i > n) {
            out.push_back(f);
            return;
        }
        cell(i, 1);
    }
    void cell(int i, int j) {
        if (j > f.shape[i - 1]) {
            for (int l = 1; l < i; ++l)
                if (!triples_ok(f, l, i)) return;
            column(i + 1);
            return;
        }
        int below = f.at(i, j - 1);
        for (int v = below; v >= 1; --v) {
            f.cols[i - 1].push_back(v);
            cell(i, j + 1);
            f.cols[i - 1].pop_back();
        }
    }
};

}  // namespace

std::vector<Filling> enumerate_ssaf(const Comp& alpha, const Perm& sigma) {
    if (alpha.size() != static_cast<std::size_t>(sigma.n())) throw std::invalid_argument("enumerate_ssaf: length mismatch");
    Search s{{alpha, sigma, std::vector<std::vector<int>>(alpha.size())}, sigma.n(), {}};
    s.column(1);
    return s.out;
}

Poly atom_via_ssaf(const Comp& alpha, const Perm& sigma) {
    Poly p(static_cast<int>(alpha.size()));
    for (auto& f : enumerate_ssaf(alpha, sigma)) p.add_term(f.weight(), 1);
    return p;
}

Deleted delete_one_cells(const Filling& f) {
    Deleted d{Comp(f.shape.size(), 0), f};
    for (std::size_t i = 0; i < f.cols.size(); ++i) {
        auto& c = d.rest.cols[i];
        // 1-cells sit on top of their column by the descent condition
        auto first_one = std::find(c.begin(), c.end(), 1);
        if (!std::all_of(first_one, c.end(), [](int v) { return v == 1; }))
            throw std::logic_error("delete_one_cells: 1-cell below a larger entry");
        c.erase(first_one, c.end());
        d.beta[i] = static_cast<int>(c.size());
    }
    d.rest.shape = d.beta;
    return d;
}

bool check_below_lemma(const Filling& f, int l, int r) {
    int al = f.shape[l - 1], ar = f.shape[r - 1];
    if (al >= ar) {
        for (int a = 0; a <= ar; ++a) {
            if (f.at(l, a) < f.at(r, a))
                for (int i = 0; i <= a - 1; ++i)
                    if (!(f.at(l, i) < f.at(r, i + 1))) return false;
            if (f.at(l, a) > f.at(r, a))
                for (int i = a; i <= ar; ++i)
                    if (!(f.at(l, i) > f.at(r, i))) return false;
        }
    } else {
        for (int a = 0; a <= al; ++a) {
            if (f.at(l, a) < f.at(r, a))
                for (int i = a; i <= al; ++i)
                    if (!(f.at(l, i) < f.at(r, i + 1))) return false;
            if (f.at(l, a) > f.at(r, a))
                for (int i = 0; i <= a; ++i)
                    if (!(f.at(l, i) > f.at(r, i))) return false;
        }
    }
    return true;
}

}  // namespace atomlr
