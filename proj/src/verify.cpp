#include "atomlr/verify.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

#include "atomlr/skyline.hpp"

namespace atomlr {

Poly schur_via_ssyt(const Comp& lambda, int n) {
    if (static_cast<int>(lambda.size()) > n) {
        for (std::size_t i = n; i < lambda.size(); ++i)
            if (lambda[i] != 0) return Poly(n);
    }
    Comp lam(lambda.begin(), lambda.begin() + std::min<std::size_t>(lambda.size(), n));
    lam.resize(n, 0);
    if (!is_partition(lam)) throw std::invalid_argument("schur_via_ssyt: not a partition");
    std::vector<std::vector<int>> t(n);
    for (int r = 0; r < n; ++r) t[r].assign(lam[r], 0);
    Poly out(n);
    Exp e(n, 0);
    // fill row by row, left to right
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == n || lam[r] == 0) {
            out.add_term(e, 1);
            return;
        }
        if (c == lam[r]) return rec(r + 1, 0);
        int lo = std::max(c > 0 ? t[r][c - 1] : 1, r > 0 ? t[r - 1][c] + 1 : 1);
        for (int v = lo; v <= n; ++v) {
            t[r][c] = v;
            ++e[v - 1];
            rec(r, c + 1);
            --e[v - 1];
        }
    };
    rec(0, 0);
    return out;
}

nlohmann::json ExpansionResult::to_json() const {
    nlohmann::json c = nlohmann::json::array();
    for (auto& [b, v] : coefficients) c.push_back({{"beta", b}, {"coefficient", v.get_str()}});
    return {{"coefficients", c}, {"residual", residual.to_json()}};
}

namespace {

const Poly& cached_atom(const Comp& beta, const Perm& sigma) {
    static std::mutex mu;
    static std::map<std::pair<Comp, std::vector<int>>, Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(beta, sigma.images());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, atom_via_ssaf(beta, sigma)).first;
    return it->second;
}

}  // namespace

ExpansionResult expand_in_atom_basis(const Poly& p, const Perm& sigma) {
    int n = sigma.n();
    if (p.nvars() != n) throw std::invalid_argument("expand_in_atom_basis: variable count differs from sigma");
    ExpansionResult res;
    res.residual = Poly(n);
    if (p.is_zero()) return res;
    int d = 0;
    for (int v : p.terms().begin()->first) d += v;
    if (!p.homogeneous(d)) throw std::invalid_argument("expand_in_atom_basis: polynomial is not homogeneous");

    std::vector<Comp> basis = compositions(d, n);
    std::map<Exp, int> row;
    for (auto& m : basis) row.emplace(m, static_cast<int>(row.size()));
    int N = static_cast<int>(basis.size());
    // augmented matrix, columns are atoms
    std::vector<std::vector<mpq_class>> M(N, std::vector<mpq_class>(N + 1, 0));
    for (int j = 0; j < N; ++j)
        for (auto& [e, c] : cached_atom(basis[j], sigma).terms()) M[row.at(e)][j] = c;
    for (auto& [e, c] : p.terms()) M[row.at(e)][N] = c;

    for (int col = 0, r = 0; col < N; ++col, ++r) {
        int piv = r;
        while (piv < N && M[piv][col] == 0) ++piv;
        if (piv == N) throw std::runtime_error("expand_in_atom_basis: singular system at degree " + std::to_string(d));
        std::swap(M[piv], M[r]);
        mpq_class inv = 1 / M[r][col];
        for (int k = col; k <= N; ++k) M[r][k] *= inv;
        for (int i = 0; i < N; ++i) {
            if (i == r || M[i][col] == 0) continue;
            mpq_class f = M[i][col];
            for (int k = col; k <= N; ++k) M[i][k] -= f * M[r][k];
        }
    }
    Poly recon(n);
    for (int j = 0; j < N; ++j) {
        mpq_class v = M[j][N];
        if (v == 0) continue;
        if (v.get_den() != 1)
            throw std::runtime_error("expand_in_atom_basis: non-integral coefficient at " + comp_str(basis[j]));
        res.coefficients[basis[j]] = v.get_num();
        recon += cached_atom(basis[j], sigma).scaled(v.get_num());
    }
    res.residual = p - recon;
    if (!res.residual.is_zero()) throw std::runtime_error("expand_in_atom_basis: nonzero residual");
    return res;
}

std::map<Comp, mpz_class> structure_coeffs_oracle(const Comp& alpha, const Comp& lambda, const Perm& sigma) {
    int n = sigma.n();
    if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("structure_coeffs_oracle: alpha length");
    Poly prod = atom_via_ssaf(alpha, sigma) * schur_via_ssyt(lambda, n);
    auto res = expand_in_atom_basis(prod, sigma);
    for (auto& [b, v] : res.coefficients)
        if (v < 0)
            throw std::runtime_error("structure_coeffs_oracle: negative coefficient for alpha=" + comp_str(alpha) +
                                     " lambda=" + comp_str(lambda) + " sigma=" + sigma.str() + " beta=" + comp_str(b));
    return res.coefficients;
}

}  // namespace atomlr
