#include "atomlr/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace atomlr {

bool is_sigma_extendable(const Comp& beta, const Comp& alpha, const Perm& sigma) {
    int n = static_cast<int>(alpha.size());
    if (static_cast<int>(beta.size()) != n || sigma.n() != n)
        throw std::invalid_argument("is_sigma_extendable: length mismatch");
    for (int i = 0; i < n; ++i)
        if (alpha[i] < beta[i]) return false;
    for (int l = 0; l < n; ++l)
        for (int r = l + 1; r < n; ++r) {
            bool a_ge = alpha[l] >= alpha[r], b_ge = beta[l] >= beta[r];
            if (a_ge && b_ge && !(alpha[r] <= beta[l])) return false;
            if (!a_ge && !b_ge && !(alpha[l] < beta[r])) return false;
            if (a_ge && !b_ge && !(alpha[r] == beta[r] && sigma(l + 1) < sigma(r + 1))) return false;
            if (!a_ge && b_ge && !(alpha[l] == beta[l] && sigma(l + 1) > sigma(r + 1))) return false;
        }
    return true;
}

namespace {

// sigma_k for the rank of alpha, and the position s_k of its 1.
std::pair<Perm, int> local_sigma(const Comp& alpha, const Perm& sigma) {
    int la = static_cast<int>(alpha.size());
    if (la < 1 || la > sigma.n()) throw std::invalid_argument("covers: length arithmetic violated");
    Perm sk = sigma_chain(sigma, sigma.n() - la);
    return {sk, sk.inverse()(1)};
}

Comp insert_zero(const Comp& beta, int s) {
    Comp b = beta;
    b.insert(b.begin() + (s - 1), 0);
    return b;
}

}  // namespace

bool covers(const Comp& beta, const Comp& alpha, const Perm& sigma) {
    if (beta.size() + 1 != alpha.size()) throw std::invalid_argument("covers: length arithmetic violated");
    auto [sk, s] = local_sigma(alpha, sigma);
    return is_sigma_extendable(insert_zero(beta, s), alpha, sk);
}

namespace {

void box(const Comp& bound, std::size_t i, Comp& cur, std::vector<Comp>& out) {
    if (i == bound.size()) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= bound[i]; ++v) {
        cur[i] = v;
        box(bound, i + 1, cur, out);
    }
}

std::vector<Comp> below(const Comp& bound) {
    std::vector<Comp> out;
    Comp cur(bound.size(), 0);
    box(bound, 0, cur, out);
    return out;
}

}  // namespace

std::vector<Comp> lower_covers(const Comp& alpha, const Perm& sigma) {
    auto [sk, s] = local_sigma(alpha, sigma);
    Comp bound = alpha;
    bound.erase(bound.begin() + (s - 1));
    std::vector<Comp> out;
    for (auto& b : below(bound))
        if (is_sigma_extendable(insert_zero(b, s), alpha, sk)) out.push_back(b);
    return out;
}

std::vector<Piece> decompose(const Comp& alpha, const Perm& sigma) {
    std::vector<Piece> out;
    for (auto& b : below(alpha))
        if (is_sigma_extendable(b, alpha, sigma)) out.push_back({b, size(alpha) - size(b)});
    return out;
}

namespace {

// Branching: x_v^{|alpha|-|beta|} times the atom of beta in the remaining variables.
void chains(const Comp& alpha, const Perm& sigma, int v, Exp& e, Poly& acc) {
    if (alpha.empty()) {
        acc.add_term(e, 1);
        return;
    }
    for (auto& b : lower_covers(alpha, sigma)) {
        int d = size(alpha) - size(b);
        e[v] += d;
        chains(b, sigma, v + 1, e, acc);
        e[v] -= d;
    }
}

}  // namespace

Poly atom_via_chains(const Comp& alpha, const Perm& sigma) {
    int n = static_cast<int>(alpha.size());
    if (sigma.n() != n) throw std::invalid_argument("atom_via_chains: length mismatch");
    Poly p(n);
    Exp e(n, 0);
    chains(alpha, sigma, 0, e, p);
    return p;
}

nlohmann::json PosetInterval::to_json() const {
    nlohmann::json ns = nlohmann::json::array(), es = nlohmann::json::array();
    for (auto& c : nodes) ns.push_back({{"comp", c}, {"rank", c.size()}});
    for (auto& [a, b] : edges) es.push_back({a, b});
    return {{"nodes", ns}, {"edges", es}};
}

PosetInterval poset_interval(const Comp& alpha, const Perm& sigma) {
    std::map<Comp, int> id;
    PosetInterval P;
    std::vector<Comp> frontier{alpha};
    id[alpha] = 0;
    P.nodes.push_back(alpha);
    while (!frontier.empty()) {
        std::vector<Comp> next;
        for (auto& a : frontier) {
            if (a.empty()) continue;
            for (auto& b : lower_covers(a, sigma)) {
                auto [it, fresh] = id.try_emplace(b, static_cast<int>(P.nodes.size()));
                if (fresh) {
                    P.nodes.push_back(b);
                    next.push_back(b);
                }
                P.edges.push_back({it->second, id[a]});
            }
        }
        frontier = std::move(next);
    }
    return P;
}

}  // namespace atomlr
