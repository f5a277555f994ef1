#include "atomlr/poly.hpp"

#include <stdexcept>

namespace atomlr {

Poly Poly::constant(int nvars, const mpz_class& c) {
    Poly p(nvars);
    p.add_term(Exp(nvars, 0), c);
    return p;
}

Poly Poly::monomial(const Exp& e, const mpz_class& c) {
    Poly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Poly Poly::var(int nvars, int i) {
    Exp e(nvars, 0);
    e.at(i - 1) = 1;
    return monomial(e);
}

mpz_class Poly::coeff(const Exp& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? mpz_class(0) : it->second;
}

void Poly::check(const Poly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomials in different numbers of variables");
}

void Poly::add_term(const Exp& e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    check(o);
    for (auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check(o);
    for (auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    return r += o;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    return r -= o;
}

Poly Poly::operator*(const Poly& o) const {
    check(o);
    Poly r(n_);
    Exp e(n_);
    for (auto& [a, ca] : t_)
        for (auto& [b, cb] : o.t_) {
            for (int i = 0; i < n_; ++i) e[i] = a[i] + b[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly Poly::scaled(const mpz_class& c) const {
    Poly r(n_);
    if (c == 0) return r;
    for (auto& [e, x] : t_) r.t_.emplace(e, x * c);
    return r;
}

Poly Poly::specialize_first_to_zero() const {
    Poly r(n_ > 0 ? n_ - 1 : 0);
    for (auto& [e, c] : t_)
        if (e[0] == 0) r.add_term(Exp(e.begin() + 1, e.end()), c);
    return r;
}

Poly Poly::evaluate_first_zero_keep_vars() const {
    Poly r(n_);
    for (auto& [e, c] : t_)
        if (e[0] == 0) r.add_term(e, c);
    return r;
}

Poly Poly::permute_vars(const std::vector<int>& perm) const {
    Poly r(n_);
    Exp f(n_);
    for (auto& [e, c] : t_) {
        for (int i = 0; i < n_; ++i) f[perm[i] - 1] = e[i];
        r.add_term(f, c);
    }
    return r;
}

Poly Poly::with_nvars(int n) const {
    Poly r(n);
    for (auto& [e, c] : t_) {
        Exp f(n, 0);
        for (int i = 0; i < n_; ++i) {
            if (i >= n && e[i]) throw std::invalid_argument("with_nvars would drop a variable");
            if (i < n) f[i] = e[i];
        }
        r.add_term(f, c);
    }
    return r;
}

mpz_class Poly::eval_ones() const {
    mpz_class s = 0;
    for (auto& [e, c] : t_) s += c;
    return s;
}

bool Poly::homogeneous(int d) const {
    for (auto& [e, c] : t_) {
        int s = 0;
        for (int x : e) s += x;
        if (s != d) return false;
    }
    return true;
}

// Terms printed in decreasing lexicographic order of exponents.
std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool constant = true;
        for (int x : e) constant &= x == 0;
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (!e[i]) continue;
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        mpz_class a = abs(c);
        std::string coef = (a == 1 && !constant) ? "" : a.get_str();
        if (out.empty()) out += (c < 0 ? "-" : "");
        else out += (c < 0 ? " - " : " + ");
        out += coef + mono;
    }
    return out;
}

nlohmann::json Poly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : t_) terms.push_back({{"coeff", c.get_str()}, {"exp", e}});
    return {{"nvars", n_}, {"terms", terms}};
}

Poly Poly::from_json(const nlohmann::json& j) {
    Poly p(j.at("nvars").get<int>());
    for (auto& t : j.at("terms")) {
        auto& c = t.at("coeff");
        mpz_class v = c.is_string() ? mpz_class(c.get<std::string>()) : mpz_class(c.get<long>());
        p.add_term(t.at("exp").get<Exp>(), v);
    }
    return p;
}

Poly poly_add(const Poly& p, const Poly& q) { return p + q; }
Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }
Poly poly_scale(const Poly& p, const mpz_class& c) { return p.scaled(c); }
bool poly_equal(const Poly& p, const Poly& q) { return p == q; }

}  // namespace atomlr
