#pragma once
#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace atomlr {

using Exp = std::vector<int>;

// Sparse polynomial over Z in x1..xn; zero coefficients are never stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : n_(nvars) {}
    static Poly constant(int nvars, const mpz_class& c);
    static Poly monomial(const Exp& e, const mpz_class& c = 1);
    static Poly var(int nvars, int i);  // x_i, 1-based

    int nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t nterms() const { return t_.size(); }
    const std::map<Exp, mpz_class>& terms() const { return t_; }
    mpz_class coeff(const Exp& e) const;

    void add_term(const Exp& e, const mpz_class& c);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const mpz_class& c) const;
    bool operator==(const Poly& o) const { return n_ == o.n_ && t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Drop terms with x1, shift x2..xn down to x1..x_{n-1}.
    Poly specialize_first_to_zero() const;
    Poly evaluate_first_zero_keep_vars() const;  // same terms, n unchanged
    Poly permute_vars(const std::vector<int>& perm) const;  // x_i -> x_{perm[i-1]}
    Poly with_nvars(int n) const;                            // pad exponents with zeros
    mpz_class eval_ones() const;
    bool homogeneous(int d) const;

    std::string str() const;
    nlohmann::json to_json() const;
    static Poly from_json(const nlohmann::json& j);

private:
    void check(const Poly& o) const;
    int n_ = 0;
    std::map<Exp, mpz_class> t_;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_scale(const Poly& p, const mpz_class& c);
bool poly_equal(const Poly& p, const Poly& q);

}  // namespace atomlr
