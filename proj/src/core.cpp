#include "atomlr/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace atomlr {

int size(const Comp& a) { return std::accumulate(a.begin(), a.end(), 0); }

int max_part(const Comp& a) { return a.empty() ? 0 : *std::max_element(a.begin(), a.end()); }

bool is_partition(const Comp& a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] < a[i + 1]) return false;
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

std::string comp_str(const Comp& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

Comp parse_comp(const std::string& s) {
    Comp out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        std::size_t pos = 0;
        int v = std::stoi(cur, &pos);
        if (pos != cur.size() || v < 0) throw std::invalid_argument("bad part '" + cur + "'");
        out.push_back(v);
        cur.clear();
    };
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '[' || c == ']') flush();
        else cur += c;
    }
    flush();
    return out;
}

static void comps_rec(int d, int n, Comp& cur, std::vector<Comp>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int p = d; p >= 0; --p) {
        cur.push_back(p);
        comps_rec(d - p, n, cur, out);
        cur.pop_back();
    }
}

std::vector<Comp> compositions(int d, int n) {
    std::vector<Comp> out;
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    Comp cur;
    comps_rec(d, n, cur, out);
    return out;
}

std::vector<Comp> partitions(int d, int n) {
    std::vector<Comp> out;
    for (auto& c : compositions(d, n))
        if (is_partition(c)) out.push_back(c);
    return out;
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<int> seen(img_.size() + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > n() || seen[v]++) throw std::invalid_argument("not a permutation: " + str());
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(v);
}

std::vector<Perm> Perm::all(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < n(); ++i) inv[img_[i] - 1] = i + 1;
    return Perm(inv);
}

std::string Perm::str() const {
    std::string s;
    for (std::size_t i = 0; i < img_.size(); ++i) s += (i ? "," : "") + std::to_string(img_[i]);
    return s;
}

Perm sigma_chain(const Perm& s, int k) {
    if (k < 0 || k > s.n()) throw std::invalid_argument("sigma_chain: k out of range");
    std::vector<int> v = s.images();
    for (int step = 0; step < k; ++step) {
        std::vector<int> w;
        for (int x : v)
            if (x != 1) w.push_back(x - 1);
        v = std::move(w);
    }
    return Perm(v);
}

bool Token::operator<(const Token& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (a != o.a) return a < o.a;
    return b < o.b;
}

std::string Token::str() const {
    switch (kind) {
        case Zero: return "0";
        case Plus: return "+";
        case Colour: return std::to_string(a);
        case ColourPlus: return std::to_string(a) + "+";
        case Pair: return std::to_string(a) + "|" + std::to_string(b);
        case PairPlus: return std::to_string(a) + "|" + std::to_string(b) + "+";
    }
    return "?";
}

Token Token::parse(const std::string& s) {
    if (s == "0") return zero();
    if (s == "+") return plus();
    auto bar = s.find('|');
    if (bar != std::string::npos) {
        int x = std::stoi(s.substr(0, bar));
        std::string rest = s.substr(bar + 1);
        if (!rest.empty() && rest.back() == '+') return pair_plus(x, std::stoi(rest.substr(0, rest.size() - 1)));
        return pair(x, std::stoi(rest));
    }
    if (!s.empty() && s.back() == '+') return colour_plus(std::stoi(s.substr(0, s.size() - 1)));
    std::size_t pos = 0;
    int c = std::stoi(s, &pos);
    if (pos != s.size() || c < 1) throw std::invalid_argument("bad token '" + s + "'");
    return colour(c);
}

std::string render(const BString& s) {
    std::string out;
    for (auto& t : s) out += t.str();
    return out;
}

std::string render_dotted(const BString& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "." : "") + s[i].str();
    return out;
}

BString parse_bstring(const std::string& s) {
    BString out;
    if (s.find('.') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, '.')) out.push_back(Token::parse(tok));
        return out;
    }
    for (char c : s) out.push_back(Token::parse(std::string(1, c)));
    return out;
}

BString encode_alpha_star(const Comp& alpha) {
    int n = static_cast<int>(alpha.size()), k = max_part(alpha);
    BString s;
    for (int w = 0; w <= k; ++w) {
        for (int i = n; i >= 1; --i)
            if (alpha[i - 1] == w) s.push_back(Token::colour(i));
        if (w < k) s.push_back(Token::zero());
    }
    return s;
}

Comp decode_alpha_star(const BString& s) {
    int n = 0;
    for (auto& t : s) {
        if (t.kind != Token::Zero && t.kind != Token::Colour)
            throw std::invalid_argument("decode_alpha_star: unexpected symbol " + t.str());
        n += t.kind == Token::Colour;
    }
    Comp alpha(n, -1);
    int zeros = 0;
    for (std::size_t p = 0; p < s.size(); ++p) {
        const Token& t = s[p];
        if (t.kind == Token::Zero) {
            ++zeros;
            continue;
        }
        if (t.a > n) throw std::invalid_argument("decode_alpha_star: colour out of range at " + std::to_string(p));
        if (alpha[t.a - 1] >= 0) throw std::invalid_argument("decode_alpha_star: duplicate colour at " + std::to_string(p));
        if (p > 0 && s[p - 1].kind == Token::Colour && s[p - 1].a < t.a)
            throw std::invalid_argument("decode_alpha_star: ascent at " + std::to_string(p));
        alpha[t.a - 1] = zeros;
    }
    for (int i = 0; i < n; ++i)
        if (alpha[i] < 0) throw std::invalid_argument("decode_alpha_star: colour " + std::to_string(i + 1) + " missing");
    return alpha;
}

// The path runs from the bottom row (smallest part) upward: East steps, then a North step.
BString encode_lambda_minus(const Comp& lambda, int n) {
    if (static_cast<int>(lambda.size()) != n || !is_partition(lambda))
        throw std::invalid_argument("encode_lambda_minus: need a partition of length n");
    BString s;
    int prev = 0;
    for (int i = n - 1; i >= 0; --i) {
        for (int e = prev; e < lambda[i]; ++e) s.push_back(Token::zero());
        s.push_back(Token::colour(1));
        prev = lambda[i];
    }
    return s;
}

BString encode_lambda_plus(const Comp& lambda, int n) {
    BString s = encode_lambda_minus(lambda, n);
    for (auto& t : s) t = t.kind == Token::Zero ? Token::plus() : Token::zero();
    return s;
}

bool is_descending_string(const BString& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i].kind == Token::Colour && s[i + 1].kind == Token::Colour && s[i].a < s[i + 1].a) return false;
    return true;
}

BString pad(BString s, int len, Token fill) {
    while (static_cast<int>(s.size()) < len) s.push_back(fill);
    return s;
}

BString beta_skip_string(const Comp& beta, int s, int total_len) {
    if (s < 1 || s > static_cast<int>(beta.size()) || beta[s - 1] != 0)
        throw std::invalid_argument("beta_skip_string: part s must exist and be 0");
    BString out;
    for (auto& t : pad(encode_alpha_star(beta), total_len, Token::zero()))
        if (!(t.kind == Token::Colour && t.a == s)) out.push_back(t);
    out.push_back(Token::zero());
    return out;
}

}  // namespace atomlr
