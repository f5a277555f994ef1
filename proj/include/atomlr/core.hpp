#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace atomlr {

using Comp = std::vector<int>;

int size(const Comp& a);
int max_part(const Comp& a);
bool is_partition(const Comp& a);
std::string comp_str(const Comp& a);
Comp parse_comp(const std::string& s);

// All weak compositions of d with n parts, in reverse lexicographic order.
std::vector<Comp> compositions(int d, int n);
// Partitions of d with exactly n parts (trailing zeros allowed).
std::vector<Comp> partitions(int d, int n);

class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    static std::vector<Perm> all(int n);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }  // 1-based
    Perm inverse() const;
    const std::vector<int>& images() const { return img_; }
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }
    std::string str() const;

private:
    std::vector<int> img_;
};

// sigma_k: remove the preimage of 1 and decrement, k times.
Perm sigma_chain(const Perm& s, int k);

// Edge label. Colours are 1-based; a pair a|b means a is carried one way and b the other, a|b+ adds a red line.
struct Token {
    enum Kind { Zero, Plus, Colour, ColourPlus, Pair, PairPlus };
    Kind kind = Zero;
    int a = 0, b = 0;

    static Token zero() { return {}; }
    static Token plus() { return {Plus, 0, 0}; }
    static Token colour(int c) { return {Colour, c, 0}; }
    static Token colour_plus(int c) { return {ColourPlus, c, 0}; }
    static Token pair(int x, int y) { return {Pair, x, y}; }
    static Token pair_plus(int x, int y) { return {PairPlus, x, y}; }

    int colour_of() const { return (kind == Colour || kind == ColourPlus) ? a : 0; }
    bool operator==(const Token& o) const { return kind == o.kind && a == o.a && b == o.b; }
    bool operator<(const Token& o) const;
    std::string str() const;
    static Token parse(const std::string& s);
};

using BString = std::vector<Token>;

std::string render(const BString& s);            // compact form, n <= 9
std::string render_dotted(const BString& s);     // '.'-separated, any n
BString parse_bstring(const std::string& s);     // accepts either form

BString encode_alpha_star(const Comp& alpha);
Comp decode_alpha_star(const BString& s);
BString encode_lambda_minus(const Comp& lambda, int n);
BString encode_lambda_plus(const Comp& lambda, int n);
bool is_descending_string(const BString& s);
// beta* padded with zeros to total_len (if larger), then s removed and a 0 appended.
BString beta_skip_string(const Comp& beta, int s, int total_len = -1);
BString pad(BString s, int len, Token fill);

}  // namespace atomlr
