#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "atomlr/column.hpp"
#include "atomlr/models.hpp"
#include "atomlr/poset.hpp"
#include "atomlr/skyline.hpp"
#include "atomlr/verify.hpp"

using namespace atomlr;
using json = nlohmann::json;

namespace {

struct Out {
    bool as_json = false;
    std::string path;
    std::ostringstream text;
    json doc;

    void emit() const {
        std::string s = as_json ? doc.dump(2) + "\n" : text.str();
        if (path.empty()) {
            std::cout << s;
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot write " + path);
        f << s;
    }
};

struct Usage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Comp comp_arg(const std::string& s, const std::string& what) {
    try {
        return parse_comp(s);
    } catch (const std::exception& e) {
        throw Usage(what + ": " + e.what());
    }
}

Perm perm_arg(const std::string& s, int n) {
    if (s.empty()) return Perm::identity(n);
    Comp v = comp_arg(s, "sigma");
    if (static_cast<int>(v.size()) != n)
        throw Usage("sigma has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
    try {
        return Perm(v);
    } catch (const std::exception& e) {
        throw Usage(e.what());
    }
}

Comp partition_arg(const std::string& s, int n) {
    Comp l = comp_arg(s, "lambda");
    for (std::size_t i = n; i < l.size(); ++i)
        if (l[i] != 0) throw Usage("lambda has more than n = " + std::to_string(n) + " parts");
    l.resize(n, 0);
    if (!is_partition(l)) throw Usage("lambda must be weakly decreasing");
    return l;
}

json params(std::initializer_list<std::pair<const char*, json>> kv) {
    json j = json::object();
    for (auto& [k, v] : kv) j[k] = v;
    return j;
}

int cmd_atom(const std::string& a, const std::string& s, const std::string& method, Out& out) {
    Comp alpha = comp_arg(a, "alpha");
    Perm sigma = perm_arg(s, static_cast<int>(alpha.size()));
    std::vector<std::string> methods = method == "all" ? std::vector<std::string>{"ssaf", "chains", "tiling"}
                                                       : std::vector<std::string>{method};
    std::vector<Poly> ps;
    for (auto& m : methods)
        ps.push_back(m == "ssaf" ? atom_via_ssaf(alpha, sigma) : m == "chains" ? atom_via_chains(alpha, sigma)
                                                                               : atom_via_tiling(alpha, sigma));
    bool agree = true;
    for (auto& p : ps) agree &= p == ps[0];
    out.doc = {{"model", "atom"},
               {"params", params({{"alpha", alpha}, {"sigma", sigma.images()}, {"method", method}})},
               {"polynomial", ps[0].to_json()}};
    out.text << ps[0].str() << "\n";
    if (methods.size() > 1) {
        out.doc["agree"] = agree;
        out.text << "methods " << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_schur(const std::string& l, int n, const std::string& method, Out& out) {
    Comp lam = partition_arg(l, n);
    Poly a = schur_via_ssyt(lam, n);
    bool agree = true;
    if (method != "ssyt") {
        Poly b = schur_via_tiling(lam, n);
        agree = a == b;
        if (method == "tiling") a = b;
    }
    out.doc = {{"model", "schur"},
               {"params", params({{"lambda", lam}, {"n", n}, {"method", method}})},
               {"polynomial", a.to_json()}};
    out.text << a.str() << "\n";
    if (method == "all") {
        out.doc["agree"] = agree;
        out.text << "methods " << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_expand(const std::string& file, const std::string& s, Out& out) {
    std::ifstream in(file);
    if (!in) throw Usage("cannot open " + file);
    json j;
    in >> j;
    Poly p = Poly::from_json(j.contains("polynomial") ? j.at("polynomial") : j);
    Perm sigma = perm_arg(s, p.nvars());
    ExpansionResult r = expand_in_atom_basis(p, sigma);
    out.doc = {{"model", "expansion"}, {"params", params({{"file", file}, {"sigma", sigma.images()}})}};
    out.doc.update(r.to_json());
    for (auto& [b, c] : r.coefficients) out.text << comp_str(b) << " " << c.get_str() << "\n";
    return r.residual.is_zero() ? 0 : 1;
}

int cmd_coeff(const std::string& a, const std::string& l, const std::string& s, const std::string& b, Out& out) {
    Comp alpha = comp_arg(a, "alpha");
    int n = static_cast<int>(alpha.size());
    Perm sigma = perm_arg(s, n);
    Comp lam = partition_arg(l, n);
    auto oracle = structure_coeffs_oracle(alpha, lam, sigma);
    auto get = [](const std::map<Comp, mpz_class>& m, const Comp& k) {
        auto it = m.find(k);
        return it == m.end() ? mpz_class(0) : it->second;
    };
    json p = params({{"alpha", alpha}, {"lambda", lam}, {"sigma", sigma.images()}});
    if (!b.empty()) {
        Comp beta = comp_arg(b, "beta");
        if (static_cast<int>(beta.size()) != n) throw Usage("beta and alpha lengths differ");
        mpz_class t = structure_coeff_via_tiling(alpha, lam, beta, sigma), o = get(oracle, beta);
        p["beta"] = beta;
        out.doc = {{"model", "atom-schur"},
                   {"params", p},
                   {"coefficient", t.get_str()},
                   {"oracle", o.get_str()},
                   {"agree", t == o}};
        out.text << t.get_str() << "\n";
        if (t != o) out.text << "oracle gives " << o.get_str() << "\n";
        return t == o ? 0 : 1;
    }
    auto tiling = structure_coeffs_via_tiling(alpha, lam, sigma);
    std::set<Comp> keys;
    for (auto& [k, v] : tiling) keys.insert(k);
    for (auto& [k, v] : oracle) keys.insert(k);
    bool agree = true;
    json rows = json::array();
    for (auto& k : keys) {
        mpz_class t = get(tiling, k), o = get(oracle, k);
        agree &= t == o;
        rows.push_back({{"beta", k}, {"tiling", t.get_str()}, {"oracle", o.get_str()}});
        out.text << comp_str(k) << " " << t.get_str() << " " << o.get_str() << (t == o ? "" : " DISAGREE") << "\n";
    }
    out.doc = {{"model", "atom-schur"}, {"params", p}, {"coefficients", rows}, {"agree", agree}};
    out.text << "methods " << (agree ? "agree" : "DISAGREE") << "\n";
    return agree ? 0 : 1;
}

int cmd_poset(const std::string& a, const std::string& s, Out& out) {
    Comp alpha = comp_arg(a, "alpha");
    Perm sigma = perm_arg(s, static_cast<int>(alpha.size()));
    PosetInterval P = poset_interval(alpha, sigma);
    out.doc = {{"model", "poset"}, {"params", params({{"alpha", alpha}, {"sigma", sigma.images()}})}};
    out.doc.update(P.to_json());
    for (auto& [lo, hi] : P.edges) out.text << comp_str(P.nodes[lo]) << " < " << comp_str(P.nodes[hi]) << "\n";
    return 0;
}

int cmd_bijection(const std::string& a, const std::string& s, Out& out) {
    Comp alpha = comp_arg(a, "alpha");
    Perm sigma = perm_arg(s, static_cast<int>(alpha.size()));
    ModelInstance m = build_atom_model(alpha, sigma);
    auto tilings = enumerate_tilings(m.region, m.tiles);
    auto fillings = enumerate_ssaf(alpha, sigma);
    std::set<std::vector<std::vector<int>>> images;
    bool ok = true;
    json rows = json::array();
    for (auto& t : tilings) {
        Filling f = tiling_to_ssaf(m, t, alpha);
        Poly w = tiling_weight(m.region, m.tiles, t);
        bool valid = check_filling(f);
        bool weight = w == Poly::monomial(f.weight());
        ok &= valid && weight && images.insert(f.cols).second;
        std::vector<std::string> fam;
        for (int x : t) fam.push_back(m.tiles.tiles[x].family);
        rows.push_back({{"tiles", fam}, {"weight", w.str()}, {"ssaf", f.to_json()}, {"valid", valid}});
        out.text << w.str() << "  ";
        for (auto& c : f.cols) {
            out.text << "[";
            for (std::size_t i = 0; i < c.size(); ++i) out.text << (i ? "," : "") << c[i];
            out.text << "]";
        }
        out.text << "\n";
    }
    ok &= tilings.size() == fillings.size();
    out.doc = {{"model", "bijection"},
               {"params", params({{"alpha", alpha}, {"sigma", sigma.images()}})},
               {"tilings", rows},
               {"ssaf_count", fillings.size()},
               {"bijective", ok}};
    out.text << tilings.size() << " tilings, " << fillings.size() << " fillings, " << (ok ? "bijective" : "NOT bijective")
             << "\n";
    return ok ? 0 : 1;
}

std::vector<Perm> perms_for(const std::string& s, int n) {
    if (!s.empty()) {
        Comp v = comp_arg(s, "sigma");
        return {perm_arg(s, static_cast<int>(v.size()))};
    }
    return Perm::all(n);
}

int cmd_verify_column(int m, int n, const std::string& s, bool unrestricted, bool minimality,
                      const std::vector<std::string>& single, Out& out) {
    if (!single.empty()) {
        Comp v = comp_arg(s, "sigma");
        Perm sigma = perm_arg(s, static_cast<int>(v.size()));
        ColumnBoundary b = parse_column_boundary(single[0], single[1], single[2], single[3], single[4], single[5]);
        bool zero_or_plus = true;
        for (Label l : {b.r, b.u}) zero_or_plus &= label_name(l) == "0" || label_name(l) == "+";
        if (!zero_or_plus && !unrestricted) throw Usage("r and u must be 0 or + (pass --unrestricted to override)");
        ColumnPair p = build_column_pair(b, sigma);
        Poly l = partition_function(p.lhs.region, p.lhs.tiles), r = partition_function(p.rhs.region, p.rhs.tiles);
        out.doc = {{"model", "column"},
                   {"params", {{"boundary", b.to_json()}, {"sigma", sigma.images()}}},
                   {"lhs", l.str()},
                   {"rhs", r.str()},
                   {"equal", l == r}};
        out.text << "lhs " << l.str() << "\nrhs " << r.str() << "\n" << (l == r ? "equal" : "DIFFERENT") << "\n";
        return l == r || unrestricted ? 0 : 1;
    }
    std::vector<int> ms = m > 0 ? std::vector<int>{m} : std::vector<int>{1, 2};
    std::vector<int> ns = n > 0 ? std::vector<int>{n} : std::vector<int>{2, 3};
    if (!s.empty()) ns = {static_cast<int>(comp_arg(s, "sigma").size())};
    bool ok = true;
    json reports = json::array();
    auto add = [&](const ColumnSweepReport& r, bool counts) {
        if (counts) ok &= r.ok();
        reports.push_back(r.to_json());
        out.text << r.mode << " m=" << r.m << " sigma=" << r.sigma.str() << " tested=" << r.tested
                 << " nonzero=" << r.nonzero << " failures=" << r.failures.size() << "\n";
    };
    for (int nn : ns)
        for (auto& sigma : perms_for(s, nn)) {
            for (int mm : ms) {
                add(verify_column_lemma(mm, sigma, true), true);
                add(verify_column_trivial(mm, sigma), true);
                MinlinesReport ml = verify_minlines_cases(mm, sigma);
                ok &= ml.ok();
                reports.push_back(ml.to_json());
                out.text << "minlines m=" << mm << " sigma=" << sigma.str() << " classes=" << ml.classes.size()
                         << (ml.ok() ? " ok" : " FAILED") << "\n";
                if (unrestricted) add(verify_column_lemma(mm, sigma, false), false);
            }
            for (auto& h : verify_unit_hexagons(sigma)) add(h, true);
            if (minimality) {
                int top = m > 0 ? m : 3, needed = 0;
                json rm = json::array();
                for (auto& x : check_tile_minimality(top, sigma)) {
                    needed += x.broken_at > 0;
                    std::vector<std::string> e;
                    for (int k = 0; k < sides_of(x.tile.orientation); ++k) e.push_back(label_name(x.tile.edges[k]));
                    rm.push_back({{"family", x.tile.family}, {"orientation", orientation_name(x.tile.orientation)},
                                  {"edges", e}, {"broken_at", x.broken_at}});
                }
                reports.push_back({{"minimality", {{"sigma", sigma.images()}, {"max_m", top}, {"tiles", rm}}}});
                out.text << "minimality m<=" << top << " sigma=" << sigma.str() << " " << needed << " of " << rm.size()
                         << " tiles needed\n";
            }
        }
    out.doc = {{"model", "column"}, {"reports", reports}, {"ok", ok}};
    out.text << (ok ? "all restricted sweeps pass" : "FAILURES") << "\n";
    return ok ? 0 : 1;
}

bool prism_case(const Comp& alpha, const Comp& lam, const Perm& sigma, json& rows, std::ostream& text) {
    PrismPair p = build_prisms(alpha, lam, sigma);
    Poly l = partition_function(p.lhs.region, p.lhs.tiles), r = partition_function(p.rhs.region, p.rhs.tiles);
    rows.push_back({{"alpha", alpha}, {"lambda", lam}, {"sigma", sigma.images()}, {"lhs", l.str()}, {"rhs", r.str()},
                    {"equal", l == r}});
    if (l != r) text << "DIFFERENT " << comp_str(alpha) << " " << comp_str(lam) << " " << sigma.str() << "\n";
    return l == r;
}

int cmd_verify_prism(const std::string& a, const std::string& l, const std::string& s, Out& out) {
    json rows = json::array();
    bool ok = true;
    if (!a.empty()) {
        Comp alpha = comp_arg(a, "alpha");
        int n = static_cast<int>(alpha.size());
        ok = prism_case(alpha, partition_arg(l, n), perm_arg(s, n), rows, out.text);
        out.text << "lhs " << rows[0]["lhs"].get<std::string>() << "\nrhs " << rows[0]["rhs"].get<std::string>() << "\n";
    } else {
        for (int n = 1; n <= 2; ++n)
            for (auto& sigma : Perm::all(n))
                for (int da = 0; da <= 2; ++da)
                    for (auto& alpha : compositions(da, n))
                        for (int dl = 0; dl <= 2; ++dl)
                            for (auto& lam : partitions(dl, n)) ok &= prism_case(alpha, lam, sigma, rows, out.text);
    }
    out.doc = {{"model", "prism"}, {"cases", rows}, {"ok", ok}};
    out.text << rows.size() << " prism pairs, " << (ok ? "all equal" : "FAILURES") << "\n";
    return ok ? 0 : 1;
}

int cmd_verify_all(Out& out) {
    bool ok = true;
    json parts = json::object();
    auto note = [&](const std::string& name, bool pass, long long cases) {
        ok &= pass;
        parts[name] = {{"cases", cases}, {"ok", pass}};
        out.text << name << ": " << cases << " cases " << (pass ? "ok" : "FAILED") << "\n";
    };
    long long c = 0;
    bool pass = true;
    for (int n = 1; n <= 3; ++n)
        for (auto& s : Perm::all(n))
            for (int d = 0; d <= 2 * n; ++d)
                for (auto& a : compositions(d, n)) {
                    if (max_part(a) > 2) continue;
                    ++c;
                    Poly p = atom_via_ssaf(a, s);
                    pass &= atom_via_chains(a, s) == p && atom_via_tiling(a, s) == p;
                }
    note("atoms", pass, c);
    c = 0, pass = true;
    for (int n = 1; n <= 2; ++n)
        for (auto& s : Perm::all(n))
            for (int da = 0; da <= 3; ++da)
                for (auto& a : compositions(da, n))
                    for (int dl = 0; dl <= 3; ++dl)
                        for (auto& l : partitions(dl, n)) {
                            ++c;
                            pass &= structure_coeffs_via_tiling(a, l, s) == structure_coeffs_oracle(a, l, s);
                        }
    note("coefficients", pass, c);
    c = 0, pass = true;
    for (int n = 2; n <= 3; ++n)
        for (auto& s : Perm::all(n))
            for (int m = 1; m <= 2; ++m) {
                ++c;
                pass &= verify_column_lemma(m, s, true).ok() && verify_column_trivial(m, s).ok();
            }
    note("column", pass, c);
    c = 0, pass = true;
    for (auto& s : Perm::all(2))
        for (int da = 0; da <= 1; ++da)
            for (auto& a : compositions(da, 2))
                for (int dl = 0; dl <= 1; ++dl)
                    for (auto& l : partitions(dl, 2)) {
                        ++c;
                        PrismPair p = build_prisms(a, l, s);
                        pass &= partition_function(p.lhs.region, p.lhs.tiles) == partition_function(p.rhs.region, p.rhs.tiles);
                    }
    note("prisms", pass, c);
    AdjacencyReport adj = verify_adjacency_equivalence(6, 3);
    note("adjacency", adj.ok(), static_cast<long long>(adj.cases.size()));
    out.doc = {{"model", "verify-all"}, {"parts", parts}, {"ok", ok}};
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Demazure atoms, Schur products and their vertex models"};
    app.require_subcommand(1);
    app.fallthrough();
    Out out;
    app.add_flag("--json", out.as_json, "machine-readable output");
    app.add_option("--out", out.path, "write output to FILE");

    std::string alpha, lambda, sigma, beta, method, file;
    int n = 0, m = 0;
    bool unrestricted = false, minimality = false;
    std::string q, r, s, t, u, v;

    auto* atom = app.add_subcommand("atom", "atom polynomial");
    atom->add_option("--alpha", alpha)->required();
    atom->add_option("--sigma", sigma);
    atom->add_option("--method", method)->default_val("ssaf")->check(CLI::IsMember({"ssaf", "chains", "tiling", "all"}));

    auto* schur = app.add_subcommand("schur", "Schur polynomial");
    schur->add_option("--lambda", lambda)->required();
    schur->add_option("--n", n)->required()->check(CLI::Range(1, 12));
    schur->add_option("--method", method)->default_val("ssyt")->check(CLI::IsMember({"ssyt", "tiling", "all"}));

    auto* expand = app.add_subcommand("expand", "expand a polynomial file in the atom basis");
    expand->add_option("--file", file)->required();
    expand->add_option("--sigma", sigma);

    auto* coeff = app.add_subcommand("coeff", "structure coefficients, model and oracle");
    coeff->add_option("--alpha", alpha)->required();
    coeff->add_option("--lambda", lambda)->required();
    coeff->add_option("--sigma", sigma);
    coeff->add_option("--beta", beta);

    auto* poset = app.add_subcommand("poset", "interval below alpha");
    poset->add_option("--alpha", alpha)->required();
    poset->add_option("--sigma", sigma);

    auto* bij = app.add_subcommand("bijection", "atom tilings and their fillings");
    bij->add_option("--alpha", alpha)->required();
    bij->add_option("--sigma", sigma);

    auto* vcol = app.add_subcommand("verify-column", "column lemma sweeps, or one boundary with --q..--v");
    vcol->add_option("--m", m)->check(CLI::Range(1, 4));
    vcol->add_option("--n", n)->check(CLI::Range(1, 5));
    vcol->add_option("--sigma", sigma);
    vcol->add_flag("--unrestricted", unrestricted, "also sweep r and u over all labels (reported only)");
    vcol->add_flag("--minimality", minimality, "drop each tile in turn and rerun the restricted sweeps");
    for (auto [name, var] : std::initializer_list<std::pair<const char*, std::string*>>{
             {"--q", &q}, {"--r", &r}, {"--s", &s}, {"--t", &t}, {"--u", &u}, {"--v", &v}})
        vcol->add_option(name, *var);

    auto* vprism = app.add_subcommand("verify-prism", "prism identity, one case or the n <= 2 sweep");
    vprism->add_option("--alpha", alpha);
    vprism->add_option("--lambda", lambda)->default_val("0");
    vprism->add_option("--sigma", sigma);

    auto* vall = app.add_subcommand("verify-all", "run every sweep at reduced size");

    CLI11_PARSE(app, argc, argv);
    int status = 0;
    try {
        if (*atom) status = cmd_atom(alpha, sigma, method, out);
        else if (*schur) status = cmd_schur(lambda, n, method, out);
        else if (*expand) status = cmd_expand(file, sigma, out);
        else if (*coeff) status = cmd_coeff(alpha, lambda, sigma, beta, out);
        else if (*poset) status = cmd_poset(alpha, sigma, out);
        else if (*bij) status = cmd_bijection(alpha, sigma, out);
        else if (*vcol) {
            std::vector<std::string> single;
            if (!q.empty() || !t.empty()) {
                if (q.empty() || t.empty() || r.empty() || s.empty() || u.empty() || v.empty() || sigma.empty())
                    throw Usage("a single boundary needs --q --r --s --t --u --v and --sigma");
                single = {q, r, s, t, u, v};
            }
            status = cmd_verify_column(m, n, sigma, unrestricted, minimality, single, out);
        } else if (*vprism) status = cmd_verify_prism(alpha, lambda, sigma, out);
        else if (*vall) status = cmd_verify_all(out);
        out.emit();
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return status;
}
