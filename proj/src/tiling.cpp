#include "atomlr/tiling.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <regex>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace atomlr {

namespace {

struct LabelTable {
    std::mutex m;
    std::unordered_map<std::string, Label> ids;
    std::vector<std::string> names;
};

LabelTable& labels() {
    static LabelTable t;
    return t;
}

}  // namespace

Label intern(const std::string& s) {
    auto& t = labels();
    std::lock_guard<std::mutex> g(t.m);
    auto [it, fresh] = t.ids.try_emplace(s, static_cast<Label>(t.names.size()));
    if (fresh) t.names.push_back(s);
    return it->second;
}

const std::string& label_name(Label l) {
    auto& t = labels();
    std::lock_guard<std::mutex> g(t.m);
    return t.names.at(l);
}

Label label_of(const Token& t) { return intern(t.str()); }

Orientation parse_orientation(const std::string& s) {
    if (s == "right-sheared") return Orientation::RightSheared;
    if (s == "left-sheared") return Orientation::LeftSheared;
    if (s == "diamond") return Orientation::Diamond;
    if (s == "up-triangle") return Orientation::UpTriangle;
    if (s == "down-triangle") return Orientation::DownTriangle;
    throw std::invalid_argument("unknown orientation '" + s + "'");
}

std::string orientation_name(Orientation o) {
    switch (o) {
        case Orientation::RightSheared: return "right-sheared";
        case Orientation::LeftSheared: return "left-sheared";
        case Orientation::Diamond: return "diamond";
        case Orientation::UpTriangle: return "up-triangle";
        case Orientation::DownTriangle: return "down-triangle";
    }
    return "?";
}

namespace {

const char* const* side_names(Orientation o, int& count) {
    static const char* sheared[] = {"S", "E", "N", "W"};
    static const char* diamond[] = {"SE", "SW", "NW", "NE"};
    static const char* triangle[] = {"H", "A", "B"};
    count = 4;
    if (o == Orientation::Diamond) return diamond;
    if (o == Orientation::UpTriangle || o == Orientation::DownTriangle) {
        count = 3;
        return triangle;
    }
    return sheared;
}

}  // namespace

int sides_of(Orientation o) {
    int k = 0;
    side_names(o, k);
    return k;
}

int parse_side(Orientation o, const std::string& s) {
    int k = 0;
    auto names = side_names(o, k);
    for (int i = 0; i < k; ++i)
        if (s == names[i]) return i;
    throw std::invalid_argument("side '" + s + "' not valid for " + orientation_name(o) + " tiles");
}

std::string side_name(Orientation o, int side) {
    int k = 0;
    auto names = side_names(o, k);
    if (side < 0 || side >= k) throw std::out_of_range("side index");
    return names[side];
}

void TileSet::build_index() {
    by_side_.clear();
    by_orientation_.clear();
    for (int t = 0; t < static_cast<int>(tiles.size()); ++t) {
        auto o = static_cast<int>(tiles[t].orientation);
        by_orientation_[o].push_back(t);
        for (int s = 0; s < sides_of(tiles[t].orientation); ++s) by_side_[{o, s, tiles[t].edges[s]}].push_back(t);
    }
}

const std::vector<int>& TileSet::with(Orientation o, int side, Label l) const {
    static const std::vector<int> none;
    auto it = by_side_.find({static_cast<int>(o), side, l});
    return it == by_side_.end() ? none : it->second;
}

const std::vector<int>& TileSet::all_of(Orientation o) const {
    static const std::vector<int> none;
    auto it = by_orientation_.find(static_cast<int>(o));
    return it == by_orientation_.end() ? none : it->second;
}

std::string tileset_dir() {
    if (const char* env = std::getenv("ATOMLR_TILESETS"); env && *env) return env;
    return ATOMLR_DATA_DIR;
}

std::string tileset_path(const std::string& file) { return tileset_dir() + "/" + file; }

namespace {

using Env = std::map<std::string, int>;

int eval_term(const std::string& t, const Env& env, const Perm& sigma) {
    static const std::regex sig(R"(sigma\((\w+)\))");
    std::smatch m;
    if (std::regex_match(t, m, sig)) return sigma(env.at(m[1]));
    if (auto it = env.find(t); it != env.end()) return it->second;
    return std::stoi(t);
}

bool eval_condition(const std::string& c, const Env& env, const Perm& sigma) {
    static const std::regex cmp(R"(\s*([\w()]+)\s*(<=|>=|==|!=|<|>)\s*([\w()]+)\s*)");
    std::smatch m;
    if (!std::regex_match(c, m, cmp)) throw std::invalid_argument("bad condition '" + c + "'");
    int a = eval_term(m[1], env, sigma), b = eval_term(m[3], env, sigma);
    std::string op = m[2];
    if (op == "<") return a < b;
    if (op == "<=") return a <= b;
    if (op == ">") return a > b;
    if (op == ">=") return a >= b;
    if (op == "==") return a == b;
    return a != b;
}

// Substitute variables inside a token pattern: "i", "i+", "f|g", "0", "+", "3".
std::string expand_pattern(const std::string& p, const Env& env) {
    std::string out, word;
    auto flush = [&] {
        if (word.empty()) return;
        auto it = env.find(word);
        out += it == env.end() ? word : std::to_string(it->second);
        word.clear();
    };
    for (char c : p) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') word += c;
        else {
            flush();
            out += c;
        }
    }
    flush();
    return out;
}

Weight parse_weight(const std::string& w) {
    if (w == "1") return Weight::One;
    if (w == "x_c") return Weight::X;
    if (w == "-x_c") return Weight::MinusX;
    throw std::invalid_argument("bad weight '" + w + "'");
}

// Colour variables are the single letters f,g,h,i,j,k used as whole words.
std::vector<std::string> pattern_vars(const nlohmann::json& edges, const std::vector<std::string>& conds) {
    static const std::regex word(R"(\b[fghijk]\b)");
    std::set<std::string> found;
    auto scan = [&](const std::string& text) {
        for (std::sregex_iterator it(text.begin(), text.end(), word), end; it != end; ++it) found.insert(it->str());
    };
    for (auto& [side, pat] : edges.items()) scan(pat.get<std::string>());
    for (auto& c : conds) scan(c);
    return {found.begin(), found.end()};
}

}  // namespace

TileSet load_tileset(const nlohmann::json& def, int ncolours, const Perm& sigma) {
    TileSet ts;
    const nlohmann::json* rows = &def;
    if (def.is_object()) {
        ts.name = def.value("name", "");
        ts.version = def.value("version", 0);
        rows = def.contains("triangles") ? &def.at("triangles") : &def.at("tiles");
    }
    if (!rows->is_array()) throw std::invalid_argument("tile set must be an array of tile rows");
    std::set<std::pair<int, std::array<Label, 4>>> seen;
    for (auto& fam : *rows) {
        auto o = parse_orientation(fam.at("orientation").get<std::string>());
        Weight w = parse_weight(fam.value("weight", "1"));
        if (w == Weight::MinusX && o != Orientation::LeftSheared)
            throw std::invalid_argument("weight -x_c is only permitted on left-sheared tiles");
        std::vector<std::string> conds = fam.value("conditions", std::vector<std::string>{});
        std::vector<std::string> vars = fam.contains("vars") ? fam.at("vars").get<std::vector<std::string>>()
                                                             : pattern_vars(fam.at("edges"), conds);
        std::string id = fam.value("family", fam.value("id", std::string()));
        std::string colour_key = fam.value("colour", std::string());  // rule data carried in aux
        Env env;
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == vars.size()) {
                for (auto& c : conds)
                    if (!eval_condition(c, env, sigma)) return;
                Tile t;
                t.orientation = o;
                t.weight = w;
                t.family = id;
                int nsides = sides_of(o);
                if (static_cast<int>(fam.at("edges").size()) != nsides)
                    throw std::invalid_argument("family '" + id + "' must label all " + std::to_string(nsides) + " sides");
                if (!colour_key.empty()) t.aux = std::stoi(expand_pattern(colour_key, env));
                for (auto& [side, pat] : fam.at("edges").items())
                    t.edges[parse_side(o, side)] = intern(expand_pattern(pat.get<std::string>(), env));
                if (!seen.insert({static_cast<int>(o), t.edges}).second)
                    throw std::invalid_argument("duplicate tile generated by family '" + id + "'");
                ts.tiles.push_back(t);
                return;
            }
            for (int c = 1; c <= ncolours; ++c) {
                env[vars[k]] = c;
                rec(k + 1);
            }
            env.erase(vars[k]);
        };
        rec(0);
    }
    ts.build_index();
    return ts;
}

TileSet load_tileset_file(const std::string& path, int ncolours, const Perm& sigma) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tile set " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed tile set " + path + ": " + e.what());
    }
    if (j.is_array() && j.empty()) {
        TileSet ts;
        ts.build_index();
        return ts;
    }
    return load_tileset(j, ncolours, sigma);
}

void Region::validate() const {
    std::vector<int> uses(boundary.size(), 0);
    for (auto& c : cells)
        for (int e : c.edges) ++uses.at(e);
    for (std::size_t e = 0; e < boundary.size(); ++e) {
        int want = boundary[e] || is_choice(static_cast<int>(e)) ? 1 : 2;
        if (uses[e] != want)
            throw std::logic_error("edge " + std::to_string(e) + " used " + std::to_string(uses[e]) + " times");
    }
}

namespace {

// Per-cell plan for the frontier sweep.
struct Step {
    std::array<int, 4> kind{};  // 0 boundary, 1 read from frontier, 2 open, 3 choice
    std::array<int, 4> slot{};  // frontier slot (read) or new slot (open)
    std::vector<int> keep;      // for each new slot: old slot it comes from, or -1 if opened here
    int new_size = 0;
};

struct Plan {
    std::vector<Step> steps;
    // the partner side for rule checks: for each cell/side, (other cell, other side)
    std::vector<std::array<std::pair<int, int>, 4>> partner;
};

Plan make_plan(const Region& r) {
    r.validate();
    Plan p;
    std::vector<std::vector<std::pair<int, int>>> users(r.boundary.size());
    for (int c = 0; c < static_cast<int>(r.cells.size()); ++c)
        for (int s = 0; s < 4; ++s) users[r.cells[c].edges[s]].push_back({c, s});
    p.partner.resize(r.cells.size());
    for (int c = 0; c < static_cast<int>(r.cells.size()); ++c)
        for (int s = 0; s < 4; ++s) {
            auto& u = users[r.cells[c].edges[s]];
            p.partner[c][s] = {-1, -1};
            for (auto& x : u)
                if (x.first != c || x.second != s) p.partner[c][s] = x;
        }
    std::vector<int> active;  // edge ids in slot order
    for (int c = 0; c < static_cast<int>(r.cells.size()); ++c) {
        Step st;
        std::vector<int> next;
        std::vector<bool> closed(active.size(), false);
        for (int s = 0; s < 4; ++s) {
            int e = r.cells[c].edges[s];
            if (r.boundary[e]) {
                st.kind[s] = 0;
                continue;
            }
            if (r.is_choice(e)) {
                st.kind[s] = 3;
                continue;
            }
            auto it = std::find(active.begin(), active.end(), e);
            if (it != active.end()) {
                st.kind[s] = 1;
                st.slot[s] = static_cast<int>(it - active.begin());
                closed[st.slot[s]] = true;
            } else {
                st.kind[s] = 2;
            }
        }
        for (std::size_t i = 0; i < active.size(); ++i)
            if (!closed[i]) {
                next.push_back(active[i]);
                st.keep.push_back(static_cast<int>(i));
            }
        for (int s = 0; s < 4; ++s)
            if (st.kind[s] == 2) {
                st.slot[s] = static_cast<int>(next.size());
                next.push_back(r.cells[c].edges[s]);
                st.keep.push_back(-1);
            }
        st.new_size = static_cast<int>(next.size());
        active = std::move(next);
        p.steps.push_back(st);
    }
    return p;
}

const std::vector<int>& candidates(const TileSet& ts, const Cell& cell, const std::array<int, 4>& need) {
    const std::vector<int>* best = &ts.all_of(cell.orientation);
    for (int s = 0; s < 4; ++s)
        if (need[s] >= 0) {
            auto& v = ts.with(cell.orientation, s, need[s]);
            if (v.size() < best->size()) best = &v;
        }
    return *best;
}

bool fits(const Tile& t, const std::array<int, 4>& need) {
    for (int s = 0; s < 4; ++s)
        if (need[s] >= 0 && t.edges[s] != need[s]) return false;
    return true;
}

bool allowed_choice(const Region& r, int e, Label l) {
    auto& ls = r.choices.at(e);
    return std::find(ls.begin(), ls.end(), l) != ls.end();
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 7);
        return h;
    }
};

void apply_weight(Poly& p, Weight w, int column) {
    if (w == Weight::One) return;
    Poly q(p.nvars());
    for (auto& [e, c] : p.terms()) {
        Exp f = e;
        ++f.at(column - 1);
        q.add_term(f, w == Weight::X ? c : mpz_class(-c));
    }
    p = std::move(q);
}

}  // namespace

Poly partition_function(const Region& r, const TileSet& ts) {
    Plan plan = make_plan(r);
    const bool rule = static_cast<bool>(ts.rule);
    const int width = rule ? 2 : 1;
    using Map = std::unordered_map<std::vector<int>, Poly, VecHash>;
    Map cur;
    cur.emplace(std::vector<int>{}, Poly::constant(r.nvars, 1));
    for (std::size_t c = 0; c < r.cells.size(); ++c) {
        const Cell& cell = r.cells[c];
        const Step& st = plan.steps[c];
        Map next;
        for (auto& [state, poly] : cur) {
            std::array<int, 4> need{-1, -1, -1, -1};
            for (int s = 0; s < 4; ++s) {
                if (st.kind[s] == 0) need[s] = *r.boundary[cell.edges[s]];
                else if (st.kind[s] == 1) need[s] = state[st.slot[s] * width];
            }
            for (int t : candidates(ts, cell, need)) {
                const Tile& tile = ts.tiles[t];
                if (!fits(tile, need)) continue;
                bool in_choice = true;
                for (int s = 0; s < 4 && in_choice; ++s)
                    if (st.kind[s] == 3) in_choice = allowed_choice(r, cell.edges[s], tile.edges[s]);
                if (!in_choice) continue;
                if (rule) {
                    bool ok = true;
                    for (int s = 0; s < 4 && ok; ++s)
                        if (st.kind[s] == 1) {
                            auto [oc, os] = plan.partner[c][s];
                            ok = ts.rule->allowed(state[st.slot[s] * 2 + 1], os, tile, s);
                        }
                    if (!ok) continue;
                }
                std::vector<int> ns(st.new_size * width);
                for (int i = 0; i < st.new_size; ++i) {
                    int k = st.keep[i];
                    if (k >= 0)
                        for (int w = 0; w < width; ++w) ns[i * width + w] = state[k * width + w];
                }
                for (int s = 0; s < 4; ++s)
                    if (st.kind[s] == 2) {
                        ns[st.slot[s] * width] = tile.edges[s];
                        if (rule) ns[st.slot[s] * 2 + 1] = ts.rule->summary(tile, s);
                    }
                Poly contrib = poly;
                apply_weight(contrib, tile.weight, cell.column);
                auto [it, fresh] = next.try_emplace(std::move(ns), std::move(contrib));
                if (!fresh) it->second += contrib;
            }
        }
        cur = std::move(next);
    }
    Poly total(r.nvars);
    for (auto& [s, p] : cur) total += p;
    return total;
}

void for_each_tiling(const Region& r, const TileSet& ts, const std::function<bool(const Tiling&)>& visit) {
    Plan plan = make_plan(r);
    std::vector<int> label(r.boundary.size(), -1), opener(r.boundary.size(), -1);
    for (std::size_t e = 0; e < r.boundary.size(); ++e)
        if (r.boundary[e]) label[e] = *r.boundary[e];
    Tiling cur(r.cells.size(), -1);
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (stop) return;
        if (c == r.cells.size()) {
            stop = !visit(cur);
            return;
        }
        const Cell& cell = r.cells[c];
        std::array<int, 4> need{};
        for (int s = 0; s < 4; ++s) need[s] = label[cell.edges[s]];
        for (int t : candidates(ts, cell, need)) {
            const Tile& tile = ts.tiles[t];
            if (!fits(tile, need)) continue;
            bool in_choice = true;
            for (int s = 0; s < 4 && in_choice; ++s)
                if (r.is_choice(cell.edges[s])) in_choice = allowed_choice(r, cell.edges[s], tile.edges[s]);
            if (!in_choice) continue;
            if (ts.rule) {
                bool ok = true;
                for (int s = 0; s < 4 && ok; ++s) {
                    int e = cell.edges[s];
                    if (!r.boundary[e] && opener[e] >= 0) {
                        auto [oc, os] = plan.partner[c][s];
                        ok = ts.rule->allowed(ts.rule->summary(ts.tiles[opener[e]], os), os, tile, s);
                    }
                }
                if (!ok) continue;
            }
            std::array<bool, 4> opened{};
            for (int s = 0; s < 4; ++s) {
                int e = cell.edges[s];
                if (label[e] < 0) {
                    label[e] = tile.edges[s];
                    opener[e] = t;
                    opened[s] = true;
                }
            }
            cur[c] = t;
            rec(c + 1);
            for (int s = 0; s < 4; ++s)
                if (opened[s]) {
                    label[cell.edges[s]] = -1;
                    opener[cell.edges[s]] = -1;
                }
            if (stop) return;
        }
    };
    rec(0);
}

std::vector<Tiling> enumerate_tilings(const Region& r, const TileSet& ts, std::size_t limit) {
    std::vector<Tiling> out;
    for_each_tiling(r, ts, [&](const Tiling& t) {
        out.push_back(t);
        return out.size() < limit;
    });
    return out;
}

Poly tiling_weight(const Region& r, const TileSet& ts, const Tiling& t) {
    Poly p = Poly::constant(r.nvars, 1);
    for (std::size_t c = 0; c < r.cells.size(); ++c) apply_weight(p, ts.tiles[t[c]].weight, r.cells[c].column);
    return p;
}

}  // namespace atomlr
