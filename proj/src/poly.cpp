#include "tc/poly.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace tc {

int mono_degree(const monomial& m) {
    int d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

monomial parse_monomial(const std::string& text) {
    monomial m;
    if (text == "1") return m;
    std::string tok;
    std::istringstream ss(text);
    while (std::getline(ss, tok, '*')) {
        if (tok.empty()) throw error("empty factor in monomial: " + text);
        auto caret = tok.find('^');
        std::string v = tok.substr(0, caret);
        int e = 1;
        if (caret != std::string::npos) {
            try {
                size_t used;
                e = std::stoi(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw error("bad exponent in monomial token: " + tok);
            }
        }
        if (v.empty() || e < 1) throw error("bad monomial token: " + tok);
        m[v] += e;
    }
    if (m.empty()) throw error("empty monomial: " + text);
    return m;
}

std::string format_monomial(const monomial& m) {
    if (m.empty()) return "1";
    std::vector<std::string> vs;
    for (auto& [v, e] : m) vs.push_back(v);
    std::sort(vs.begin(), vs.end(), label_less{});
    std::ostringstream out;
    for (size_t i = 0; i < vs.size(); i++) {
        if (i) out << "*";
        out << vs[i];
        if (m.at(vs[i]) > 1) out << "^" << m.at(vs[i]);
    }
    return out.str();
}

bool constraint_graph::has_var(const std::string& v) const {
    return std::find(vars.begin(), vars.end(), v) != vars.end();
}

void constraint_graph::check() const {
    std::set<std::string> seen;
    for (auto& v : vars)
        if (!seen.insert(v).second) throw error("duplicate variable " + v);
    std::set<std::pair<std::string, std::string>> es;
    for (auto& [x, y] : adj) {
        if (x == y) throw error("self-loop at " + x);
        if (!seen.count(x)) throw error("adj names unknown variable " + x);
        if (!seen.count(y)) throw error("adj names unknown variable " + y);
        if (!es.insert(std::minmax(x, y)).second)
            throw error("duplicate adjacency " + x + " " + y);
    }
    for (auto& [v, k] : caps) {
        if (!seen.count(v)) throw error("cap names unknown variable " + v);
        if (k < 1) throw error("cap of " + v + " must be positive");
    }
    if (target)
        for (auto& [v, e] : *target)
            if (!seen.count(v)) throw error("target names unknown variable " + v);
}

constraint_graph parse_constraint_graph(std::istream& in) {
    constraint_graph h;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (line.empty()) continue;
        auto toks = split_ws(line);
        if (toks[0] == "vars") {
            for (size_t i = 1; i < toks.size(); i++) h.vars.push_back(toks[i]);
        } else if (toks[0] == "adj") {
            if (toks.size() != 3) throw error("adj wants two variables");
            h.adj.emplace_back(toks[1], toks[2]);
        } else if (toks[0] == "cap") {
            if (toks.size() != 3) throw error("cap wants a variable and a size");
            if (h.caps.count(toks[1])) throw error("duplicate cap for " + toks[1]);
            try {
                h.caps[toks[1]] = std::stoi(toks[2]);
            } catch (const std::exception&) {
                throw error("bad cap size: " + toks[2]);
            }
        } else if (toks[0] == "target") {
            if (toks.size() != 2) throw error("target wants one monomial");
            h.target = parse_monomial(toks[1]);
        } else {
            throw error("unrecognized line: " + line);
        }
    }
    h.check();
    return h;
}

constraint_graph parse_constraint_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    return parse_constraint_graph(in);
}

var_order var_order::natural(const std::vector<std::string>& vars) {
    var_order ord;
    ord.seq = vars;
    std::sort(ord.seq.begin(), ord.seq.end(), label_less{});
    return ord;
}

var_order var_order::from_list(const std::vector<std::string>& seq,
                               const std::vector<std::string>& vars) {
    if (seq.size() != vars.size())
        throw error("order must list every variable exactly once");
    std::set<std::string> have(seq.begin(), seq.end());
    if (have.size() != seq.size()) throw error("order repeats a variable");
    for (auto& v : vars)
        if (!have.count(v)) throw error("order is missing variable " + v);
    var_order ord;
    ord.seq = seq;
    return ord;
}

int var_order::rank(const std::string& v) const {
    for (int i = 0; i < (int)seq.size(); i++)
        if (seq[i] == v) return i;
    throw error("variable " + v + " not in order");
}

sparse_poly constraint_polynomial(const constraint_graph& h, const var_order& ord) {
    h.check();
    sparse_poly p{{monomial{}, 1}};
    for (auto& [x, y] : h.adj) {
        auto a = x, b = y;
        if (ord.rank(a) > ord.rank(b)) std::swap(a, b);
        sparse_poly next;
        for (auto& [m, c] : p) {
            auto ma = m;
            ma[a]++;
            next[ma] += c;
            auto mb = m;
            mb[b]++;
            next[mb] -= c;
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        p = std::move(next);
    }
    return p;
}

namespace {

/* Exponent vectors live in two words, four bits per variable. */
struct packed {
    std::uint64_t w[2] = {0, 0};
    bool operator==(const packed& o) const { return w[0] == o.w[0] && w[1] == o.w[1]; }
};

struct packed_hash {
    size_t operator()(const packed& p) const {
        auto mix = [](std::uint64_t x) {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        };
        return (size_t)(mix(p.w[0]) ^ (mix(p.w[1] + 0x12345678ULL) << 1));
    }
};

int nib(const packed& p, int i) { return (int)((p.w[i >> 4] >> ((i & 15) * 4)) & 15); }
void bump(packed& p, int i) { p.w[i >> 4] += 1ULL << ((i & 15) * 4); }

struct indexed_graph {
    std::vector<std::string> vn;               // index -> name, in order rank
    std::vector<std::pair<int, int>> factors;  // elimination order, (lo,hi) by rank
    std::vector<std::vector<int>> rem;         // rem[k][v]: factors >= k touching v

    indexed_graph(const constraint_graph& h, const var_order& ord) {
        h.check();
        int n = (int)h.vars.size();
        if (n > 32) throw error("more than 32 variables is unsupported");
        if ((int)ord.seq.size() != n) throw error("order does not match the variable set");
        vn = ord.seq;
        std::map<std::string, int> idx;
        for (int i = 0; i < n; i++) idx[vn[i]] = i;
        std::vector<std::pair<int, int>> fs;
        for (auto& [x, y] : h.adj) {
            auto ix = idx.find(x), iy = idx.find(y);
            if (ix == idx.end() || iy == idx.end())
                throw error("order does not cover variable " + (ix == idx.end() ? x : y));
            int a = ix->second, b = iy->second;
            fs.emplace_back(std::min(a, b), std::max(a, b));
        }
        // Emit each variable's pending factors as a block, cheapest variable
        // first, so the set of live variables in the expansion stays narrow.
        std::vector<std::vector<int>> inc(n);
        for (int f = 0; f < (int)fs.size(); f++) {
            inc[fs[f].first].push_back(f);
            inc[fs[f].second].push_back(f);
        }
        std::vector<int> cnt(n);
        for (int v = 0; v < n; v++) cnt[v] = (int)inc[v].size();
        std::vector<bool> vdone(n), fdone(fs.size());
        for (int round = 0; round < n; round++) {
            int best = -1;
            for (int v = 0; v < n; v++)
                if (!vdone[v] && (best < 0 || cnt[v] < cnt[best])) best = v;
            vdone[best] = true;
            for (int f : inc[best]) {
                if (fdone[f]) continue;
                fdone[f] = true;
                factors.push_back(fs[f]);
                cnt[fs[f].first]--;
                cnt[fs[f].second]--;
            }
        }
        int m = (int)factors.size();
        rem.assign(m + 1, std::vector<int>(n, 0));
        for (int k = m - 1; k >= 0; k--) {
            rem[k] = rem[k + 1];
            rem[k][factors[k].first]++;
            rem[k][factors[k].second]++;
        }
    }
};

bool add_checked(long long& into, long long v) {
    return !__builtin_add_overflow(into, v, &into);
}
bool add_checked(mpz_class& into, const mpz_class& v) {
    into += v;
    return true;
}
template <typename C>
bool neg_ok(const C&) {
    return true;
}
bool neg_ok(const long long& v) { return v != LLONG_MIN; }

/* One pass of the truncated expansion. Every state at step k has total
   degree k, so reaching the target forces componentwise equality at the
   end. Returns false only on machine-integer overflow. */
template <typename C>
bool dp_coefficient(const indexed_graph& ig, const std::vector<int>& tgt, C& out) {
    std::unordered_map<packed, C, packed_hash> cur;
    cur[packed{}] = 1;
    int m = (int)ig.factors.size();
    for (int k = 0; k < m && !cur.empty(); k++) {
        auto [a, b] = ig.factors[k];
        std::unordered_map<packed, C, packed_hash> next;
        next.reserve(cur.size() * 2);
        auto& rem = ig.rem[k + 1];
        for (auto& [s, c] : cur) {
            for (int pick : {a, b}) {
                if (nib(s, pick) >= tgt[pick]) continue;
                packed s2 = s;
                bump(s2, pick);
                if (nib(s2, a) + rem[a] < tgt[a]) continue;
                if (nib(s2, b) + rem[b] < tgt[b]) continue;
                if (pick == b && !neg_ok(c)) return false;
                if (!add_checked(next[s2], pick == a ? c : C(-c))) return false;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        cur = std::move(next);
    }
    packed want;
    for (int v = 0; v < (int)tgt.size(); v++)
        for (int j = 0; j < tgt[v]; j++) bump(want, v);
    auto it = cur.find(want);
    out = it == cur.end() ? C(0) : it->second;
    return true;
}

std::vector<int> target_vector(const indexed_graph& ig, const monomial& m) {
    std::vector<int> tgt(ig.vn.size(), 0);
    std::map<std::string, int> idx;
    for (int i = 0; i < (int)ig.vn.size(); i++) idx[ig.vn[i]] = i;
    for (auto& [v, e] : m) {
        auto it = idx.find(v);
        if (it == idx.end()) throw error("unknown variable in monomial: " + v);
        if (e > 15) throw error("exponent above 15 is unsupported");
        tgt[it->second] = e;
    }
    return tgt;
}

} // namespace

mpz_class coefficient(const constraint_graph& h, const var_order& ord,
                      const monomial& target) {
    indexed_graph ig(h, ord);
    auto tgt = target_vector(ig, target);
    if (mono_degree(target) != (int)ig.factors.size()) return 0;
    long long fast = 0;
    if (dp_coefficient(ig, tgt, fast)) return mpz_class((long)fast);
    mpz_class exact;
    dp_coefficient(ig, tgt, exact);
    return exact;
}

search_result find_monomial(const constraint_graph& h, const var_order& ord,
                            const std::map<std::string, int>& caps,
                            long long node_cap) {
    indexed_graph ig(h, ord);
    int n = (int)ig.vn.size();
    std::vector<int> budget(n);
    long long room = 0;
    for (int v = 0; v < n; v++) {
        auto it = caps.find(ig.vn[v]);
        if (it == caps.end()) throw error("missing cap for " + ig.vn[v]);
        if (it->second < 1) throw error("cap of " + ig.vn[v] + " must be positive");
        if (it->second > 16) throw error("cap above 16 is unsupported");
        budget[v] = it->second - 1;
        room += budget[v];
    }
    search_result res;
    int m = (int)ig.factors.size();
    if (room < m) return res;  // no orientation fits the budgets

    std::unordered_map<packed, mpz_class, packed_hash> cur;
    cur[packed{}] = 1;
    for (int k = 0; k < m && !cur.empty(); k++) {
        auto [a, b] = ig.factors[k];
        std::unordered_map<packed, mpz_class, packed_hash> next;
        next.reserve(cur.size() * 2);
        for (auto& [s, c] : cur) {
            for (int pick : {a, b}) {
                if (nib(s, pick) >= budget[pick]) continue;
                packed s2 = s;
                bump(s2, pick);
                next[s2] += pick == a ? c : -c;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        cur = std::move(next);
        res.states += (long long)cur.size();
        if (node_cap >= 0 && res.states > node_cap) {
            res.st = search_result::status::capped;
            return res;
        }
    }
    std::vector<int> best;
    for (auto& [s, c] : cur) {
        if (c == 0) continue;
        std::vector<int> e(n);
        for (int v = 0; v < n; v++) e[v] = nib(s, v);
        if (best.empty() || e < best) {
            best = e;
            res.coeff = c;
        }
    }
    if (best.empty()) return res;
    res.st = search_result::status::found;
    for (int v = 0; v < n; v++)
        if (best[v]) res.m[ig.vn[v]] = best[v];
    return res;
}

verify_report verify_certificate(const constraint_graph& h, const var_order& ord,
                                 const std::map<std::string, int>& caps,
                                 const monomial& m) {
    verify_report rep;
    std::ostringstream detail;
    for (auto& [v, e] : m)
        if (!h.has_var(v)) throw error("unknown variable in monomial: " + v);
    int dm = mono_degree(m), dp = (int)h.adj.size();
    rep.cond_degree = dm == dp;
    detail << "deg(m)=" << dm << " deg(P)=" << dp;
    rep.cond_caps = true;
    for (auto& [v, e] : m) {
        auto it = caps.find(v);
        if (it == caps.end()) throw error("missing cap for " + v);
        if (e >= it->second) {
            rep.cond_caps = false;
            detail << "; " << v << "^" << e << " reaches cap " << it->second;
        }
    }
    for (auto& v : h.vars)
        if (!caps.count(v)) throw error("missing cap for " + v);
    rep.coeff = rep.cond_degree ? coefficient(h, ord, m) : mpz_class(0);
    rep.cond_nonzero = rep.coeff != 0;
    detail << "; coeff=" << rep.coeff.get_str();
    rep.ok = rep.cond_degree && rep.cond_caps && rep.cond_nonzero;
    rep.detail = detail.str();
    return rep;
}

} // namespace tc
