#pragma once

#include "tc/util.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tc {

/* Abstract graph with no embedding; the choosability routines do not care
   about rotations. Vertex labels may be element names like "u" or "u-v". */
struct small_graph {
    std::string name;
    std::vector<std::string> verts;
    std::vector<std::pair<std::string, std::string>> edges;

    bool has_vertex(const std::string& v) const;
    bool adjacent(const std::string& a, const std::string& b) const;
    int degree(const std::string& v) const;
    void check() const;  // known endpoints, no loops, no duplicate edges
};

small_graph path_graph(int n);      // v1 .. vn
small_graph cycle_graph(int n);     // v1 .. vn .. v1
small_graph complete_graph(int n);  // v1 .. vn, all pairs

using list_assignment = std::map<std::string, std::set<int>>;

/* Lines `list <element>: c1 c2 c3`; blank lines and # comments ignored. */
list_assignment parse_lists(std::istream& in);
list_assignment parse_list_file(const std::string& path);

/* True when every colored vertex differs from its colored neighbors.
   Vertices missing from `col` are ignored. */
bool proper_coloring(const small_graph& g, const std::map<std::string, int>& col);

/* Backtracking search for a proper coloring from the lists. Every vertex
   needs a list entry. Returns none only after exhausting the search space. */
std::optional<std::map<std::string, int>>
l_colorable(const small_graph& g, const list_assignment& lists);

struct choosable_result {
    bool choosable = false;
    list_assignment witness;  // an uncolorable assignment when !choosable
};

/* Decides whether every assignment with |L(v)| = f(v) admits a proper
   coloring. Enumerates assignments over a universe of sum f(v) colors up to
   color permutation. Requires |V| <= 10; witness colors are 1-based. */
choosable_result f_choosable(const small_graph& g, const std::map<std::string, int>& f);

/* True when no block of the graph is a complete graph or an odd cycle, in
   which case any f with f(v) >= deg(v) is choosable. Requires connectivity. */
bool degree_choosable_applicable(const small_graph& g);

/* Hall test on a clique: colorable from the lists iff every subset of
   vertices sees at least as many colors as it has members. Subset scan up
   to 20 lists, bipartite matching beyond. */
bool hall_clique_colorable(const std::vector<std::set<int>>& lists);

struct lemma_result {
    bool ok = false;
    std::string fail;        // hypothesis failure description when !ok
    std::vector<int> colors; // one color per input position when ok
};

/* Cycle v1..vn plus an apex u adjacent to v1 and vn. `lists` holds the n
   cycle lists followed by the apex list. Succeeds when |L(v1)| >= 3, or n is
   even and L(v1) != L(u); the apex color is colors[n]. */
lemma_result fryingpan_color(const std::vector<std::set<int>>& lists, int n);

/* Path v1..vn with chords v_i v_{i+2}. Needs n >= 4, n not divisible by 3,
   lists of size >= 2 on v1, v_{n-1}, v_n and >= 3 elsewhere. */
lemma_result diam_color(const std::vector<std::set<int>>& lists, int n);

/* Proper coloring of an even cycle from lists of size >= 2. */
std::vector<int> even_cycle_color(const std::vector<std::set<int>>& lists);

/* Ten edges a..j of the aux gadget, pairwise adjacent when they share an
   endpoint. Needs |j| >= 4, |c|,|f|,|g|,|i| >= 2 and the rest >= 3. */
const small_graph& aux13_gadget();

struct named_coloring {
    bool ok = false;
    std::string fail;
    std::map<std::string, int> colors;
};

named_coloring aux13_color(const list_assignment& lists);

} // namespace tc
