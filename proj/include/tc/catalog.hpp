#pragma once

#include "tc/graph.hpp"
#include "tc/poly.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tc {

/* Degree bound on one pattern vertex. */
struct deg_bound {
    enum class kind { exact, le, ge, free_bound } op = kind::free_bound;
    int k = 0;

    bool admits(int d) const;
    /* Nominal degree used by the sub-configuration relation; free bounds
       rank above every concrete degree. */
    int rank() const;
};

/* Relational role of `vertex` as a neighbor of `anchor`, evaluated through
   classify_neighbor on the host. */
struct role_constraint {
    enum class kind { weak, semi_weak, pq, s3, s5, s6, e3 } op;
    std::string vertex, anchor;
    int p = 0, q = 0;              // pq only
    bool p_ge = false, q_ge = false; // written 7+ : bound is a minimum
};

struct triface_constraint {
    std::string a, b, c;
    bool required = true; // no: the triple must not bound a triangle
};

struct tridist_constraint {
    std::string u, a, b;
    std::string rel; // one of = <= >=
    int k = 0;
};

/* d(a) + d(b) <= max. */
struct degsum_constraint {
    std::string a, b;
    int max = 0;
};

/* One reducibility certificate: a constraint graph with caps plus the
   expected monomial and coefficient. Multi-case lemmas carry one entry per
   case, told apart by tag. */
struct certificate {
    std::string tag;
    constraint_graph h;
    monomial m;
    long long coeff = 0;
};

struct config_pattern {
    std::string id;
    std::vector<std::string> vertices; // declaration order
    std::map<std::string, deg_bound> degs;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::pair<std::string, std::string>> nonedges;
    std::vector<role_constraint> roles;
    std::vector<triface_constraint> trifaces;
    std::vector<tridist_constraint> tridists;
    std::vector<degsum_constraint> degsums;
    std::vector<std::vector<std::string>> autos; // images of `vertices`
    std::vector<certificate> certs;
    bool certificate_none = false;

    bool has_pattern_vertex(const std::string& v) const;
    void check() const; // constraints reference declared vertices only
};

/* Injective assignment pattern vertex -> host vertex. */
using match = std::map<std::string, std::string>;

/* Text format, one pattern per file:
     config <id>
     vertex <label> deg=<k>|deg<=<k>|deg>=<k>|free [role...]
     edge <a> <b>            nonedge <a> <b>
     triface <a> <b> <c> yes|no
     tridist <u> <a> <b> =|<=|>= <k>
     degsum <a> <b> <= <k>
     auto <image of every declared vertex, in declaration order>
     certificate [tag] ... end   (vars/adj/cap/monomial/coeff lines)
     certificate none
   Roles: weak:<anchor> semiweak:<anchor> pq:<anchor>:<p>:<q> s3:<anchor>
   s5:<anchor> s6:<anchor> e3:<anchor>. A pq bound with a trailing + is a
   minimum: pq:u:7:7+ accepts any (7,q) with q >= 7. */
config_pattern parse_pattern(std::istream& in);
config_pattern parse_pattern_file(const std::string& path);

/* All injective matches satisfying every constraint, deduplicated under
   the declared automorphisms (closure taken), in a deterministic order. */
std::vector<match> detect(const embedded_graph& g, const config_pattern& p);

/* True when c arises from cp by lowering vertex degrees while preserving
   adjacency both ways and every triangle-distance. Triangles of a pattern
   are its triface-yes triples. */
bool is_subconfiguration(const config_pattern& c, const config_pattern& cp);

/* Every *.pat file in the directory, sorted by id. */
std::vector<config_pattern> load_corpus(const std::string& dir);

} // namespace tc
