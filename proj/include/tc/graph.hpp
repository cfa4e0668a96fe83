#pragma once
#include "tc/util.hpp"

#include <array>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tc {

/* Plane graph given by a rotation system. Vertices are string labels.
   rotation[v] lists the neighbors of v in clockwise order; the edge set
   is derived from it. The structure must be symmetric (u in rot(v) iff
   v in rot(u), exactly once) and loop-free. Faces come from traversal,
   not from input. */
struct embedded_graph {
    std::string name;
    std::vector<std::string> verts;                       // insertion order
    std::map<std::string, std::vector<std::string>> rotation;

    bool has_vertex(const std::string& v) const { return rotation.count(v) != 0; }
    int degree(const std::string& v) const;
    bool adjacent(const std::string& u, const std::string& v) const;
    std::vector<std::pair<std::string, std::string>> edges() const; // sorted pairs
    int edge_count() const;
    std::vector<std::string> neighbors(const std::string& v) const { return rotation.at(v); }

    void validate() const; // throws tc::error on any invariant violation
    bool connected() const;
};

using face = std::vector<std::string>; // closed walk, first vertex not repeated

/* Face traversal of the rotation system. Successor rule: arriving along
   u->v, the walk continues to the successor of u in rotation(v). Every
   directed edge is used exactly once over all faces. Throws on
   disconnected input. */
std::vector<face> faces(const embedded_graph& g);

/* Face length = walk length (a vertex repeated by a cut vertex counts
   each time). */
inline int face_len(const face& f) { return (int)f.size(); }

constexpr int DIST_INF = std::numeric_limits<int>::max();

/* Precomputed face structure of one graph; build once and reuse when
   classifying many vertex pairs of the same graph. Holds a reference. */
struct plane_info {
    const embedded_graph& g;
    std::vector<face> fs;
    explicit plane_info(const embedded_graph& gr);
    bool triangular_face(const std::string& a, const std::string& b,
                         const std::string& c) const;
    bool triangulated(const std::string& v) const;
    /* Indices into fs of the faces containing edge uv (one per side; a
       bridge lists the same face twice). */
    std::vector<int> face_ids_at(const std::string& u, const std::string& v) const;
    std::vector<int> face_lengths_at(const std::string& u, const std::string& v) const;

  private:
    std::set<std::array<std::string, 3>> tris;
    std::map<std::string, std::vector<int>> vert_faces;
    std::map<std::pair<std::string, std::string>, std::vector<int>> edge_faces;
};

/* Shortest v1-v2 distance inside N(u), using only edges vw such that
   uvw bounds a triangular face. DIST_INF when unreachable. */
int triangle_distance(const plane_info& pi, const std::string& u,
                      const std::string& v1, const std::string& v2);
int triangle_distance(const embedded_graph& g, const std::string& u,
                      const std::string& v1, const std::string& v2);

/* True when every face incident to v is a triangle. */
bool triangulated(const embedded_graph& g, const std::string& v);

/* True when the triple {a,b,c} bounds some triangular face. */
bool triangular_face(const embedded_graph& g, const std::string& a,
                     const std::string& b, const std::string& c);

enum class weakness { weak, semi_weak, neither };
enum class s_class { s3, s5, s6, none };

struct neighbor_class {
    weakness kind = weakness::neither;
    std::optional<std::pair<int, int>> pq; // degrees of the two triangle co-neighbors, p <= q
    s_class s = s_class::none;
    bool e3 = false;
};

/* Classification of v as a neighbor of u:
   weak      : deg(v) <= 4 and both faces at uv are triangles, or
               deg(v) = 5 and v is triangulated;
   semi-weak : deg(v) <= 4 and exactly one face at uv is a triangle;
   pq        : set iff v is weak; degrees of the two w with uvw a
               triangular face, sorted.
   s (only for deg(u)=7, deg(v)=5, v weak):
   S3 when v is a (6,6+)-neighbor, or a (7+,7+)-neighbor such that v has
   two neighbors w1,w2 of degree 6 with uvw_i not a triangular face, or
   v has a neighbor w of degree 5 with uvw not a triangular face;
   S5 when every neighbor of v has degree 7; S6 otherwise, unless v is a
   (5,6)-neighbor (which carries no S class).
   e3 (only for deg(u)=8, deg(v)=5, v weak): v is a (6,7+)- or
   (7,7)-neighbor, or a (7+,8)-neighbor with two degree-6 neighbors
   w1,w2 such that uvw_i is not triangular, or a (7+,8)-neighbor with a
   degree-5 neighbor w such that uvw is not triangular. */
neighbor_class classify_neighbor(const plane_info& pi, const std::string& u,
                                 const std::string& v);
neighbor_class classify_neighbor(const embedded_graph& g, const std::string& u,
                                 const std::string& v);

/* Text format: line `graph <name>`, then one `rot <v>: <n1> ... <nk>`
   per vertex. `#` comments and blank lines are skipped. */
embedded_graph parse_graph(std::istream& in);
embedded_graph parse_graph_file(const std::string& path);
std::string format_graph(const embedded_graph& g);

/* Builds the rotation system of a plane graph from consistently oriented
   face walks (each undirected edge must appear as two opposite arcs).
   auto_orient flips faces as needed to reach such an orientation first. */
embedded_graph from_faces(const std::string& name, std::vector<face> fs,
                          bool auto_orient = true);

/* Planar dual; vertex i of the dual is face i of faces(g). Requires the
   dual to be simple (true for 3-connected inputs like the platonic
   fixtures). */
embedded_graph dual(const embedded_graph& g);

} // namespace tc
