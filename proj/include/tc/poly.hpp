#pragma once

#include "tc/util.hpp"

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tc {

/* Exponent map with no zero entries; A^2*B^3*W in text form. */
using monomial = std::map<std::string, int>;

int mono_degree(const monomial& m);
monomial parse_monomial(const std::string& text);
std::string format_monomial(const monomial& m);

struct constraint_graph {
    std::vector<std::string> vars;                         // declaration order
    std::vector<std::pair<std::string, std::string>> adj;  // one entry per factor
    std::map<std::string, int> caps;
    std::optional<monomial> target;

    bool has_var(const std::string& v) const;
    void check() const;  // unique vars, known endpoints, no loops, no duplicates
};

constraint_graph parse_constraint_graph(std::istream& in);
constraint_graph parse_constraint_file(const std::string& path);

/* Total order on the variables; factors print as (X - Y) with X first.
   The default is label order, so A < B < U < V1 < V2 < W. */
struct var_order {
    std::vector<std::string> seq;

    static var_order natural(const std::vector<std::string>& vars);
    static var_order from_list(const std::vector<std::string>& seq,
                               const std::vector<std::string>& vars);
    int rank(const std::string& v) const;
};

/* Full sparse product of the (X - Y) factors. Exponential in general; meant
   for small inputs and cross-checks. */
using sparse_poly = std::map<monomial, mpz_class>;
sparse_poly constraint_polynomial(const constraint_graph& h, const var_order& ord);

/* Exact coefficient of `target`, expanded factor by factor with all
   exponents truncated at the target's. */
mpz_class coefficient(const constraint_graph& h, const var_order& ord,
                      const monomial& target);

struct search_result {
    enum class status { found, none, capped } st = status::none;
    monomial m;
    mpz_class coeff;
    long long states = 0;  // DP states touched
};

/* Hunts for a monomial with deg(m) = #factors, deg_X(m) < caps(X) and a
   nonzero coefficient. `node_cap` < 0 means unbounded. */
search_result find_monomial(const constraint_graph& h, const var_order& ord,
                            const std::map<std::string, int>& caps,
                            long long node_cap = -1);

struct verify_report {
    bool ok = false;
    bool cond_degree = false;    // deg(m) equals deg(P)
    bool cond_caps = false;      // deg_X(m) < cap(X) for every X
    bool cond_nonzero = false;   // coefficient of m is nonzero
    mpz_class coeff;
    std::string detail;
};

verify_report verify_certificate(const constraint_graph& h, const var_order& ord,
                                 const std::map<std::string, int>& caps,
                                 const monomial& m);

} // namespace tc
