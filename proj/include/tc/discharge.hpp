#pragma once

#include "tc/catalog.hpp"
#include "tc/graph.hpp"

#include <boost/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace tc {

/* Exact charge arithmetic; every amount produced by the rules has a
   denominator dividing 60. */
using rat = boost::rational<long long>;

struct transfer {
    std::string rule; // R1..R13 or R3+
    std::string from, to;
    rat amount;
    std::string note; // classification that triggered the rule
};

/* Faces participate as elements named f<i>, indexing into fs. */
struct charge_ledger {
    std::vector<face> fs;
    std::map<std::string, rat> initial;
    std::vector<transfer> transfers;
    std::map<std::string, rat> final_w;
};

/* d(v) - 6 on vertices and 2*len(f) - 6 on faces; the sums to -12 by
   Euler's formula and is asserted. */
std::map<std::string, rat> initial_weights(const embedded_graph& g);

/* Evaluates every rule against the input structure alone; transfers do
   not cascade. Deterministic: faces by index and walk position, then
   givers by label with receivers in rotation order. */
charge_ledger apply_rules(const embedded_graph& g);

/* One element that ended below zero, with every catalog match whose
   image touches the element's closed neighborhood. */
struct negative_finding {
    std::string element;
    rat weight;
    std::vector<std::pair<std::string, match>> configs;
};

std::vector<negative_finding> verify_final(const embedded_graph& g,
                                           const charge_ledger& led,
                                           const std::vector<config_pattern>& patterns);

} // namespace tc
