#pragma once

#include <set>
#include <string>

#include "moduli/metric_graph.hpp"

namespace moduli {

// Edges whose removal increases the number of connected components.
std::set<std::string> find_bridges(const MetricGraph& g);

// Every bridge of length l gets length (1 - tau) l; at tau = 1 the bridges
// are contracted instead. All bridges vanish together at tau = 1.
MetricGraph shrink_bridges(const MetricGraph& g, const Rational& tau);

// valency(v) + |marks(v)| >= 3 for every vertex.
bool is_tropically_stable(const MetricGraph& g);

enum class RetractOrder { ascending_ids, descending_ids };

// Candidate strong deformation retraction onto the tropical locus:
// repeatedly contract edges at leaves carrying at most one mark, then
// dissolve unmarked valency-2 vertices, until nothing changes. A vertex
// whose only edge is a loop is never dissolved.
MetricGraph conjectured_retract(const MetricGraph& g, RetractOrder order = RetractOrder::ascending_ids);

}  // namespace moduli
