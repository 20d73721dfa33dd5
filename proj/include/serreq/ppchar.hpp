#pragma once

#include "serreq/graph.hpp"

namespace serreq {

/// Averaged cycle index over Aut(G): zeta_G = (1/|Aut G|) sum_tau p_{Theta^tau}.
W2Elem ppchar(const Graph& g, const GraphLimits& lim = {});
W2Elem ppchar_decorated(const DecoratedGraph& g, const GraphLimits& lim = {});

/// Weighted version: tuples (Theta_0, ..., Theta_g) with rational masses
/// summing to 1.
std::map<WeightedTuple, Rational> ppchar_weighted(const VGraph& g, const GraphLimits& lim = {});

/// O(Theta) = sum over connected multigraph classes of |Aut^Theta| / |Aut|.
Rational orbisum_O(const TwoPartition& th, const GraphLimits& lim = {});
/// all (Theta, O(Theta)) with ||Theta|| <= bound and O nonzero
std::vector<std::pair<TwoPartition, Rational>> orbisum_O_table(int bound,
                                                               const GraphLimits& lim = {});

/// K over barycentrically subdivided stable graphs of genus g
Rational orbisum_K(int g, const WeightedTuple& tuple, const GraphLimits& lim = {});
/// graph-genus restricted variant (gamma = b1 of the pre-subdivision graph)
Rational orbisum_K_gamma(int g, int gamma, const WeightedTuple& tuple,
                         const GraphLimits& lim = {});

/// O_{X,beta}(Theta) over decorated-graph classes
Rational orbisum_maps(const TorusGraph& T, const std::vector<long long>& beta,
                      const TwoPartition& th, const GraphLimits& lim = {});

} // namespace serreq
