#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "serreq/wreath2.hpp"

namespace serreq {

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Half-edge graph.  Edge k owns half-edges 2k and 2k+1; the involution is
/// h -> h^1, so it is always fixed-point free.
struct Graph {
    int nv = 0;
    std::vector<std::pair<int, int>> edges; // loops as (v, v)

    static Graph single_vertex() { return Graph{1, {}}; }
    static Graph from_edges(int nv, std::vector<std::pair<int, int>> edges);
    static Graph cycle(int len); // len >= 1; cycle(1) is the loop

    int ne() const { return (int)edges.size(); }
    int nh() const { return 2 * ne(); }
    int root(int h) const { return (h & 1) ? edges[h >> 1].second : edges[h >> 1].first; }
    int involution(int h) const { return h ^ 1; }
    int valence(int v) const;
    int b1() const { return ne() - nv + 1; } // connected graphs only
    bool connected() const;
    GeneralizedPartition nu() const;
    std::vector<std::vector<int>> half_edges_at() const; // vertex -> sorted half-edges
};

/// Vertex-weighted graph; genus = sum of weights + b1.
struct VGraph {
    Graph g;
    std::vector<int> w;
    int genus() const;
    bool stable() const; // 2w(v) - 2 + val(v) > 0 everywhere
};

/// GKM-style graph of a good torus action: simple, loop-free, one homology
/// class vector per edge.
struct TorusGraph {
    int nv = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<long long>> cls; // one class vector per edge

    static TorusGraph projective_space(int r); // complete graph, classes (1)
    void validate() const;
};

/// Connected graph with a homomorphism to a torus graph and positive edge
/// degrees.
struct DecoratedGraph {
    Graph g;
    const TorusGraph* target = nullptr;
    std::vector<int> fv;    // vertex -> torus vertex
    std::vector<int> fe;    // edge -> torus edge
    std::vector<int> delta; // edge -> positive degree
    std::vector<long long> total_class() const;
};

/// Automorphism as a vertex permutation together with the induced half-edge
/// permutation (commuting with root and involution).
struct GraphAut {
    std::vector<int> vperm;
    std::vector<int> hperm;
};

struct GraphLimits {
    int max_vertices = 16;
    int max_half_edges = 32;
};

using Certificate = std::vector<long long>;

Certificate certificate(const Graph& g);
Certificate certificate(const VGraph& g);
Certificate certificate(const DecoratedGraph& g);

std::vector<GraphAut> automorphisms(const Graph& g, const GraphLimits& lim = {});
std::vector<GraphAut> automorphisms(const VGraph& g, const GraphLimits& lim = {});
std::vector<GraphAut> automorphisms(const DecoratedGraph& g, const GraphLimits& lim = {});

/// cycle type of an automorphism: per vertex-cycle of length j based at v,
/// record a part j at mu = the cycle type of hperm^j restricted to the
/// half-edge fiber of v
TwoPartition cycle_type(const GraphAut& tau, const Graph& g);
/// refined by vertex weight: tuple indexed by h = 0..g
WeightedTuple cycle_type_weighted(const GraphAut& tau, const VGraph& g);

struct MultigraphOptions {
    int max_edges = 0;
    int max_vertices = 1 << 20;
    std::optional<int> max_b1;
    bool allow_loops = true;
    /// final keep-filter; enumeration still explores everything within bounds
    std::function<bool(const Graph&)> keep;
};

/// Connected multigraph isomorphism classes (the edgeless single vertex
/// included), deduplicated by certificate, deterministic order.
std::vector<Graph> enumerate_connected_multigraphs(const MultigraphOptions& opt);

/// Stable vertex-weighted graphs of genus g >= 2 (n = 0), up to iso.
std::vector<VGraph> enumerate_stable_graphs(int g);
/// insert one weight-0 valence-2 vertex in every edge
VGraph subdivide(const VGraph& g);
/// graph-genus filter: b1 of the (pre-subdivision) graph
std::vector<VGraph> enumerate_stable_graphs_gamma(int g, int gamma);

/// decorated-graph classes (G, f, delta) with total class beta
std::vector<DecoratedGraph> enumerate_decorated(const TorusGraph& T,
                                                const std::vector<long long>& beta);

} // namespace serreq
