#include <doctest.h>

#include <random>
#include <set>

#include "serreq/graph.hpp"

using namespace serreq;

namespace {

Graph edge_graph() { return Graph::from_edges(2, {{0, 1}}); }
Graph loop_graph() { return Graph::from_edges(1, {{0, 0}}); }
Graph theta_graph() { return Graph::from_edges(2, {{0, 1}, {0, 1}, {0, 1}}); }

Graph random_multigraph(std::mt19937& rng) {
    std::uniform_int_distribution<int> nv(1, 4), ne(1, 5);
    int v = nv(rng);
    std::uniform_int_distribution<int> pick(0, v - 1);
    for (int tries = 0; tries < 50; ++tries) {
        std::vector<std::pair<int, int>> edges;
        int m = ne(rng);
        for (int e = 0; e < m; ++e) edges.push_back({pick(rng), pick(rng)});
        Graph g = Graph::from_edges(v, edges);
        if (g.connected()) return g;
    }
    return loop_graph();
}

std::vector<int> random_relabel(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace

TEST_CASE("basic structure") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 2}});
    CHECK(g.nh() == 6);
    CHECK(g.valence(2) == 3);
    CHECK(g.connected());
    CHECK(g.b1() == 1);
    GeneralizedPartition nu = g.nu();
    CHECK(nu.mult(1) == 1);
    CHECK(nu.mult(2) == 1);
    CHECK(nu.mult(3) == 1);
    CHECK(!Graph::from_edges(4, {{0, 1}, {2, 3}}).connected());
}

TEST_CASE("certificates separate and identify") {
    CHECK(certificate(loop_graph()) != certificate(edge_graph()));
    // the two labelings of a path on 3 vertices agree
    Graph p1 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Graph p2 = Graph::from_edges(3, {{1, 2}, {0, 2}});
    CHECK(certificate(p1) == certificate(p2));
    // double edge vs loop-plus-edge are distinct with equal degree data?
    Graph dbl = Graph::from_edges(2, {{0, 1}, {0, 1}});
    Graph cyc = Graph::cycle(2);
    CHECK(certificate(dbl) == certificate(cyc));
    Graph lollipop = Graph::from_edges(2, {{0, 0}, {0, 1}});
    CHECK(certificate(dbl) != certificate(lollipop));

    std::mt19937 rng(61);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_multigraph(rng);
        auto relab = random_relabel(rng, g.nv);
        std::vector<std::pair<int, int>> edges;
        for (auto& [u, v] : g.edges) edges.push_back({relab[u], relab[v]});
        Graph h = Graph::from_edges(g.nv, edges);
        CHECK(certificate(g) == certificate(h));
    }
}

TEST_CASE("automorphism groups of the stated examples") {
    CHECK(automorphisms(edge_graph()).size() == 2);
    CHECK(automorphisms(loop_graph()).size() == 2);
    CHECK(automorphisms(theta_graph()).size() == 12);
    // group closure: composing any two automorphisms lands in the set
    for (const Graph& g : {edge_graph(), loop_graph(), theta_graph(),
                           Graph::from_edges(2, {{0, 0}, {0, 1}, {1, 1}})}) {
        auto auts = automorphisms(g);
        std::set<std::vector<int>> hset;
        for (auto& a : auts) hset.insert(a.hperm);
        CHECK(hset.size() == auts.size());
        for (size_t i = 0; i < auts.size(); ++i)
            for (size_t j = 0; j < auts.size(); ++j) {
                std::vector<int> comp(g.nh());
                for (int h = 0; h < g.nh(); ++h) comp[h] = auts[i].hperm[auts[j].hperm[h]];
                CHECK(hset.count(comp));
            }
        // root and involution equivariance
        for (auto& a : auts)
            for (int h = 0; h < g.nh(); ++h) {
                CHECK(g.root(a.hperm[h]) == a.vperm[g.root(h)]);
                CHECK(a.hperm[g.involution(h)] == g.involution(a.hperm[h]));
            }
    }
    GraphLimits tight;
    tight.max_vertices = 1;
    CHECK_THROWS_AS(automorphisms(edge_graph(), tight), resource_error);
}

TEST_CASE("cycle types of the stated examples") {
    // identity on the edge graph: {(1) -> (1^2)}
    auto auts = automorphisms(edge_graph());
    std::map<TwoPartition, int> seen;
    for (auto& t : auts) seen[cycle_type(t, edge_graph())]++;
    TwoPartition id_type, swap_type;
    id_type.add(Partition::single(1), Partition::single(1, 2));
    swap_type.add(Partition::single(1), Partition::single(2));
    REQUIRE(seen.size() == 2);
    CHECK(seen[id_type] == 1);
    CHECK(seen[swap_type] == 1);

    // loop: {(1^2) -> (1)} and {(2) -> (1)}
    seen.clear();
    for (auto& t : automorphisms(loop_graph())) seen[cycle_type(t, loop_graph())]++;
    TwoPartition lid, lflip;
    lid.add(Partition::single(1, 2), Partition::single(1));
    lflip.add(Partition::single(2), Partition::single(1));
    REQUIRE(seen.size() == 2);
    CHECK(seen[lid] == 1);
    CHECK(seen[lflip] == 1);

    // invariants: ||Theta^tau|| = |H| (even), profile matches nu(G)
    std::mt19937 rng(67);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_multigraph(rng);
        for (auto& t : automorphisms(g)) {
            TwoPartition th = cycle_type(t, g);
            CHECK(th.hnorm() == g.nh());
            CHECK(th.hnorm() % 2 == 0);
            CHECK(th.target_profile() == g.nu());
        }
    }
}

TEST_CASE("connected multigraph enumeration") {
    MultigraphOptions opt;
    opt.max_edges = 1;
    CHECK(enumerate_connected_multigraphs(opt).size() == 3); // vertex, edge, loop
    opt.max_edges = 0;
    CHECK(enumerate_connected_multigraphs(opt).size() == 1);
    opt.max_edges = 2;
    // hand census of two-edge classes: path, double edge, lollipop, two loops
    auto graphs = enumerate_connected_multigraphs(opt);
    CHECK(graphs.size() == 3 + 4);
    // certificates pairwise distinct
    std::set<Certificate> certs;
    for (auto& g : graphs) certs.insert(certificate(g));
    CHECK(certs.size() == graphs.size());
}

TEST_CASE("stable graph census") {
    auto g2 = enumerate_stable_graphs(2);
    CHECK(g2.size() == 7);
    for (auto& vg : g2) {
        CHECK(vg.genus() == 2);
        CHECK(vg.stable());
    }
    // genus-2 trees: single weight-2 vertex, and two weight-1 vertices
    CHECK(enumerate_stable_graphs_gamma(2, 0).size() == 2);
    // genus-3 trees: {3}, {2-1}, {1-1-1 path}, {0-star with three 1-leaves}
    CHECK(enumerate_stable_graphs_gamma(3, 0).size() == 4);
}

TEST_CASE("subdivision") {
    std::mt19937 rng(71);
    auto g2 = enumerate_stable_graphs(2);
    for (auto& vg : g2) {
        VGraph hat = subdivide(vg);
        CHECK(hat.g.ne() == 2 * vg.g.ne());
        CHECK(hat.g.nv == vg.g.nv + vg.g.ne());
        CHECK(hat.genus() == vg.genus());
        // subdivision vertices are exactly the weight-0 valence-2 ones
        int subdiv = 0;
        for (int v = 0; v < hat.g.nv; ++v)
            if (hat.w[v] == 0 && hat.g.valence(v) == 2) ++subdiv;
        CHECK(subdiv == vg.g.ne());
        CHECK(automorphisms(hat).size() == automorphisms(vg).size());
    }
}

TEST_CASE("weighted cycle types refine the plain ones") {
    for (auto& vg : enumerate_stable_graphs(2)) {
        VGraph hat = subdivide(vg);
        for (auto& tau : automorphisms(hat)) {
            WeightedTuple tuple = cycle_type_weighted(tau, hat);
            TwoPartition flat;
            for (auto& th : tuple)
                for (auto& [mu, row] : th.entries()) flat.add(mu, row);
            CHECK(flat == cycle_type(tau, hat.g));
        }
    }
}

TEST_CASE("decorated enumeration for projective targets") {
    TorusGraph p1 = TorusGraph::projective_space(1);
    auto d1 = enumerate_decorated(p1, {1});
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].g.ne() == 1);
    CHECK(d1[0].delta[0] == 1);

    // K_{r+1}, beta = 1: one class per color pair
    for (int r = 1; r <= 3; ++r) {
        TorusGraph pr = TorusGraph::projective_space(r);
        auto d = enumerate_decorated(pr, {1});
        CHECK((int)d.size() == (r + 1) * r / 2);
        for (auto& dec : d) CHECK(automorphisms(dec).size() == 1);
    }

    // P^1, degree 2: edge with delta 2, double edge, paths 010 and 101
    auto d2 = enumerate_decorated(p1, {2});
    CHECK(d2.size() == 4);

    // beta = 0: empty
    CHECK(enumerate_decorated(p1, {0}).empty());
}

TEST_CASE("decorated automorphisms respect the decoration") {
    TorusGraph p1 = TorusGraph::projective_space(1);
    for (auto& dec : enumerate_decorated(p1, {2})) {
        for (auto& tau : automorphisms(dec)) {
            for (int v = 0; v < dec.g.nv; ++v) CHECK(dec.fv[tau.vperm[v]] == dec.fv[v]);
            auto beta = dec.total_class();
            CHECK(beta == std::vector<long long>{2});
        }
    }
}
