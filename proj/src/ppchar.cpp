#include "serreq/ppchar.hpp"

namespace serreq {

W2Elem ppchar(const Graph& g, const GraphLimits& lim) {
    auto auts = automorphisms(g, lim);
    W2Elem z(g.nh());
    Rational inv = Rational(1) / (long long)auts.size();
    for (auto& tau : auts) z.add_term(cycle_type(tau, g), inv);
    return z;
}

W2Elem ppchar_decorated(const DecoratedGraph& d, const GraphLimits& lim) {
    auto auts = automorphisms(d, lim);
    W2Elem z(d.g.nh());
    Rational inv = Rational(1) / (long long)auts.size();
    for (auto& tau : auts) z.add_term(cycle_type(tau, d.g), inv);
    return z;
}

std::map<WeightedTuple, Rational> ppchar_weighted(const VGraph& vg, const GraphLimits& lim) {
    auto auts = automorphisms(vg, lim);
    std::map<WeightedTuple, Rational> z;
    Rational inv = Rational(1) / (long long)auts.size();
    for (auto& tau : auts) z[cycle_type_weighted(tau, vg)] += inv;
    return z;
}

Rational orbisum_O(const TwoPartition& th, const GraphLimits& lim) {
    if (th.hnorm() % 2 != 0) return 0;
    GeneralizedPartition target = th.target_profile();
    MultigraphOptions opt;
    opt.max_edges = th.hnorm() / 2;
    opt.max_vertices = target.length();
    Rational total = 0;
    for (const Graph& g : enumerate_connected_multigraphs(opt)) {
        if (!(g.nu() == target)) continue;
        auto auts = automorphisms(g, lim);
        long long hit = 0;
        for (auto& tau : auts) hit += (cycle_type(tau, g) == th);
        total += Rational(hit) / (long long)auts.size();
    }
    return total;
}

std::vector<std::pair<TwoPartition, Rational>> orbisum_O_table(int bound,
                                                               const GraphLimits& lim) {
    MultigraphOptions opt;
    opt.max_edges = bound / 2;
    opt.max_vertices = std::max(1, bound); // valences >= 1 once edges exist
    std::map<TwoPartition, Rational> acc;
    for (const Graph& g : enumerate_connected_multigraphs(opt)) {
        auto auts = automorphisms(g, lim);
        Rational inv = Rational(1) / (long long)auts.size();
        for (auto& tau : auts) acc[cycle_type(tau, g)] += inv;
    }
    return {acc.begin(), acc.end()};
}

Rational orbisum_K(int g, const WeightedTuple& tuple, const GraphLimits& lim) {
    Rational total = 0;
    for (auto& vg : enumerate_stable_graphs(g)) {
        VGraph hat = subdivide(vg);
        auto auts = automorphisms(hat, lim);
        long long hit = 0;
        for (auto& tau : auts) {
            WeightedTuple t = cycle_type_weighted(tau, hat);
            t.resize(std::max(t.size(), tuple.size()));
            WeightedTuple q = tuple;
            q.resize(t.size());
            hit += (t == q);
        }
        total += Rational(hit) / (long long)auts.size();
    }
    return total;
}

Rational orbisum_K_gamma(int g, int gamma, const WeightedTuple& tuple, const GraphLimits& lim) {
    Rational total = 0;
    for (auto& vg : enumerate_stable_graphs_gamma(g, gamma)) {
        VGraph hat = subdivide(vg);
        auto auts = automorphisms(hat, lim);
        long long hit = 0;
        for (auto& tau : auts) {
            WeightedTuple t = cycle_type_weighted(tau, hat);
            t.resize(std::max(t.size(), tuple.size()));
            WeightedTuple q = tuple;
            q.resize(t.size());
            hit += (t == q);
        }
        total += Rational(hit) / (long long)auts.size();
    }
    return total;
}

Rational orbisum_maps(const TorusGraph& T, const std::vector<long long>& beta,
                      const TwoPartition& th, const GraphLimits& lim) {
    Rational total = 0;
    for (auto& d : enumerate_decorated(T, beta)) {
        auto auts = automorphisms(d, lim);
        long long hit = 0;
        for (auto& tau : auts) hit += (cycle_type(tau, d.g) == th);
        total += Rational(hit) / (long long)auts.size();
    }
    return total;
}

} // namespace serreq
