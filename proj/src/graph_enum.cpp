#include "serreq/graph.hpp"

#include <algorithm>
#include <set>

namespace serreq {

namespace {

int component_count(int nv, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(nv);
    for (int i = 0; i < nv; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& [u, v] : edges) parent[find(u)] = find(v);
    int c = 0;
    for (int i = 0; i < nv; ++i) c += (find(i) == i);
    return c;
}

} // namespace

std::vector<Graph> enumerate_connected_multigraphs(const MultigraphOptions& opt) {
    std::vector<Graph> out;
    std::set<Certificate> seen;

    auto emit = [&](const Graph& g) {
        if (!g.connected()) return;
        if (opt.keep && !opt.keep(g)) return;
        Certificate c = certificate(g);
        if (seen.insert(std::move(c)).second) out.push_back(g);
    };

    emit(Graph::single_vertex());

    std::vector<std::pair<int, int>> edges;
    std::function<void(int)> rec = [&](int used) {
        if (!edges.empty()) {
            Graph g{used, edges};
            int comps = component_count(used, edges);
            if (comps == 1) emit(g);
            if ((int)edges.size() >= opt.max_edges) return;
            // remaining edges must be able to connect the leftover components
            if (comps - 1 > opt.max_edges - (int)edges.size()) {
                // still extendable, connection happens through later edges;
                // the lexicographic order never revisits low vertices, so a
                // component made only of low vertices is stuck.  Detect the
                // cheap case: if the smallest unfinished vertex can no longer
                // gain edges, prune.
            }
        }
        std::pair<int, int> lo = edges.empty() ? std::make_pair(0, 0) : edges.back();
        for (int u = lo.first; u < used; ++u) {
            int vstart = (u == lo.first) ? lo.second : u;
            vstart = std::max(vstart, u);
            int vmax = std::min(used, opt.max_vertices - 1);
            for (int v = vstart; v <= vmax; ++v) {
                if (u == v && !opt.allow_loops) continue;
                edges.push_back({u, v});
                int nused = std::max(used, v + 1);
                bool ok = true;
                if (opt.max_b1) {
                    int c = component_count(nused, edges);
                    if ((int)edges.size() - nused + c > *opt.max_b1) ok = false;
                }
                if (ok) rec(nused);
                edges.pop_back();
            }
        }
    };
    if (opt.max_edges > 0) rec(1);
    return out;
}

std::vector<VGraph> enumerate_stable_graphs(int g) {
    if (g < 2) throw std::invalid_argument("enumerate_stable_graphs: needs g >= 2");
    MultigraphOptions opt;
    opt.max_edges = 3 * g - 3;
    opt.max_vertices = 2 * g - 2;
    opt.max_b1 = g;
    std::vector<VGraph> out;
    std::set<Certificate> seen;
    for (const Graph& base : enumerate_connected_multigraphs(opt)) {
        int b1 = base.b1();
        if (b1 > g) continue;
        int need = g - b1;
        std::vector<int> w(base.nv, 0);
        std::function<void(int, int)> assign = [&](int v, int left) {
            if (v == base.nv) {
                if (left != 0) return;
                VGraph vg{base, w};
                if (!vg.stable()) return;
                Certificate c = certificate(vg);
                if (seen.insert(std::move(c)).second) out.push_back(vg);
                return;
            }
            for (int x = 0; x <= left; ++x) {
                w[v] = x;
                assign(v + 1, left - x);
            }
            w[v] = 0;
        };
        assign(0, need);
    }
    return out;
}

VGraph subdivide(const VGraph& vg) {
    const Graph& g = vg.g;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.ne(); ++e) {
        int mid = g.nv + e;
        edges.push_back({g.edges[e].first, mid});
        edges.push_back({g.edges[e].second, mid});
    }
    std::vector<int> w = vg.w;
    w.resize(g.nv + g.ne(), 0);
    return VGraph{Graph::from_edges(g.nv + g.ne(), std::move(edges)), std::move(w)};
}

std::vector<VGraph> enumerate_stable_graphs_gamma(int g, int gamma) {
    std::vector<VGraph> out;
    for (auto& vg : enumerate_stable_graphs(g))
        if (vg.g.b1() == gamma) out.push_back(vg);
    return out;
}

std::vector<DecoratedGraph> enumerate_decorated(const TorusGraph& T,
                                                const std::vector<long long>& beta) {
    T.validate();
    for (auto& c : T.cls)
        for (long long x : c)
            if (x < 0)
                throw std::invalid_argument("enumerate_decorated: classes must be effective");
    std::vector<DecoratedGraph> out;
    long long budget = 0;
    for (long long x : beta) budget += x;
    if (budget <= 0) return out;

    // torus edge lookup by normalized endpoint pair
    std::map<std::pair<int, int>, int> tedge;
    for (size_t e = 0; e < T.edges.size(); ++e)
        tedge[std::minmax(T.edges[e].first, T.edges[e].second)] = (int)e;

    MultigraphOptions opt;
    opt.max_edges = (int)budget;
    opt.max_vertices = (int)budget + 1;
    opt.allow_loops = false;
    std::set<Certificate> seen;

    for (const Graph& g : enumerate_connected_multigraphs(opt)) {
        if (g.ne() == 0) continue; // beta > 0 needs at least one edge
        std::vector<int> fv(g.nv, -1), fe(g.ne(), -1), delta(g.ne(), 0);
        std::function<void(int)> color = [&](int v) {
            if (v == g.nv) {
                for (int e = 0; e < g.ne(); ++e)
                    fe[e] = tedge.at(std::minmax(fv[g.edges[e].first], fv[g.edges[e].second]));
                // distribute degrees
                std::function<void(int, std::vector<long long>)> weights =
                    [&](int e, std::vector<long long> left) {
                        if (e == g.ne()) {
                            bool zero = std::all_of(left.begin(), left.end(),
                                                    [](long long x) { return x == 0; });
                            if (!zero) return;
                            DecoratedGraph d{g, &T, fv, fe, delta};
                            Certificate c = certificate(d);
                            if (seen.insert(std::move(c)).second) out.push_back(d);
                            return;
                        }
                        const auto& cls = T.cls[fe[e]];
                        for (int dd = 1;; ++dd) {
                            std::vector<long long> nxt = left;
                            bool fits = true;
                            for (size_t i = 0; i < cls.size(); ++i) {
                                nxt[i] -= (long long)dd * cls[i];
                                if (nxt[i] < 0) fits = false;
                            }
                            if (!fits) break;
                            delta[e] = dd;
                            weights(e + 1, nxt);
                        }
                        delta[e] = 0;
                    };
                weights(0, beta);
                return;
            }
            for (int c = 0; c < T.nv; ++c) {
                bool ok = true;
                for (int e = 0; e < g.ne() && ok; ++e) {
                    auto [a, b] = g.edges[e];
                    int other = -1;
                    if (a == v && b < v) other = b;
                    if (b == v && a < v) other = a;
                    if (a == v && b == v) ok = false; // loopless already
                    if (other >= 0)
                        ok = tedge.count(std::minmax(c, fv[other])) > 0 && c != fv[other];
                }
                if (!ok) continue;
                fv[v] = c;
                color(v + 1);
                fv[v] = -1;
            }
        };
        color(0);
    }
    return out;
}

} // namespace serreq
