#include "serreq/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace serreq {

Graph Graph::from_edges(int nv, std::vector<std::pair<int, int>> edges) {
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= nv || v >= nv)
            throw std::invalid_argument("Graph::from_edges: endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    return Graph{nv, std::move(edges)};
}

Graph Graph::cycle(int len) {
    if (len < 1) throw std::invalid_argument("Graph::cycle: length must be >= 1");
    if (len == 1) return from_edges(1, {{0, 0}});
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < len; ++i) e.push_back({i, (i + 1) % len});
    return from_edges(len, std::move(e));
}

int Graph::valence(int v) const {
    int d = 0;
    for (auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

bool Graph::connected() const {
    if (nv == 0) return false;
    std::vector<int> seen(nv, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto& [a, b] : edges) {
            int o = -1;
            if (a == v) o = b;
            else if (b == v) o = a;
            if (o >= 0 && !seen[o]) {
                seen[o] = 1;
                stack.push_back(o);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c != 0; });
}

GeneralizedPartition Graph::nu() const {
    GeneralizedPartition out;
    for (int v = 0; v < nv; ++v) out.add(valence(v), 1);
    return out;
}

std::vector<std::vector<int>> Graph::half_edges_at() const {
    std::vector<std::vector<int>> at(nv);
    for (int h = 0; h < nh(); ++h) at[root(h)].push_back(h);
    return at;
}

int VGraph::genus() const {
    return std::accumulate(w.begin(), w.end(), 0) + g.b1();
}

bool VGraph::stable() const {
    for (int v = 0; v < g.nv; ++v)
        if (2 * w[v] - 2 + g.valence(v) <= 0) return false;
    return true;
}

TorusGraph TorusGraph::projective_space(int r) {
    TorusGraph T;
    T.nv = r + 1;
    for (int i = 0; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            T.edges.push_back({i, j});
            T.cls.push_back({1});
        }
    return T;
}

void TorusGraph::validate() const {
    if (cls.size() != edges.size())
        throw std::invalid_argument("TorusGraph: one class vector per edge required");
    std::vector<std::pair<int, int>> seen;
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (u == v) throw std::invalid_argument("TorusGraph: loops are not allowed");
        if (u < 0 || v < 0 || u >= nv || v >= nv)
            throw std::invalid_argument("TorusGraph: endpoint out of range");
        auto key = std::minmax(u, v);
        if (std::find(seen.begin(), seen.end(), std::make_pair(key.first, key.second)) !=
            seen.end())
            throw std::invalid_argument("TorusGraph: parallel edges are not allowed");
        seen.push_back({key.first, key.second});
        bool zero = std::all_of(cls[e].begin(), cls[e].end(), [](long long x) { return x == 0; });
        if (cls[e].empty() || zero)
            throw std::invalid_argument("TorusGraph: edge classes must be nonzero");
    }
}

std::vector<long long> DecoratedGraph::total_class() const {
    size_t dim = target->cls.empty() ? 0 : target->cls[0].size();
    std::vector<long long> beta(dim, 0);
    for (int e = 0; e < g.ne(); ++e)
        for (size_t i = 0; i < dim; ++i) beta[i] += (long long)delta[e] * target->cls[fe[e]][i];
    return beta;
}

// ---------------- labeled view: shared canonicalization core ----------------

namespace {

struct LView {
    const Graph* g = nullptr;
    int nv = 0;
    std::vector<long long> vlabel;
    std::vector<long long> elabel;
    // normalized (u <= v) -> sorted edge-label multiset
    std::map<std::pair<int, int>, std::vector<long long>> pl;

    const std::vector<long long>& pair_labels(int u, int v) const {
        static const std::vector<long long> kEmpty;
        auto it = pl.find(std::minmax(u, v));
        return it == pl.end() ? kEmpty : it->second;
    }
};

LView make_view(const Graph& g, std::vector<long long> vlab, std::vector<long long> elab) {
    LView w;
    w.g = &g;
    w.nv = g.nv;
    w.vlabel = vlab.empty() ? std::vector<long long>(g.nv, 0) : std::move(vlab);
    w.elabel = elab.empty() ? std::vector<long long>(g.ne(), 0) : std::move(elab);
    for (int e = 0; e < g.ne(); ++e)
        w.pl[std::minmax(g.edges[e].first, g.edges[e].second)].push_back(w.elabel[e]);
    for (auto& [k, v] : w.pl) std::sort(v.begin(), v.end());
    return w;
}

void append_flat(std::vector<long long>& code, const std::vector<long long>& ms) {
    code.push_back((long long)ms.size());
    code.insert(code.end(), ms.begin(), ms.end());
}

std::vector<long long> make_row(const LView& w, const std::vector<int>& perm, int pos, int v) {
    std::vector<long long> row;
    row.push_back(w.vlabel[v]);
    append_flat(row, w.pair_labels(v, v));
    for (int j = 0; j < pos; ++j) append_flat(row, w.pair_labels(perm[j], v));
    return row;
}

struct CertSearch {
    const LView& w;
    Certificate best;
    bool have_best = false;
    std::vector<int> perm;
    std::vector<char> used;
    Certificate cur;

    explicit CertSearch(const LView& w_) : w(w_), perm(w_.nv, -1), used(w_.nv, 0) {}

    // flat lexicographic comparison of the running prefix against the best;
    // true when this branch can still reach or beat the minimum
    bool viable() const {
        if (!have_best) return true;
        size_t n = std::min(cur.size(), best.size());
        for (size_t i = 0; i < n; ++i) {
            if (cur[i] != best[i]) return cur[i] < best[i];
        }
        return cur.size() <= best.size();
    }

    void rec(int pos) {
        if (!viable()) return;
        if (pos == w.nv) {
            best = cur;
            have_best = true;
            return;
        }
        for (int v = 0; v < w.nv; ++v) {
            if (used[v]) continue;
            auto row = make_row(w, perm, pos, v);
            size_t save = cur.size();
            cur.insert(cur.end(), row.begin(), row.end());
            perm[pos] = v;
            used[v] = 1;
            rec(pos + 1);
            used[v] = 0;
            cur.resize(save);
        }
    }
};

Certificate certificate_of(const LView& w) {
    CertSearch s(w);
    s.cur.push_back(w.nv);
    s.rec(0);
    return s.best;
}

void vertex_auts(const LView& w, std::vector<std::vector<int>>& out) {
    std::vector<int> sigma(w.nv, -1);
    std::vector<char> used(w.nv, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == w.nv) {
            out.push_back(sigma);
            return;
        }
        for (int img = 0; img < w.nv; ++img) {
            if (used[img] || w.vlabel[img] != w.vlabel[v]) continue;
            if (w.pair_labels(v, v) != w.pair_labels(img, img)) continue;
            bool ok = true;
            for (int j = 0; j < v && ok; ++j)
                ok = (w.pair_labels(j, v) == w.pair_labels(sigma[j], img));
            if (!ok) continue;
            sigma[v] = img;
            used[img] = 1;
            rec(v + 1);
            used[img] = 0;
            sigma[v] = -1;
        }
    };
    rec(0);
}

// one group of interchangeable parallel edges and its target slot
struct EdgeGroup {
    std::vector<int> src, dst;
    bool loop = false;
};

bool collect_groups(const LView& w, const std::vector<int>& sigma,
                    std::vector<EdgeGroup>& groups) {
    const Graph& g = *w.g;
    std::map<std::pair<int, int>, std::map<long long, std::vector<int>>> by_pair;
    for (int e = 0; e < g.ne(); ++e)
        by_pair[std::minmax(g.edges[e].first, g.edges[e].second)][w.elabel[e]].push_back(e);
    for (auto& [pr, labmap] : by_pair) {
        auto tpr = std::minmax(sigma[pr.first], sigma[pr.second]);
        auto it = by_pair.find(tpr);
        if (it == by_pair.end()) return false;
        for (auto& [lab, src] : labmap) {
            auto dit = it->second.find(lab);
            if (dit == it->second.end() || dit->second.size() != src.size()) return false;
            EdgeGroup grp;
            grp.src = src;
            grp.dst = dit->second;
            grp.loop = (pr.first == pr.second);
            groups.push_back(std::move(grp));
        }
    }
    return true;
}

void halfedge_extensions(const LView& w, const std::vector<int>& sigma,
                         std::vector<GraphAut>& out) {
    const Graph& g = *w.g;
    std::vector<EdgeGroup> groups;
    if (!collect_groups(w, sigma, groups)) return;
    std::vector<int> eperm(g.ne(), -1);
    std::vector<int> loops;
    for (int e = 0; e < g.ne(); ++e)
        if (g.edges[e].first == g.edges[e].second) loops.push_back(e);

    std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == groups.size()) {
            int L = (int)loops.size();
            for (int mask = 0; mask < (1 << L); ++mask) {
                GraphAut a;
                a.vperm = sigma;
                a.hperm.assign(g.nh(), -1);
                for (int e = 0; e < g.ne(); ++e) {
                    int f = eperm[e];
                    if (g.edges[e].first == g.edges[e].second) {
                        int bit = 0;
                        for (int li = 0; li < L; ++li)
                            if (loops[li] == e) bit = (mask >> li) & 1;
                        a.hperm[2 * e] = 2 * f + bit;
                        a.hperm[2 * e + 1] = 2 * f + (bit ^ 1);
                    } else {
                        bool straight = (sigma[g.edges[e].first] == g.edges[f].first);
                        a.hperm[2 * e] = straight ? 2 * f : 2 * f + 1;
                        a.hperm[2 * e + 1] = straight ? 2 * f + 1 : 2 * f;
                    }
                }
                out.push_back(std::move(a));
            }
            return;
        }
        auto& grp = groups[gi];
        std::vector<int> d = grp.dst;
        std::sort(d.begin(), d.end());
        do {
            for (size_t i = 0; i < grp.src.size(); ++i) eperm[grp.src[i]] = d[i];
            rec(gi + 1);
        } while (std::next_permutation(d.begin(), d.end()));
    };
    rec(0);
}

std::vector<GraphAut> auts_of(const LView& w, const GraphLimits& lim) {
    const Graph& g = *w.g;
    if (g.nv > lim.max_vertices || g.nh() > lim.max_half_edges)
        throw resource_error("automorphisms: graph exceeds configured bounds");
    std::vector<std::vector<int>> vperms;
    vertex_auts(w, vperms);
    std::vector<GraphAut> out;
    for (auto& sigma : vperms) halfedge_extensions(w, sigma, out);
    return out;
}

std::vector<long long> decorated_elabels(const DecoratedGraph& d) {
    std::vector<long long> lab(d.g.ne());
    for (int e = 0; e < d.g.ne(); ++e)
        lab[e] = (long long)d.fe[e] * 1000003LL + d.delta[e];
    return lab;
}

} // namespace

Certificate certificate(const Graph& g) { return certificate_of(make_view(g, {}, {})); }

Certificate certificate(const VGraph& vg) {
    std::vector<long long> vlab(vg.w.begin(), vg.w.end());
    return certificate_of(make_view(vg.g, std::move(vlab), {}));
}

Certificate certificate(const DecoratedGraph& d) {
    std::vector<long long> vlab(d.fv.begin(), d.fv.end());
    return certificate_of(make_view(d.g, std::move(vlab), decorated_elabels(d)));
}

std::vector<GraphAut> automorphisms(const Graph& g, const GraphLimits& lim) {
    return auts_of(make_view(g, {}, {}), lim);
}

std::vector<GraphAut> automorphisms(const VGraph& vg, const GraphLimits& lim) {
    std::vector<long long> vlab(vg.w.begin(), vg.w.end());
    return auts_of(make_view(vg.g, std::move(vlab), {}), lim);
}

std::vector<GraphAut> automorphisms(const DecoratedGraph& d, const GraphLimits& lim) {
    std::vector<long long> vlab(d.fv.begin(), d.fv.end());
    return auts_of(make_view(d.g, std::move(vlab), decorated_elabels(d)), lim);
}

namespace {

Partition local_cycle_type(const Graph& g, const GraphAut& tau, int v, int j) {
    // hperm^j permutes the fiber over v; return its cycle type
    std::vector<int> fiber;
    for (int h = 0; h < g.nh(); ++h)
        if (g.root(h) == v) fiber.push_back(h);
    auto power = [&](int h) {
        for (int k = 0; k < j; ++k) h = tau.hperm[h];
        return h;
    };
    Partition mu;
    std::vector<char> seen(g.nh(), 0);
    for (int h0 : fiber) {
        if (seen[h0]) continue;
        int len = 0, h = h0;
        do {
            seen[h] = 1;
            h = power(h);
            ++len;
        } while (h != h0);
        mu.add(len, 1);
    }
    return mu;
}

} // namespace

TwoPartition cycle_type(const GraphAut& tau, const Graph& g) {
    TwoPartition th;
    std::vector<char> seen(g.nv, 0);
    for (int v = 0; v < g.nv; ++v) {
        if (seen[v]) continue;
        int j = 0, u = v;
        do {
            seen[u] = 1;
            u = tau.vperm[u];
            ++j;
        } while (u != v);
        th.add_part(local_cycle_type(g, tau, v, j), j);
    }
    return th;
}

WeightedTuple cycle_type_weighted(const GraphAut& tau, const VGraph& vg) {
    WeightedTuple tuple(vg.genus() + 1);
    const Graph& g = vg.g;
    std::vector<char> seen(g.nv, 0);
    for (int v = 0; v < g.nv; ++v) {
        if (seen[v]) continue;
        int j = 0, u = v;
        do {
            seen[u] = 1;
            u = tau.vperm[u];
            ++j;
        } while (u != v);
        tuple[vg.w[v]].add_part(local_cycle_type(g, tau, v, j), j);
    }
    return tuple;
}

} // namespace serreq
