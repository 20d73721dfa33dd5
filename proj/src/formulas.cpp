#include "serreq/formulas.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <sstream>
#include <thread>

namespace serreq {

namespace {
constexpr int kTBig = 1 << 24;
}

// ---------------- InputSeries ----------------

void InputSeries::set(int h, const SymFunc& ah, Provenance prov, bool allow_support_violation) {
    if (h < 0) throw std::invalid_argument("InputSeries::set: negative genus");
    if (!allow_support_violation) {
        for (auto& [mu, c] : ah.terms()) {
            (void)c;
            if (mu.size() <= 2 - 2 * h) {
                std::ostringstream os;
                os << "InputSeries: genus " << h << " entry has a term of degree " << mu.size()
                   << " violating the support rule n > " << 2 - 2 * h;
                throw support_error(os.str());
            }
        }
    }
    a_[h] = ah;
    prov_[h] = prov;
}

const SymFunc& InputSeries::at(int h) const {
    static const SymFunc kZero(INT_MAX / 2);
    auto it = a_.find(h);
    return it == a_.end() ? kZero : it->second;
}

int InputSeries::available_degree(int h) const {
    auto it = a_.find(h);
    return it == a_.end() ? INT_MAX / 2 : it->second.max_deg();
}

int InputSeries::max_genus_present() const {
    int g = -1;
    for (auto& [h, f] : a_)
        if (!f.is_zero()) g = std::max(g, h);
    return g;
}

InputSeries::Provenance InputSeries::provenance(int h) const {
    auto it = prov_.find(h);
    return it == prov_.end() ? Provenance::random_formal : it->second;
}

GradedSeries InputSeries::assemble(int max_deg, int g_max, std::optional<int> wcap) const {
    GradedSeries a(max_deg, -1, kTBig, wcap);
    for (auto& [h, f] : a_) {
        if (h > g_max) continue;
        SymFunc s = a.slice(h - 1);
        s += f.truncated(max_deg);
        a.set_slice(h - 1, s);
    }
    return a;
}

std::string RequiredDegrees::to_string() const {
    std::ostringstream os;
    os << "required input degrees:";
    for (auto& [h, d] : per_genus) os << " a_" << h << " -> " << d << ";";
    if (abar0_degree > 0) os << " abar_0 -> " << abar0_degree;
    return os.str();
}

// every contributing configuration gives a weight-h vertex at most valence
// 2(g_max - h) plus residual degree N, see the enumeration-bound note in
// theorem_B below
RequiredDegrees required_degrees_graded(const FormulaTrunc& tr) {
    RequiredDegrees rd;
    for (int h = 0; h <= tr.g_max; ++h)
        rd.per_genus[h] = tr.max_deg + 2 * (tr.g_max - h);
    return rd;
}

namespace {

void check_graded_inputs(const InputSeries& in, const FormulaTrunc& tr, const char* who) {
    RequiredDegrees rd = required_degrees_graded(tr);
    for (auto& [h, need] : rd.per_genus) {
        if (in.available_degree(h) < need) {
            std::ostringstream os;
            os << who << ": input a_" << h << " available to degree " << in.available_degree(h)
               << " but " << rd.to_string();
            throw truncation_error(os.str());
        }
    }
    if (in.max_genus_present() > tr.g_max) {
        // higher-genus inputs cannot reach the window; ignore rather than fail
    }
}

// minimal total cost of a connected multigraph toward the (degree, genus)
// budget: valence < 3 vertices must either spend degree or take weight
bool budget_feasible(const Graph& g, int max_deg, int g_max) {
    int b1 = g.b1();
    if (b1 > g_max) return false;
    int genus_budget = g_max - b1;
    int cost = 0;
    std::vector<int> savings;
    for (int v = 0; v < g.nv; ++v) {
        int val = g.valence(v);
        if (val >= 3) continue;
        if (val == 2) {
            cost += 1;
            savings.push_back(1);
        } else if (val == 1) {
            cost += 2;
            savings.push_back(2);
        } else {
            cost += 3;
            savings.push_back(2);
            savings.push_back(1);
        }
    }
    std::sort(savings.rbegin(), savings.rend());
    for (int i = 0; i < genus_budget && i < (int)savings.size(); ++i) cost -= savings[i];
    return cost <= max_deg;
}

// per-graph automorphism data grouped by cycle type
struct ThetaData {
    int edges = 0;
    long long aut_order = 0;
    std::vector<std::pair<TwoPartition, long long>> counts;
};

ThetaData theta_data(const Graph& g) {
    ThetaData d;
    d.edges = g.ne();
    auto auts = automorphisms(g);
    d.aut_order = (long long)auts.size();
    std::map<TwoPartition, long long> acc;
    for (auto& tau : auts) acc[cycle_type(tau, g)]++;
    d.counts.assign(acc.begin(), acc.end());
    return d;
}

struct GradedGraphSet {
    std::vector<ThetaData> graphs;
};

const GradedGraphSet& graded_graph_set(int max_deg, int g_max) {
    static std::map<std::pair<int, int>, GradedGraphSet> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(max_deg, g_max);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    MultigraphOptions opt;
    opt.max_edges = std::max(0, 3 * g_max - 3 + max_deg);
    opt.max_vertices = std::max(1, 2 * g_max - 2 + max_deg);
    opt.max_b1 = g_max;
    opt.keep = [&](const Graph& g) { return budget_feasible(g, max_deg, g_max); };
    GradedGraphSet set;
    for (const Graph& g : enumerate_connected_multigraphs(opt)) set.graphs.push_back(theta_data(g));
    return cache.emplace(key, std::move(set)).first->second;
}

// factors psi_j(skew_mu(a)), memoized and degree-restricted
class FactorCache {
public:
    FactorCache(const GradedSeries& a, int out_deg) : a_(a), deg_(out_deg) {}

    const GradedSeries& get(int j, const Partition& mu) {
        auto key = std::make_pair(j, mu);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        GradedSeries f = adams_graded(j, skew(mu, a_)).restricted(deg_, -kTBig, kTBig);
        return memo_.emplace(std::move(key), std::move(f)).first->second;
    }

    void prefill(const std::vector<const ThetaData*>& data) {
        for (auto* d : data)
            for (auto& [th, cnt] : d->counts) {
                (void)cnt;
                for (auto& [mu, row] : th.entries())
                    for (auto& [j, m] : row.entries()) {
                        (void)m;
                        get(j, mu);
                    }
            }
    }

    int out_deg() const { return deg_; }

private:
    const GradedSeries& a_;
    int deg_;
    std::map<std::pair<int, Partition>, GradedSeries> memo_;
};

GradedSeries eval_theta(const TwoPartition& th, FactorCache& fc) {
    GradedSeries r = GradedSeries::one(fc.out_deg(), kTBig);
    for (auto& [mu, row] : th.entries())
        for (auto& [j, m] : row.entries()) {
            const GradedSeries& f = fc.get(j, mu);
            for (int k = 0; k < m; ++k) r = r * f;
        }
    return r;
}

GradedSeries sum_graph_contributions(const std::vector<const ThetaData*>& data, FactorCache& fc,
                                     int threads) {
    GradedSeries total = GradedSeries::zero(fc.out_deg(), kTBig);
    if (data.empty()) return total;
    fc.prefill(data);
    threads = std::max(1, std::min<int>(threads, (int)data.size()));
    std::vector<GradedSeries> parts((size_t)threads, total);
    auto work = [&](int tid) {
        for (size_t i = tid; i < data.size(); i += threads) {
            const ThetaData& d = *data[i];
            GradedSeries contrib = GradedSeries::zero(fc.out_deg(), kTBig);
            for (auto& [th, cnt] : d.counts)
                contrib += eval_theta(th, fc).scaled(Rational(cnt) / d.aut_order);
            parts[tid] += contrib.shift_t(d.edges);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (auto& p : parts) total += p;
    return total;
}

int env_threads() {
    if (const char* s = std::getenv("SERREQ_THREADS")) {
        int v = std::atoi(s);
        if (v >= 1) return v;
    }
    return 1;
}

} // namespace

GradedSeries theorem_B(const InputSeries& in, const FormulaTrunc& tr) {
    check_graded_inputs(in, tr, "theorem_B");
    const GradedGraphSet& set = graded_graph_set(tr.max_deg, tr.g_max);
    int container = tr.max_deg + 2 * tr.g_max;
    GradedSeries a = in.assemble(container, tr.g_max, std::nullopt);
    FactorCache fc(a, tr.max_deg);
    std::vector<const ThetaData*> ptrs;
    for (auto& d : set.graphs) ptrs.push_back(&d);
    int threads = tr.threads > 0 ? tr.threads : env_threads();
    GradedSeries total = sum_graph_contributions(ptrs, fc, threads);
    return total.restricted(tr.max_deg, -1, tr.g_max - 1);
}

GradedSeries theorem_B_theta(const InputSeries& in, const FormulaTrunc& tr) {
    check_graded_inputs(in, tr, "theorem_B");
    const GradedGraphSet& set = graded_graph_set(tr.max_deg, tr.g_max);
    // orbisum-grouped path: collect O(Theta) across graphs first
    std::map<TwoPartition, Rational> O;
    for (auto& d : set.graphs)
        for (auto& [th, cnt] : d.counts) O[th] += Rational(cnt) / d.aut_order;
    int container = tr.max_deg + 2 * tr.g_max;
    GradedSeries a = in.assemble(container, tr.g_max, std::nullopt);
    FactorCache fc(a, tr.max_deg);
    GradedSeries total = GradedSeries::zero(tr.max_deg, kTBig);
    for (auto& [th, coef] : O) {
        if (th.hnorm() % 2 != 0) continue;
        total += eval_theta(th, fc).scaled(coef).shift_t(th.hnorm() / 2);
    }
    return total.restricted(tr.max_deg, -1, tr.g_max - 1);
}

GradedSeries gk_formula(const InputSeries& in, const FormulaTrunc& tr) {
    check_graded_inputs(in, tr, "gk_formula");
    int W = std::max(0, tr.max_deg + 2 * (tr.g_max - 1));
    int container = 3 * W + 3;
    GradedSeries a = in.assemble(container, tr.g_max, W);
    GradedSeries big = exp_series(a);
    big = gk_operator(big);
    big = log_series(big);
    return big.restricted(tr.max_deg, -1, tr.g_max - 1);
}

SymFunc abar0_from_inputs(const InputSeries& in, int max_deg) {
    InputSeries only0;
    if (in.has(0)) only0.set(0, in.at(0));
    FormulaTrunc tr;
    tr.max_deg = max_deg;
    tr.g_max = 0;
    return gk_formula(only0, tr).slice(-1);
}

std::pair<SymFunc, SymFunc> caterpillar_insertions(const SymFunc& a0) {
    if (!a0.is_zero() && a0.min_degree() < 3)
        throw support_error("caterpillar_insertions: a_0 must have minimum degree 3");
    int n = a0.max_deg();
    SymFunc a0pp = partial(1, partial(1, a0));
    SymFunc a0dot = partial(2, a0);
    SymFunc c1 = invert(SymFunc::one(n) - a0pp);
    SymFunc c2 = (SymFunc::one(n) + a0dot.scaled(Rational(2))) *
                 invert(SymFunc::one(n) - adams(2, a0pp));
    return {c1, c2};
}

SymFunc w_insertion(int h, const Partition& mu, const InputSeries& in, const SymFunc& c1,
                    const SymFunc& c2, int max_deg) {
    if (2 * h - 2 + mu.size() > 0) return skew(mu, in.at(h)).truncated(max_deg);
    if (h == 0 && mu == Partition::single(1, 2)) return c1.truncated(max_deg);
    if (h == 0 && mu == Partition::single(2, 1)) return c2.truncated(max_deg);
    std::ostringstream os;
    os << "w_insertion: unstable pair h = " << h << ", mu = (" << mu.to_string() << ")";
    throw undefined_insertion_error(os.str());
}

// ---------------- fixed-genus formulas ----------------

namespace {

struct FixedGraphData {
    int base_b1 = 0;
    long long aut_order = 0;
    std::vector<std::pair<WeightedTuple, long long>> counts;
    std::vector<std::pair<int, int>> vertex_profile; // (weight, valence) of the subdivided graph
};

const std::vector<FixedGraphData>& fixed_graph_set(int g) {
    static std::map<int, std::vector<FixedGraphData>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    std::vector<FixedGraphData> set;
    for (auto& vg : enumerate_stable_graphs(g)) {
        VGraph hat = subdivide(vg);
        FixedGraphData d;
        d.base_b1 = vg.g.b1();
        auto auts = automorphisms(hat);
        d.aut_order = (long long)auts.size();
        std::map<WeightedTuple, long long> acc;
        for (auto& tau : auts) acc[cycle_type_weighted(tau, hat)]++;
        d.counts.assign(acc.begin(), acc.end());
        for (int v = 0; v < hat.g.nv; ++v) d.vertex_profile.push_back({hat.w[v], hat.g.valence(v)});
        set.push_back(std::move(d));
    }
    return cache.emplace(g, std::move(set)).first->second;
}

RequiredDegrees required_fixed_impl(int g, int max_deg, int gamma /* -1 = all */) {
    RequiredDegrees rd;
    rd.abar0_degree = max_deg + 1;
    rd.per_genus[0] = max_deg + 2; // caterpillar insertions need a_0''
    for (auto& d : fixed_graph_set(g)) {
        if (gamma >= 0 && d.base_b1 != gamma) continue;
        // residual slack: degree left after every other vertex takes its
        // cheapest insertion
        int total_min = 0;
        std::vector<int> minresid;
        for (auto& [h, val] : d.vertex_profile) {
            int m = (h == 0 && val == 2) ? 0 : std::max(0, std::max(0, 3 - 2 * h) - val);
            minresid.push_back(m);
            total_min += m;
        }
        for (size_t i = 0; i < d.vertex_profile.size(); ++i) {
            auto [h, val] = d.vertex_profile[i];
            if (h == 0 && val == 2) continue; // caterpillar slot
            int slack = max_deg - (total_min - minresid[i]);
            if (slack < 0) continue;
            int need = val + slack;
            auto it = rd.per_genus.find(h);
            if (it == rd.per_genus.end())
                rd.per_genus[h] = need;
            else
                it->second = std::max(it->second, need);
        }
    }
    return rd;
}

SymFunc fixed_genus_sum(int g, int gamma, const InputSeries& in, int max_deg,
                        const SymFunc* abar0) {
    if (g < 2) throw std::invalid_argument("fixed-genus formula needs g >= 2");
    RequiredDegrees rd = required_fixed_impl(g, max_deg, gamma);
    for (auto& [h, need] : rd.per_genus) {
        if (in.available_degree(h) < need) {
            std::ostringstream os;
            os << "theorem_A/ct: input a_" << h << " available to degree "
               << in.available_degree(h) << " but " << rd.to_string();
            throw truncation_error(os.str());
        }
    }
    auto [c1, c2] = caterpillar_insertions(in.at(0).truncated(max_deg + 2));
    auto insertion = [&](int h, const Partition& mu) {
        return w_insertion(h, mu, in, c1, c2, max_deg);
    };
    SymFunc total(max_deg);
    for (auto& d : fixed_graph_set(g)) {
        if (gamma >= 0 && d.base_b1 != gamma) continue;
        SymFunc contrib(max_deg);
        for (auto& [tuple, cnt] : d.counts)
            contrib += w2_act_weighted(tuple, insertion, max_deg).scaled(Rational(cnt));
        total += contrib.scaled(Rational(1) / d.aut_order);
    }
    SymFunc ab0 = abar0 ? abar0->truncated(max_deg + 1)
                        : abar0_from_inputs(in, max_deg + 1);
    return attach_rational_tails(total, ab0);
}

} // namespace

RequiredDegrees required_degrees_fixed(int g, int max_deg) {
    return required_fixed_impl(g, max_deg, -1);
}

SymFunc theorem_A(int g, const InputSeries& in, int max_deg, const SymFunc* abar0) {
    return fixed_genus_sum(g, -1, in, max_deg, abar0);
}

SymFunc theorem_ct(int g, int gamma, const InputSeries& in, int max_deg, const SymFunc* abar0) {
    if (gamma < 0) throw std::invalid_argument("theorem_ct: gamma must be >= 0");
    return fixed_genus_sum(g, gamma, in, max_deg, abar0);
}

SymFunc attach_rational_tails(const SymFunc& f, const SymFunc& abar0, bool inverse) {
    int n = f.max_deg();
    SymFunc tail = partial(1, abar0).truncated(n);
    if (!tail.is_zero() && tail.min_degree() < 2)
        throw plethysm_base_error("attach_rational_tails: abar_0' must start in degree 2");
    if (!inverse) return plethysm(f, SymFunc::p(1, n) + tail);
    // plethystic reversion of p_1 + tail, then compose
    SymFunc u = SymFunc::p(1, n);
    for (int i = 0; i < n + 1; ++i) u = SymFunc::p(1, n) - plethysm(tail, u);
    return plethysm(f, u);
}

// ---------------- torus-fixed stable maps ----------------

GradedSeries theorem_C(const TorusGraph& T, const std::vector<long long>& beta,
                       const GradedSeries& abar, const FormulaTrunc& tr) {
    auto classes = enumerate_decorated(T, beta);
    int maxval = 0;
    for (auto& d : classes)
        for (int v = 0; v < d.g.nv; ++v) maxval = std::max(maxval, d.g.valence(v));
    if (abar.max_deg() < tr.max_deg + maxval) {
        std::ostringstream os;
        os << "theorem_C: abar available to degree " << abar.max_deg() << " but needs "
           << tr.max_deg + maxval;
        throw truncation_error(os.str());
    }
    if (abar.t_max() < tr.g_max - 1)
        throw truncation_error("theorem_C: abar t-range is below the requested genus window");
    FactorCache fc(abar, tr.max_deg);
    GradedSeries total = GradedSeries::zero(tr.max_deg, kTBig);
    for (auto& d : classes) {
        auto auts = automorphisms(d);
        std::map<TwoPartition, long long> acc;
        for (auto& tau : auts) acc[cycle_type(tau, d.g)]++;
        GradedSeries contrib = GradedSeries::zero(tr.max_deg, kTBig);
        for (auto& [th, cnt] : acc)
            contrib += eval_theta(th, fc).scaled(Rational(cnt) / (long long)auts.size());
        total += contrib.shift_t(d.g.ne());
    }
    return total.restricted(tr.max_deg, -1, tr.g_max - 1);
}

// ---------------- core functional equation ----------------

GradedSeries theorem_core(const InputSeries& in, const std::map<int, SymFunc>& ct_series,
                          const FormulaTrunc& tr) {
    check_graded_inputs(in, tr, "theorem_core");
    int N = tr.max_deg;
    int container = N + 2 * tr.g_max + 2;
    GradedSeries a = in.assemble(container, tr.g_max, std::nullopt);

    // minimum-valence-3 skeletons, barycentrically subdivided; the b1 <= 1
    // families (trees, cycles) cannot be produced by a finite skeleton sum
    // and are handled separately below
    MultigraphOptions opt;
    opt.max_edges = std::max(0, 3 * (tr.g_max - 1));
    opt.max_vertices = std::max(1, 2 * (tr.g_max - 1));
    opt.max_b1 = tr.g_max;
    opt.keep = [](const Graph& g) {
        if (g.ne() == 0) return false;
        for (int v = 0; v < g.nv; ++v)
            if (g.valence(v) < 3) return false;
        return g.b1() >= 2;
    };

    // chain insertions: b_1 = 1/(t(1 - t a'')), b_2 = (1 + 2t a-dot)/(t(1 - psi_2(t a'')))
    int vmax_bound = std::max(1, 2 * (tr.g_max - 1)) + opt.max_edges;
    int bcap = std::max(0, N + 2 * (tr.g_max - 1)) + 2 * vmax_bound + 4;
    GradedSeries a_cap = in.assemble(container, tr.g_max, bcap);
    GradedSeries t_app = partial(1, partial(1, a_cap)).shift_t(1); // t * a''
    GradedSeries t_adot = partial(2, a_cap).shift_t(1);            // t * a-dot
    GradedSeries one_b = GradedSeries::one(container, kTBig, bcap);
    GradedSeries b1 = invert(one_b - t_app).shift_t(-1);
    GradedSeries b2 = ((one_b + t_adot.scaled(Rational(2))) *
                       invert(one_b - adams_graded(2, t_app)))
                          .shift_t(-1);

    std::map<std::pair<int, Partition>, GradedSeries> bfactors;
    auto b_factor = [&](int j, const Partition& mu) -> const GradedSeries& {
        auto key = std::make_pair(j, mu);
        auto it = bfactors.find(key);
        if (it != bfactors.end()) return it->second;
        const GradedSeries& base = (mu == Partition::single(1, 2)) ? b1 : b2;
        GradedSeries f = adams_graded(j, base).restricted(N, -kTBig, kTBig);
        return bfactors.emplace(std::move(key), std::move(f)).first->second;
    };

    FactorCache fc(a, N);
    GradedSeries core_sum = GradedSeries::zero(N, kTBig);
    for (const Graph& skel : enumerate_connected_multigraphs(opt)) {
        Graph hat = subdivide(VGraph{skel, std::vector<int>(skel.nv, 0)}).g;
        auto auts = automorphisms(hat);
        std::map<TwoPartition, long long> acc;
        for (auto& tau : auts) acc[cycle_type(tau, hat)]++;
        GradedSeries contrib = GradedSeries::zero(N, kTBig);
        for (auto& [th, cnt] : acc) {
            GradedSeries term = GradedSeries::one(N, kTBig);
            for (auto& [mu, row] : th.entries())
                for (auto& [j, m] : row.entries()) {
                    const GradedSeries& f =
                        (mu.size() == 2) ? b_factor(j, mu) : fc.get(j, mu);
                    for (int k = 0; k < m; ++k) term = term * f;
                }
            contrib += term.scaled(Rational(cnt) / (long long)auts.size());
        }
        core_sum += contrib.shift_t(hat.ne()).restricted(N, -kTBig, kTBig);
    }

    // cycle family: the only graph-genus-1 cores, summed directly
    int lmax = N + tr.g_max;
    for (int len = 1; len <= lmax; ++len) {
        ThetaData d = theta_data(Graph::cycle(len));
        GradedSeries contrib = GradedSeries::zero(N, kTBig);
        for (auto& [th, cnt] : d.counts)
            contrib += eval_theta(th, fc).scaled(Rational(cnt) / d.aut_order);
        core_sum += contrib.shift_t(len);
    }

    // tails through compact-type series: T = p_1 + sum_g (ct_g)' t^g
    GradedSeries tails = GradedSeries::from_symfunc(SymFunc::p(1, N), 0, kTBig);
    GradedSeries trees = GradedSeries::zero(N, kTBig);
    for (auto& [g, ct] : ct_series) {
        if (g > tr.g_max) continue;
        tails += GradedSeries::from_symfunc(partial(1, ct).truncated(N), g, kTBig);
        trees += GradedSeries::from_symfunc(ct.truncated(N), g - 1, kTBig);
    }
    GradedSeries total = trees + plethysm_graded(core_sum, tails);
    return total.restricted(N, -1, tr.g_max - 1);
}

} // namespace serreq
