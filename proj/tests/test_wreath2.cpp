#include <doctest.h>

#include <random>

#include "serreq/wreath2.hpp"

using namespace serreq;

namespace {

// brute-force wreath product S_i wr S_n as permutations: element =
// (g_1..g_n; sigma), acting on n blocks of size i.  Used to cross-check the
// closed-form class sizes.
struct WreathGroup {
    int i, n;
    std::vector<std::vector<int>> elements; // permutations of i*n points

    static WreathGroup build(int i, int n) {
        WreathGroup W{i, n, {}};
        std::vector<std::vector<int>> blocks; // all permutations of [i]
        std::vector<int> base(i);
        for (int k = 0; k < i; ++k) base[k] = k;
        std::vector<int> perm = base;
        do {
            blocks.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::vector<int> outer(n);
        for (int k = 0; k < n; ++k) outer[k] = k;
        std::vector<int> sigma = outer;
        do {
            std::vector<int> choice(n, 0);
            while (true) {
                std::vector<int> full(i * n);
                for (int b = 0; b < n; ++b)
                    for (int k = 0; k < i; ++k)
                        full[b * i + k] = sigma[b] * i + blocks[choice[b]][k];
                W.elements.push_back(full);
                int pos = 0;
                while (pos < n && ++choice[pos] == (int)blocks.size()) choice[pos++] = 0;
                if (pos == n) break;
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return W;
    }
};

// cycle type of a wreath element per the product-along-cycles recipe
TwoPartition wreath_cycle_type(const std::vector<int>& full, int i, int n) {
    TwoPartition th;
    // recover sigma from block images
    std::vector<int> sigma(n);
    for (int b = 0; b < n; ++b) sigma[b] = full[b * i] / std::max(i, 1);
    if (i == 0) {
        for (int b = 0; b < n; ++b) sigma[b] = full[b]; // degenerate: S_0 wr S_n = S_n on points
    }
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
        if (seen[b]) continue;
        int len = 0, u = b;
        do {
            seen[u] = 1;
            u = sigma[u];
            ++len;
        } while (u != b);
        // product of the block maps around the cycle = full^len restricted
        Partition mu;
        std::vector<char> seenpt(i, 0);
        for (int k = 0; k < i; ++k) {
            if (seenpt[k]) continue;
            int clen = 0, p = b * i + k;
            do {
                seenpt[p - b * i] = 1;
                for (int step = 0; step < len; ++step) p = full[p];
                ++clen;
            } while (p != b * i + k);
            mu.add(clen, 1);
        }
        th.add_part(mu, len);
    }
    return th;
}

} // namespace

TEST_CASE("two-partition bookkeeping") {
    TwoPartition th;
    th.add(Partition::single(1), Partition::single(1, 2));
    th.add(Partition::single(2), Partition::single(3));
    CHECK(th.hnorm() == 1 * 2 + 3 * 2);
    GeneralizedPartition nu = th.target_profile();
    // nu_i counts |Theta(mu)| (partition size = vertices in the cycles)
    CHECK(nu.mult(1) == 2);
    CHECK(nu.mult(2) == 3);
    TwoPartition sum = th + th;
    CHECK(sum.hnorm() == 2 * th.hnorm());
    CHECK(sum.at(Partition::single(1)) == Partition::single(1, 4));
}

TEST_CASE("conjugacy classes of S_nu: stated small cases") {
    // nu = (1^2): two classes of S_2, sizes 1 and 1
    auto cl = two_partitions_of(GeneralizedPartition::single(1, 2));
    REQUIRE(cl.size() == 2);
    CHECK(cl[0].second + cl[1].second == 2);
    // nu = (2^1): S_2 wr S_1 = S_2
    cl = two_partitions_of(GeneralizedPartition::single(2, 1));
    REQUIRE(cl.size() == 2);
    CHECK(cl[0].second + cl[1].second == 2);
    // nu = (2^2): S_2 wr S_2 of order 8, 5 classes
    cl = two_partitions_of(GeneralizedPartition::single(2, 2));
    REQUIRE(cl.size() == 5);
    Integer total = 0;
    for (auto& [th, sz] : cl) total += sz;
    CHECK(total == 8);
}

TEST_CASE("class sizes against brute-force wreath enumeration") {
    // all (i, n) with |S_i wr S_n| <= 48
    for (auto [i, n] : std::vector<std::pair<int, int>>{
             {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}}) {
        WreathGroup W = WreathGroup::build(i, n);
        std::map<TwoPartition, long long> counts;
        for (auto& el : W.elements) counts[wreath_cycle_type(el, i, n)]++;
        auto cl = two_partitions_of(GeneralizedPartition::single(i, n));
        REQUIRE(cl.size() == counts.size());
        for (auto& [th, sz] : cl) {
            REQUIRE(counts.count(th));
            CHECK(Integer(counts[th]) == sz);
        }
    }
    // a genuine product case: nu = (1^1 2^1) = S_1 x S_2
    auto cl = two_partitions_of(GeneralizedPartition::single(1, 1).odot(
        GeneralizedPartition::single(2, 1)));
    Integer total = 0;
    for (auto& [th, sz] : cl) total += sz;
    CHECK(total == 2);
    CHECK(cl.size() == 2);
}

TEST_CASE("class sizes sum to the group order for random profiles") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> part(0, 4), mult(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        GeneralizedPartition nu;
        for (int tries = 0; tries < 3; ++tries) {
            int m = mult(rng);
            if (m > 0) nu.add(part(rng), m);
        }
        Integer total = 0;
        for (auto& [th, sz] : two_partitions_of(nu)) {
            CHECK(th.target_profile() == nu);
            total += sz;
        }
        CHECK(total == nu.group_order());
    }
}

TEST_CASE("semigroup algebra") {
    TwoPartition a, b;
    a.add(Partition::single(1), Partition::single(1));
    b.add(Partition::single(1), Partition::single(1));
    W2Elem x = W2Elem::monomial(a, 100), y = W2Elem::monomial(b, 100);
    W2Elem xy = x * y;
    TwoPartition expect;
    expect.add(Partition::single(1), Partition::single(1, 2));
    CHECK(xy.coeff(expect) == 1);

    // p_2((1)) * p_1((2)) keeps slots separate
    TwoPartition c, d;
    c.add(Partition::single(1), Partition::single(2));
    d.add(Partition::single(2), Partition::single(1));
    W2Elem cd = W2Elem::monomial(c, 100) * W2Elem::monomial(d, 100);
    TwoPartition expect2;
    expect2.add(Partition::single(1), Partition::single(2));
    expect2.add(Partition::single(2), Partition::single(1));
    CHECK(cd.coeff(expect2) == 1);

    // unit
    W2Elem one = W2Elem::one(100);
    CHECK(one * x == x);

    // ||Theta + Theta'|| additivity on random monomials
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> pick(1, 3);
    for (int i = 0; i < 100; ++i) {
        TwoPartition s, t;
        s.add(Partition::single(pick(rng)), Partition::single(pick(rng)));
        t.add(Partition::single(pick(rng)), Partition::single(pick(rng), pick(rng)));
        CHECK((s + t).hnorm() == s.hnorm() + t.hnorm());
    }
}

TEST_CASE("the enriched action on graded series") {
    int N = 5;
    GradedSeries a(N, -1, 1 << 20);
    // random-ish but fixed input with slices at t^-1 and t^0
    SymFunc s0(N);
    s0.set_coeff(Partition::from_parts({2, 1}), MotivicScalar(2));
    s0.set_coeff(Partition::single(1, 3), MotivicScalar::lefschetz());
    SymFunc s1(N);
    s1.set_coeff(Partition::single(1), MotivicScalar(1));
    a.set_slice(-1, s0);
    a.set_slice(0, s1);

    // p_1(empty) acts as the identity
    TwoPartition unitish;
    unitish.add(Partition(), Partition::single(1));
    CHECK(w2_act(unitish, a) == a);

    // p_2((1)) = graded psi_2 of the first partial
    TwoPartition th;
    th.add(Partition::single(1), Partition::single(2));
    CHECK(w2_act(th, a) == adams_graded(2, skew(Partition::single(1), a)));

    // loop character: (1/2)(p_1((1^2)) + p_1((2))) acts as (a'' + 2 a-dot)/2
    W2Elem loopchar(100);
    TwoPartition t1, t2;
    t1.add(Partition::single(1, 2), Partition::single(1));
    t2.add(Partition::single(2), Partition::single(1));
    loopchar.add_term(t1, Rational(1, 2));
    loopchar.add_term(t2, Rational(1, 2));
    GradedSeries got = w2_act(loopchar, a);
    GradedSeries expect =
        (skew(Partition::single(1, 2), a) + skew(Partition::single(2), a)).scaled(Rational(1, 2));
    CHECK(got == expect);

    // algebra homomorphism in the first argument
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> pick(1, 2);
    for (int i = 0; i < 60; ++i) {
        TwoPartition u, v;
        u.add(Partition::single(pick(rng)), Partition::single(pick(rng)));
        v.add(Partition::single(pick(rng), pick(rng)), Partition::single(pick(rng)));
        W2Elem wu = W2Elem::monomial(u, 100), wv = W2Elem::monomial(v, 100);
        CHECK(w2_act(wu * wv, a) == w2_act(wu, a) * w2_act(wv, a));
    }
}

TEST_CASE("weighted action evaluates insertions per weight") {
    int N = 4;
    SymFunc w0(N), w1(N);
    w0.set_coeff(Partition::single(1, 2), MotivicScalar(1));
    w1.set_coeff(Partition::single(1), MotivicScalar(3));
    auto insertion = [&](int h, const Partition& mu) {
        (void)mu;
        return h == 0 ? w0 : w1;
    };
    WeightedTuple tuple(2);
    tuple[0].add(Partition::single(1), Partition::single(1)); // w0 at weight 0
    tuple[1].add(Partition::single(1), Partition::single(2)); // psi_2(w1) at weight 1
    SymFunc got = w2_act_weighted(tuple, insertion, N);
    CHECK(got == w0 * adams(2, w1));
}

TEST_CASE("forgetful morphisms") {
    TwoPartition th;
    th.add(Partition::from_parts({2, 1}), Partition::single(3)); // p_3((2 1))
    W2Elem w = W2Elem::monomial(th, 100);
    CHECK(w2_forget(w, ForgetMode::vertices, 8) == SymFunc::p(3, 8));
    // phi_2: p_3 o p_{(2,1)} = p_6 p_3
    SymFunc expect = SymFunc::power_sum(Partition::from_parts({6, 3}), 9);
    CHECK(w2_forget(w, ForgetMode::half_edges, 9) == expect);

    // ring homomorphism on random monomial products
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> pick(1, 3);
    for (int i = 0; i < 100; ++i) {
        TwoPartition u, v;
        u.add(Partition::single(pick(rng)), Partition::single(pick(rng)));
        v.add(Partition::single(pick(rng)), Partition::single(pick(rng)));
        W2Elem wu = W2Elem::monomial(u, 100), wv = W2Elem::monomial(v, 100);
        for (auto mode : {ForgetMode::vertices, ForgetMode::half_edges}) {
            CHECK(w2_forget(wu * wv, mode, 12) ==
                  w2_forget(wu, mode, 12) * w2_forget(wv, mode, 12));
        }
    }
}
