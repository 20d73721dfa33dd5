#include "serreq/formulas.hpp"

namespace serreq {

namespace {

// dense univariate integer polynomials in q
using QPoly = std::vector<Integer>;

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

QPoly qp_sub_const(QPoly a, long long c) {
    if (a.empty()) a = {Integer(0)};
    a[0] -= c;
    return a;
}

// exact division, aborting on a nonzero remainder
QPoly qp_div_exact(QPoly num, const QPoly& den) {
    QPoly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Integer(0));
    for (int i = (int)num.size() - 1; i >= (int)den.size() - 1; --i) {
        Integer lead = num[i];
        if (lead == 0) continue;
        if (lead % den.back() != 0)
            throw std::logic_error("genus0_smooth: non-exact division (leading term)");
        Integer c = lead / den.back();
        q[i - den.size() + 1] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i - den.size() + 1 + j] -= c * den[j];
    }
    for (auto& c : num)
        if (c != 0) throw std::logic_error("genus0_smooth: non-exact division (remainder)");
    return q;
}

int moebius(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

// P_d(q) = sum_{e|d} moebius(d/e) (q^e + 1): points of exact degree d on P^1
QPoly point_count_poly(int d) {
    QPoly p(d + 1, Integer(0));
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        int m = moebius(d / e);
        if (m == 0) continue;
        p[e] += m;
        p[0] += m;
    }
    return p;
}

MotivicScalar qpoly_to_scalar(const QPoly& p) {
    MotivicScalar s;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        MotiveMonomial m;
        m.l_exp = (int)k;
        s.set_term(m, Rational(p[k]));
    }
    return s;
}

} // namespace

SymFunc genus0_smooth(int max_deg) {
    if (max_deg < 3)
        throw std::invalid_argument("genus0_smooth: needs max_deg >= 3");
    SymFunc a0(max_deg);
    QPoly pgl2 = {Integer(0), Integer(-1), Integer(0), Integer(1)}; // q^3 - q
    for (int n = 3; n <= max_deg; ++n) {
        for (const auto& mu : partitions_of(n)) {
            QPoly num = {Integer(1)};
            for (auto& [d, m] : mu.entries()) {
                QPoly pd = point_count_poly(d);
                for (int j = 0; j < m; ++j)
                    num = qp_mul(num, qp_sub_const(pd, (long long)j * d));
            }
            QPoly quot = qp_div_exact(num, pgl2);
            MotivicScalar c = qpoly_to_scalar(quot);
            a0.set_coeff(mu, c.scaled(Rational(1) / Rational(mu.z())));
        }
    }
    return a0;
}

} // namespace serreq
