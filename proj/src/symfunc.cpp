#include "serreq/symfunc.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace serreq {

SymFunc SymFunc::one(int max_deg) {
    SymFunc f(max_deg);
    f.set_coeff(Partition(), MotivicScalar(1));
    return f;
}

SymFunc SymFunc::constant(const MotivicScalar& c, int max_deg) {
    SymFunc f(max_deg);
    f.set_coeff(Partition(), c);
    return f;
}

SymFunc SymFunc::power_sum(const Partition& mu, int max_deg) {
    SymFunc f(max_deg);
    if (mu.size() <= max_deg) f.set_coeff(mu, MotivicScalar(1));
    return f;
}

SymFunc SymFunc::h(int n, int max_deg) {
    SymFunc f(max_deg);
    if (n > max_deg) return f;
    for (const auto& mu : partitions_of(n))
        f.set_coeff(mu, MotivicScalar(Rational(1) / Rational(mu.z())));
    return f;
}

MotivicScalar SymFunc::coeff(const Partition& mu) const {
    auto it = t_.find(mu);
    return it == t_.end() ? MotivicScalar() : it->second;
}

void SymFunc::set_coeff(const Partition& mu, const MotivicScalar& c) {
    if (c.is_zero() || mu.size() > n_)
        t_.erase(mu);
    else
        t_[mu] = c;
}

int SymFunc::min_degree() const {
    int m = n_ + 1;
    for (auto& [mu, c] : t_) m = std::min(m, mu.size());
    return m;
}

SymFunc SymFunc::truncated(int max_deg) const {
    SymFunc r(std::min(max_deg, n_));
    for (auto& [mu, c] : t_)
        if (mu.size() <= r.n_) r.t_[mu] = c;
    return r;
}

SymFunc SymFunc::component(int d) const {
    SymFunc r(n_);
    for (auto& [mu, c] : t_)
        if (mu.size() == d) r.t_[mu] = c;
    return r;
}

SymFunc SymFunc::operator-() const {
    SymFunc r(n_);
    for (auto& [mu, c] : t_) r.t_[mu] = -c;
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    n_ = std::min(n_, o.n_);
    for (auto it = t_.begin(); it != t_.end();)
        it = (it->first.size() > n_) ? t_.erase(it) : std::next(it);
    for (auto& [mu, c] : o.t_) {
        if (mu.size() > n_) continue;
        auto it = t_.find(mu);
        if (it == t_.end()) {
            t_[mu] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    SymFunc r(std::min(a.max_deg(), b.max_deg()));
    for (auto& [mu, c] : a.terms()) {
        if (mu.size() > r.max_deg()) continue;
        for (auto& [la, d] : b.terms()) {
            if (mu.size() + la.size() > r.max_deg()) continue;
            Partition m = mu.odot(la);
            MotivicScalar prod = c * d;
            if (prod.is_zero()) continue;
            auto it = r.t_.find(m);
            if (it == r.t_.end()) {
                r.t_[m] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    }
    return r;
}

SymFunc SymFunc::scaled(const MotivicScalar& c) const {
    SymFunc r(n_);
    if (c.is_zero()) return r;
    for (auto& [mu, x] : t_) {
        MotivicScalar y = x * c;
        if (!y.is_zero()) r.t_[mu] = y;
    }
    return r;
}

SymFunc SymFunc::scaled(const Rational& c) const { return scaled(MotivicScalar(c)); }

bool SymFunc::same_terms(const SymFunc& o, int d) const {
    for (auto& [mu, c] : t_)
        if (mu.size() <= d && !(o.coeff(mu) == c)) return false;
    for (auto& [mu, c] : o.t_)
        if (mu.size() <= d && !(coeff(mu) == c)) return false;
    return true;
}

std::string SymFunc::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [mu, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (!mu.empty()) os << "*p[" << mu.to_string() << "]";
    }
    return os.str();
}

SymFunc adams(int n, const SymFunc& f) {
    if (n < 1) throw std::invalid_argument("adams: n must be >= 1");
    if (n == 1) return f;
    SymFunc r(f.max_deg());
    for (auto& [mu, c] : f.terms()) {
        Partition m = mu.stretch(n);
        if (m.size() > r.max_deg()) continue;
        r.set_coeff(m, c.adams(n));
    }
    return r;
}

SymFunc adams(const Partition& mu, const SymFunc& f) {
    SymFunc r = SymFunc::one(f.max_deg());
    for (auto& [i, m] : mu.entries()) {
        SymFunc fi = adams(i, f);
        for (int k = 0; k < m; ++k) r = r * fi;
    }
    return r;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    if (!g.coeff(Partition()).is_zero())
        throw plethysm_base_error("plethysm: base has a constant term");
    int n = std::min(f.max_deg(), g.max_deg());
    SymFunc r(n);
    std::map<int, SymFunc> psig;
    for (auto& [mu, c] : f.terms()) {
        // every p_i slot fills with degree >= i, so |mu| bounds the output
        if (mu.size() > n) continue;
        SymFunc term = SymFunc::constant(c, n);
        for (auto& [i, m] : mu.entries()) {
            auto it = psig.find(i);
            if (it == psig.end()) it = psig.emplace(i, adams(i, g)).first;
            for (int k = 0; k < m && !term.is_zero(); ++k) term = term * it->second;
        }
        r += term;
    }
    return r;
}

SymFunc partial(int i, const SymFunc& f) {
    SymFunc r(f.max_deg());
    for (auto& [mu, c] : f.terms()) {
        int m = mu.mult(i);
        if (m == 0) continue;
        Partition q;
        for (auto& [j, mj] : mu.entries()) q.add(j, j == i ? mj - 1 : mj);
        r += SymFunc::power_sum(q, r.max_deg()).scaled(c.scaled(m));
    }
    return r;
}

SymFunc skew(const Partition& mu, const SymFunc& f) {
    SymFunc r = f;
    Rational pref = 1;
    for (auto& [i, m] : mu.entries()) {
        pref *= ipow(i, m);
        for (int k = 0; k < m; ++k) r = partial(i, r);
    }
    return r.scaled(pref);
}

SymFunc invert(const SymFunc& f) {
    MotivicScalar c0 = f.coeff(Partition());
    if (!(c0 == MotivicScalar(1)))
        throw not_invertible_error("invert: leading coefficient is not 1");
    SymFunc r = SymFunc::one(f.max_deg()) - f;
    if (!r.coeff(Partition()).is_zero())
        throw not_invertible_error("invert: remainder has a constant term");
    SymFunc acc = SymFunc::one(f.max_deg());
    SymFunc pow = SymFunc::one(f.max_deg());
    while (true) {
        pow = pow * r;
        if (pow.is_zero()) break;
        acc += pow;
    }
    return acc;
}

MotivicScalar hall_pairing(const SymFunc& a, const SymFunc& b) {
    MotivicScalar s;
    for (auto& [mu, c] : a.terms()) {
        MotivicScalar d = b.coeff(mu);
        if (!d.is_zero()) s += (c * d).scaled(Rational(mu.z()));
    }
    return s;
}

std::map<int, MotivicScalar> rank_egf(const SymFunc& f) {
    std::map<int, MotivicScalar> out;
    for (auto& [mu, c] : f.terms()) {
        if (mu.empty()) {
            out[0] += c;
        } else if (mu.entries().size() == 1 && mu.entries()[0].first == 1) {
            int n = mu.entries()[0].second;
            out[n] += c.scaled(Rational(factorial(n)));
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second.is_zero()) ? out.erase(it) : std::next(it);
    return out;
}

// ---------------- GradedSeries ----------------

namespace {

constexpr int kTInf = 1 << 24; // sentinel: exact in t

int t_clamp(long long v) {
    if (v > kTInf) return kTInf;
    if (v < -kTInf) return -kTInf;
    return (int)v;
}

std::optional<int> meet(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

} // namespace

GradedSeries::GradedSeries(int max_deg, int t_floor, int t_max, std::optional<int> wcap)
    : n_(max_deg), floor_(t_floor), tmax_(t_max), wcap_(wcap) {}

GradedSeries GradedSeries::zero(int max_deg, int t_max, std::optional<int> wcap) {
    return GradedSeries(max_deg, kTInf, t_max, wcap);
}

GradedSeries GradedSeries::one(int max_deg, int t_max, std::optional<int> wcap) {
    GradedSeries r(max_deg, 0, t_max, wcap);
    r.set_slice(0, SymFunc::one(max_deg));
    return r;
}

GradedSeries GradedSeries::from_symfunc(const SymFunc& f, int k, int t_max,
                                        std::optional<int> wcap) {
    GradedSeries r(f.max_deg(), k, t_max, wcap);
    r.set_slice(k, f);
    return r;
}

// the stored data never loses terms below the floor, so the floor may be
// raised to the actual support minimum
void GradedSeries::tighten_floor() {
    if (c_.empty())
        floor_ = kTInf;
    else
        floor_ = std::max(floor_, c_.begin()->first);
}

void GradedSeries::prune(SymFunc& f, int k) const {
    if (!wcap_) return;
    SymFunc g(f.max_deg());
    for (auto& [mu, c] : f.terms())
        if (mu.size() + 2 * k <= *wcap_) g.set_coeff(mu, c);
    f = g;
}

SymFunc GradedSeries::slice(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? SymFunc::zero(n_) : it->second;
}

void GradedSeries::set_slice(int k, const SymFunc& f) {
    if (k < floor_) floor_ = k; // floors extend, never reject
    if (k > tmax_) {
        c_.erase(k);
        return;
    }
    SymFunc g = f.truncated(n_);
    prune(g, k);
    if (g.is_zero())
        c_.erase(k);
    else
        c_[k] = g;
}

MotivicScalar GradedSeries::coeff(int k, const Partition& mu) const {
    auto it = c_.find(k);
    return it == c_.end() ? MotivicScalar() : it->second.coeff(mu);
}

bool GradedSeries::weight_positive() const { return is_zero() || min_weight() >= 1; }

int GradedSeries::min_weight() const {
    int w = INT_MAX;
    for (auto& [k, f] : c_)
        for (auto& [mu, c] : f.terms()) w = std::min(w, mu.size() + 2 * k);
    return w;
}

GradedSeries GradedSeries::operator-() const {
    GradedSeries r(n_, floor_, tmax_, wcap_);
    for (auto& [k, f] : c_) r.c_[k] = -f;
    r.tighten_floor();
    return r;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    GradedSeries r(std::min(n_, o.n_), std::min(floor_, o.floor_), std::min(tmax_, o.tmax_),
                   meet(wcap_, o.wcap_));
    for (auto& [k, f] : c_)
        if (k <= r.tmax_) r.set_slice(k, f);
    for (auto& [k, f] : o.c_) {
        if (k > r.tmax_) continue;
        SymFunc s = r.slice(k);
        s += f;
        r.set_slice(k, s);
    }
    r.tighten_floor();
    return *this = r;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) { return *this += -o; }

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    int tmax = t_clamp(std::min((long long)a.tmax_ + b.floor_, (long long)b.tmax_ + a.floor_));
    GradedSeries r(std::min(a.n_, b.n_), t_clamp((long long)a.floor_ + b.floor_), tmax,
                   meet(a.wcap_, b.wcap_));
    for (auto& [k1, f1] : a.c_)
        for (auto& [k2, f2] : b.c_) {
            if (k1 + k2 > r.tmax_) continue;
            if (r.wcap_ && f1.min_degree() + f2.min_degree() + 2 * (k1 + k2) > *r.wcap_) continue;
            SymFunc prod = f1 * f2;
            if (prod.is_zero()) continue;
            SymFunc s = r.slice(k1 + k2);
            s += prod;
            r.set_slice(k1 + k2, s);
        }
    r.tighten_floor();
    return r;
}

GradedSeries GradedSeries::scaled(const MotivicScalar& c) const {
    GradedSeries r(n_, floor_, tmax_, wcap_);
    for (auto& [k, f] : c_) r.set_slice(k, f.scaled(c));
    r.tighten_floor();
    return r;
}

GradedSeries GradedSeries::scaled(const Rational& c) const { return scaled(MotivicScalar(c)); }

GradedSeries GradedSeries::shift_t(int d) const {
    GradedSeries r(n_, t_clamp((long long)floor_ + d), t_clamp((long long)tmax_ + d),
                   wcap_ ? std::optional<int>(*wcap_ + 2 * d) : std::nullopt);
    for (auto& [k, f] : c_) r.c_[k + d] = f;
    r.tighten_floor();
    return r;
}

GradedSeries GradedSeries::restricted(int max_deg, int t_min, int t_max) const {
    GradedSeries r(std::min(n_, max_deg), std::max(floor_, t_min), std::min(tmax_, t_max), wcap_);
    for (auto& [k, f] : c_) {
        if (k < t_min || k > r.t_max()) continue;
        r.set_slice(k, f);
    }
    r.tighten_floor();
    return r;
}

GradedSeries GradedSeries::weight_slice(int lo, int hi) const {
    GradedSeries r(n_, floor_, tmax_, wcap_);
    for (auto& [k, f] : c_) {
        SymFunc g(n_);
        for (auto& [mu, c] : f.terms()) {
            int w = mu.size() + 2 * k;
            if (w >= lo && w <= hi) g.set_coeff(mu, c);
        }
        if (!g.is_zero()) r.c_[k] = g;
    }
    r.tighten_floor();
    return r;
}

bool GradedSeries::same_terms(const GradedSeries& o, int max_deg, int t_min, int t_max) const {
    for (int k = t_min; k <= t_max; ++k)
        if (!slice(k).same_terms(o.slice(k), max_deg)) return false;
    return true;
}

std::string GradedSeries::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, f] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "t^" << k << "*(" << f.to_string() << ")";
    }
    return os.str();
}

GradedSeries adams_graded(int n, const GradedSeries& f) {
    if (n < 1) throw std::invalid_argument("adams_graded: n must be >= 1");
    if (n == 1) return f;
    std::optional<int> wcap = f.weight_cap()
        ? std::optional<int>(t_clamp((long long)n * *f.weight_cap()))
        : std::nullopt;
    GradedSeries r(f.max_deg(), t_clamp((long long)n * f.t_floor()),
                   t_clamp((long long)n * f.t_max()), wcap);
    for (auto& [k, g] : f.coeffs()) {
        if ((long long)n * k > (long long)r.t_max()) continue;
        r.set_slice(n * k, adams(n, g));
    }
    r.tighten_floor();
    return r;
}

GradedSeries adams_graded(const Partition& mu, const GradedSeries& f) {
    GradedSeries r = GradedSeries::one(f.max_deg(), f.t_max(), f.weight_cap());
    for (auto& [i, m] : mu.entries()) {
        GradedSeries fi = adams_graded(i, f);
        for (int k = 0; k < m; ++k) r = r * fi;
    }
    return r;
}

GradedSeries skew(const Partition& mu, const GradedSeries& f) {
    // consuming degree costs reliability in the weight direction
    GradedSeries r(f.max_deg(), f.t_floor(), f.t_max(),
                   f.weight_cap() ? std::optional<int>(*f.weight_cap() - mu.size())
                                  : std::nullopt);
    for (auto& [k, g] : f.coeffs()) r.set_slice(k, skew(mu, g));
    r.tighten_floor();
    return r;
}

GradedSeries partial(int i, const GradedSeries& f) {
    return skew(Partition::single(i), f).scaled(Rational(1) / i);
}

GradedSeries invert(const GradedSeries& f) {
    if (!f.weight_cap() && f.t_max() >= kTInf)
        throw not_invertible_error("invert: graded inverse needs a weight cap or finite t cap");
    if (!f.weight_cap() && f.t_floor() < 0)
        throw not_invertible_error(
            "invert: below-zero t support needs a weight cap for a sound truncation");
    if (!(f.coeff(0, Partition()) == MotivicScalar(1)))
        throw not_invertible_error("invert: leading (t^0, deg 0) coefficient is not 1");
    GradedSeries r = GradedSeries::one(f.max_deg(), f.t_max(), f.weight_cap()) - f;
    for (auto& [k, g] : r.coeffs())
        if (k <= 0 && !g.coeff(Partition()).is_zero())
            throw not_invertible_error("invert: remainder has a (deg 0, t <= 0) term");
    GradedSeries acc = GradedSeries::one(f.max_deg(), f.t_max(), f.weight_cap());
    GradedSeries pow = acc;
    while (true) {
        pow = pow * r;
        if (pow.is_zero()) break;
        acc += pow;
    }
    return acc;
}

GradedSeries plethysm_graded(const GradedSeries& f, const GradedSeries& g) {
    for (auto& [k, s] : g.coeffs())
        if (k <= 0 && s.min_degree() == 0)
            throw plethysm_base_error("plethysm_graded: base has a (deg 0, t <= 0) term");
    GradedSeries r(std::min(f.max_deg(), g.max_deg()),
                   t_clamp((long long)f.t_floor() + std::min(0, g.t_floor())),
                   std::min(f.t_max(), g.t_max()), meet(f.weight_cap(), g.weight_cap()));
    std::map<int, GradedSeries> psig;
    for (auto& [k, s] : f.coeffs()) {
        for (auto& [mu, c] : s.terms()) {
            GradedSeries term = GradedSeries::from_symfunc(SymFunc::constant(c, r.max_deg()),
                                                            k, r.t_max(), r.weight_cap());
            for (auto& [i, m] : mu.entries()) {
                auto it = psig.find(i);
                if (it == psig.end()) it = psig.emplace(i, adams_graded(i, g)).first;
                for (int j = 0; j < m && !term.is_zero(); ++j) term = term * it->second;
            }
            r += term.restricted(r.max_deg(), -kTInf, r.t_max());
        }
    }
    return r;
}

GradedSeries exp_series(const GradedSeries& f) {
    if (!f.weight_positive())
        throw plethysm_base_error("exp_series: input must have positive stability weight");
    if (!f.weight_cap() && (f.t_max() >= kTInf || f.t_floor() < 0))
        throw plethysm_base_error(
            "exp_series: needs a weight cap, or nonnegative t support with a finite t cap");
    int wbound = f.weight_cap() ? *f.weight_cap() : f.max_deg() + 2 * std::max(f.t_max(), 0);
    GradedSeries acc = GradedSeries::one(f.max_deg(), f.t_max(), f.weight_cap());
    for (int i = 1; i <= wbound; ++i) {
        GradedSeries fi = adams_graded(i, f);
        if (fi.is_zero()) continue;
        GradedSeries factor = GradedSeries::one(f.max_deg(), f.t_max(), f.weight_cap());
        GradedSeries pow = factor;
        Rational coef = 1;
        for (int m = 1; m * i <= wbound; ++m) {
            pow = pow * fi;
            if (pow.is_zero()) break;
            coef /= Rational(i) * m;
            factor += pow.scaled(coef);
        }
        acc = acc * factor;
    }
    return acc;
}

GradedSeries log_series(const GradedSeries& g) {
    if (!(g.coeff(0, Partition()) == MotivicScalar(1)))
        throw plethysm_base_error("log_series: input must be 1 + higher order");
    GradedSeries rest = g - GradedSeries::one(g.max_deg(), g.t_max(), g.weight_cap());
    if (!rest.weight_positive())
        throw plethysm_base_error("log_series: input minus 1 must have positive weight");
    if (!g.weight_cap() && (g.t_max() >= kTInf || g.t_floor() < 0))
        throw plethysm_base_error(
            "log_series: needs a weight cap, or nonnegative t support with a finite t cap");
    int wbound = g.weight_cap() ? *g.weight_cap() : g.max_deg() + 2 * std::max(g.t_max(), 0);
    GradedSeries f = GradedSeries::zero(g.max_deg(), g.t_max(), g.weight_cap());
    for (int w = 1; w <= wbound; ++w) {
        GradedSeries err =
            (rest + GradedSeries::one(g.max_deg(), g.t_max(), g.weight_cap()) - exp_series(f))
                .weight_slice(w, w);
        f += err;
    }
    return f;
}

GradedSeries gk_operator(const GradedSeries& f) {
    auto apply_D = [](const GradedSeries& x) {
        GradedSeries out(x.max_deg(), x.t_floor(), x.t_max(), x.weight_cap());
        for (int n = 1; 2 * n <= x.max_deg(); ++n) {
            GradedSeries term = partial(n, partial(n, x)).scaled(Rational(n) / 2) +
                                partial(2 * n, x);
            if (term.is_zero()) continue;
            out += term.shift_t(n).restricted(x.max_deg(), -kTInf, x.t_max());
        }
        return out;
    };
    GradedSeries acc = f;
    GradedSeries cur = f;
    Rational inv_fact = 1;
    for (int k = 1;; ++k) {
        cur = apply_D(cur);
        if (cur.is_zero()) break;
        inv_fact /= k;
        acc += cur.scaled(inv_fact);
    }
    return acc;
}

} // namespace serreq
