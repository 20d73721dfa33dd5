#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "serreq/partition.hpp"
#include "serreq/scalar.hpp"

namespace serreq {

struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct plethysm_base_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_invertible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Truncated symmetric function over MotivicScalar in the power-sum basis.
/// Terms are kept in power-sum degree <= max_deg; binary operations take the
/// minimum of the two bounds.  Derivative-type operations lower the reliable
/// bound by the degree they consume.
class SymFunc {
public:
    explicit SymFunc(int max_deg = 0) : n_(max_deg) {}

    static SymFunc zero(int max_deg) { return SymFunc(max_deg); }
    static SymFunc one(int max_deg);
    static SymFunc constant(const MotivicScalar& c, int max_deg);
    /// the monomial p_mu
    static SymFunc power_sum(const Partition& mu, int max_deg);
    static SymFunc p(int i, int max_deg) { return power_sum(Partition::single(i), max_deg); }
    /// complete homogeneous h_n = sum_{mu |- n} p_mu / z_mu
    static SymFunc h(int n, int max_deg);

    int max_deg() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    MotivicScalar coeff(const Partition& mu) const;
    void set_coeff(const Partition& mu, const MotivicScalar& c);
    const std::map<Partition, MotivicScalar>& terms() const { return t_; }

    /// smallest degree with a nonzero term, or max_deg+1 if zero
    int min_degree() const;

    SymFunc truncated(int max_deg) const;
    /// homogeneous piece of degree d
    SymFunc component(int d) const;

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    SymFunc scaled(const MotivicScalar& c) const;
    SymFunc scaled(const Rational& c) const;

    bool operator==(const SymFunc& o) const { return n_ == o.n_ && t_ == o.t_; }
    /// equality of terms ignoring the truncation bounds, up to degree d
    bool same_terms(const SymFunc& o, int d) const;

    std::string to_string() const;

private:
    int n_;
    std::map<Partition, MotivicScalar> t_;
};

/// psi_n: p_j -> p_{jn}, scalars through MotivicScalar::adams.
SymFunc adams(int n, const SymFunc& f);
/// psi_mu = prod_i psi_i^{mu_i}; psi_empty(f) = 1.
SymFunc adams(const Partition& mu, const SymFunc& f);

/// plethysm f o g, p_n o g = psi_n(g); g must have no constant term.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// skew: prod i^{mu_i} * mixed partial by the p_i's; lowers max_deg by |mu|.
SymFunc skew(const Partition& mu, const SymFunc& f);
/// single formal partial d/dp_i; lowers max_deg by i.
SymFunc partial(int i, const SymFunc& f);

/// geometric-series inverse of f = 1 + r, r with zero constant term
SymFunc invert(const SymFunc& f);

/// Hall pairing <p_mu, p_la> = delta z_mu, extended bilinearly.
MotivicScalar hall_pairing(const SymFunc& a, const SymFunc& b);

/// rank specialization p_1 -> x, p_n -> 0: returns n -> e-value, where the
/// e-value is the coefficient of x^n/n!.
std::map<int, MotivicScalar> rank_egf(const SymFunc& f);

// ---- Schur basis (see schur.cpp) ----

/// irreducible character chi^lambda(mu) by Murnaghan--Nakayama, memoized
Integer sym_group_character(const Partition& la, const Partition& mu);
/// s_lambda expanded in power sums
SymFunc schur(const Partition& la, int max_deg);
/// expansion of f in the Schur basis, degree by degree
std::map<Partition, MotivicScalar> to_schur(const SymFunc& f);
SymFunc from_schur(const std::map<Partition, MotivicScalar>& coeffs, int max_deg);
std::string schur_string(const SymFunc& f);

/// Genus-graded series: Laurent coefficients in t, each a SymFunc.
///
/// t_floor is an honest support bound (series are never cut from below);
/// t_max is a truncation cap.  weight_cap, when set, truncates by the
/// stability weight deg + 2*t, which every formula-layer operation on
/// weight-nonnegative series respects.
class GradedSeries {
public:
    GradedSeries(int max_deg, int t_floor, int t_max,
                 std::optional<int> weight_cap = std::nullopt);
    GradedSeries() : GradedSeries(0, 0, 0) {}

    /// zero carries an empty (maximal) support floor; set_slice extends it
    static GradedSeries zero(int max_deg, int t_max,
                             std::optional<int> weight_cap = std::nullopt);
    static GradedSeries one(int max_deg, int t_max,
                            std::optional<int> weight_cap = std::nullopt);
    /// f * t^k
    static GradedSeries from_symfunc(const SymFunc& f, int k, int t_max,
                                     std::optional<int> weight_cap = std::nullopt);

    int max_deg() const { return n_; }
    int t_floor() const { return floor_; }
    int t_max() const { return tmax_; }
    std::optional<int> weight_cap() const { return wcap_; }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, SymFunc>& coeffs() const { return c_; }
    SymFunc slice(int k) const;
    void set_slice(int k, const SymFunc& f);
    MotivicScalar coeff(int k, const Partition& mu) const;

    /// true if every term has deg + 2t >= 1 (stability-positive)
    bool weight_positive() const;
    int min_weight() const; // INT_MAX when zero

    GradedSeries operator-() const;
    GradedSeries& operator+=(const GradedSeries& o);
    GradedSeries& operator-=(const GradedSeries& o);
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    GradedSeries scaled(const MotivicScalar& c) const;
    GradedSeries scaled(const Rational& c) const;

    GradedSeries shift_t(int d) const;
    GradedSeries restricted(int max_deg, int t_min, int t_max) const;
    /// drop terms of stability weight outside [lo, hi]
    GradedSeries weight_slice(int lo, int hi) const;

    bool operator==(const GradedSeries& o) const { return c_ == o.c_; }
    bool same_terms(const GradedSeries& o, int max_deg, int t_min, int t_max) const;

    /// raise the floor to the actual support minimum (always sound: caps
    /// never drop terms below the floor)
    void tighten_floor();

    std::string to_string() const;

private:
    void prune(SymFunc& f, int k) const;
    int n_, floor_, tmax_;
    std::optional<int> wcap_;
    std::map<int, SymFunc> c_;
};

/// graded Adams: p_j -> p_{jn}, t^k -> t^{nk}, scalar adams
GradedSeries adams_graded(int n, const GradedSeries& f);
GradedSeries adams_graded(const Partition& mu, const GradedSeries& f);

GradedSeries skew(const Partition& mu, const GradedSeries& f);
GradedSeries partial(int i, const GradedSeries& f);

/// inverse of f = 1 + r where r has no (deg 0, t <= 0) terms
GradedSeries invert(const GradedSeries& f);

/// graded plethysm: substitutes adams_graded(i, g) for p_i, t-powers of f
/// pass through; every term of g needs deg >= 1 or t >= 1
GradedSeries plethysm_graded(const GradedSeries& f, const GradedSeries& g);

/// Exp(f) = sum_mu psi_mu(f)/z_mu over all partitions; f of positive weight
GradedSeries exp_series(const GradedSeries& f);
/// plethystic inverse of Exp, computed by weight-graded inversion
GradedSeries log_series(const GradedSeries& f);

/// exp(sum_n t^n (n/2 d^2/dp_n^2 + d/dp_{2n})), a finite sum mod truncation
GradedSeries gk_operator(const GradedSeries& f);

} // namespace serreq
