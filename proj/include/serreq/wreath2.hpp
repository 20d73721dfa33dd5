#pragma once

#include <functional>
#include <map>
#include <vector>

#include "serreq/symfunc.hpp"

namespace serreq {

struct undefined_insertion_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finitely supported map Part* -> Part*; empty values are not stored.
/// Indexes a conjugacy class in a product of wreath products S_i wr S_{nu_i}.
class TwoPartition {
public:
    TwoPartition() = default;

    const Partition& at(const Partition& mu) const;
    void add(const Partition& mu, const Partition& theta); // odot into the slot
    void add_part(const Partition& mu, int part);          // one part of size `part`

    bool empty() const { return m_.empty(); }
    const std::map<Partition, Partition>& entries() const { return m_; }

    /// ||Theta|| = sum |Theta(mu)| * |mu|
    int hnorm() const;
    /// nu(Theta): nu_i = sum over |mu| = i of |Theta(mu)|
    GeneralizedPartition target_profile() const;

    TwoPartition operator+(const TwoPartition& o) const; // semigroup sum

    auto operator<=>(const TwoPartition&) const = default;
    std::string to_string() const; // "{mu -> theta, ...}" in exponent-free form

private:
    std::map<Partition, Partition> m_;
};

/// Element of Lambda^[2]: finite rational combination of monomials p_Theta.
class W2Elem {
public:
    explicit W2Elem(int bound = 1 << 20) : bound_(bound) {}

    static W2Elem zero(int bound) { return W2Elem(bound); }
    static W2Elem one(int bound);
    static W2Elem monomial(const TwoPartition& th, int bound);

    int bound() const { return bound_; }
    bool is_zero() const { return t_.empty(); }
    Rational coeff(const TwoPartition& th) const;
    void add_term(const TwoPartition& th, const Rational& c);
    const std::map<TwoPartition, Rational>& terms() const { return t_; }

    W2Elem operator+(const W2Elem& o) const;
    W2Elem operator*(const W2Elem& o) const; // p_Theta * p_Theta' = p_{Theta+Theta'}
    W2Elem scaled(const Rational& c) const;

    bool operator==(const W2Elem& o) const { return t_ == o.t_; }
    std::string to_string() const;

private:
    int bound_; // truncation on ||Theta||
    std::map<TwoPartition, Rational> t_;
};

/// Conjugacy classes of S_nu = prod_i S_i wr S_{nu_i} as 2-partitions with
/// class sizes; sizes sum to prod_i (i!)^{nu_i} nu_i!.
std::vector<std::pair<TwoPartition, Integer>> two_partitions_of(const GeneralizedPartition& nu);

/// centralizer order of the class Theta inside S_{nu(Theta)}
Integer wreath_centralizer_order(const TwoPartition& th);

/// p_n(mu) acting on a genus-graded series: graded-Adams_n of skew_mu;
/// monomials act multiplicatively, extended linearly.
GradedSeries w2_act(const W2Elem& w, const GradedSeries& a);
GradedSeries w2_act(const TwoPartition& th, const GradedSeries& a);

/// Weight-indexed tuples (Theta_0, ..., Theta_g) with rational coefficients;
/// each p_theta(mu) factor at weight h evaluates to psi_theta(w_h^mu) on
/// ungraded insertions.
using WeightedTuple = std::vector<TwoPartition>;
SymFunc w2_act_weighted(const WeightedTuple& tuple,
                        const std::function<SymFunc(int h, const Partition& mu)>& insertion,
                        int max_deg);

enum class ForgetMode { vertices, half_edges };
/// phi_1: p_j(mu) -> p_j;  phi_2: p_j(mu) -> p_j o p_mu
SymFunc w2_forget(const W2Elem& w, ForgetMode mode, int max_deg);

} // namespace serreq
