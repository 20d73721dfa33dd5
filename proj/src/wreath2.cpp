#include "serreq/wreath2.hpp"

#include <algorithm>
#include <sstream>

namespace serreq {

const Partition& TwoPartition::at(const Partition& mu) const {
    static const Partition kEmpty;
    auto it = m_.find(mu);
    return it == m_.end() ? kEmpty : it->second;
}

void TwoPartition::add(const Partition& mu, const Partition& theta) {
    if (theta.empty()) return;
    auto it = m_.find(mu);
    if (it == m_.end())
        m_[mu] = theta;
    else
        it->second = it->second.odot(theta);
}

void TwoPartition::add_part(const Partition& mu, int part) {
    add(mu, Partition::single(part));
}

int TwoPartition::hnorm() const {
    int s = 0;
    for (auto& [mu, th] : m_) s += th.size() * mu.size();
    return s;
}

GeneralizedPartition TwoPartition::target_profile() const {
    GeneralizedPartition nu;
    for (auto& [mu, th] : m_) nu.add(mu.size(), th.size());
    return nu;
}

TwoPartition TwoPartition::operator+(const TwoPartition& o) const {
    TwoPartition r = *this;
    for (auto& [mu, th] : o.m_) r.add(mu, th);
    return r;
}

std::string TwoPartition::to_string() const {
    if (m_.empty()) return "{}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [mu, th] : m_) {
        if (!first) os << ", ";
        first = false;
        os << "(" << mu.to_string() << ") -> (" << th.to_string() << ")";
    }
    os << "}";
    return os.str();
}

W2Elem W2Elem::one(int bound) {
    W2Elem w(bound);
    w.t_[TwoPartition()] = 1;
    return w;
}

W2Elem W2Elem::monomial(const TwoPartition& th, int bound) {
    W2Elem w(bound);
    if (th.hnorm() <= bound) w.t_[th] = 1;
    return w;
}

Rational W2Elem::coeff(const TwoPartition& th) const {
    auto it = t_.find(th);
    return it == t_.end() ? Rational(0) : it->second;
}

void W2Elem::add_term(const TwoPartition& th, const Rational& c) {
    if (th.hnorm() > bound_) return;
    auto it = t_.find(th);
    if (it == t_.end()) {
        if (c != 0) t_[th] = c;
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

W2Elem W2Elem::operator+(const W2Elem& o) const {
    W2Elem r(std::min(bound_, o.bound_));
    for (auto& [th, c] : t_) r.add_term(th, c);
    for (auto& [th, c] : o.t_) r.add_term(th, c);
    return r;
}

W2Elem W2Elem::operator*(const W2Elem& o) const {
    W2Elem r(std::min(bound_, o.bound_));
    for (auto& [a, ca] : t_)
        for (auto& [b, cb] : o.t_) r.add_term(a + b, ca * cb);
    return r;
}

W2Elem W2Elem::scaled(const Rational& c) const {
    W2Elem r(bound_);
    if (c == 0) return r;
    for (auto& [th, x] : t_) r.t_[th] = x * c;
    return r;
}

std::string W2Elem::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [th, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")*p" << th.to_string();
    }
    return os.str();
}

namespace {

// all 2-partition rows over the partitions of size i whose sizes sum to k,
// i.e. maps {mu : |mu| = i} -> Part* with sum |row(mu)| = k
void enumerate_rows(const std::vector<Partition>& mus, size_t idx, int remaining,
                    TwoPartition& acc, std::vector<TwoPartition>& out) {
    if (idx == mus.size()) {
        if (remaining == 0) out.push_back(acc);
        return;
    }
    if (idx + 1 == mus.size()) {
        // last slot takes everything left
        for (const auto& th : partitions_of(remaining)) {
            TwoPartition t = acc;
            t.add(mus[idx], th);
            out.push_back(t);
        }
        return;
    }
    for (int take = 0; take <= remaining; ++take)
        for (const auto& th : partitions_of(take)) {
            TwoPartition t = acc;
            t.add(mus[idx], th);
            enumerate_rows(mus, idx + 1, remaining - take, t, out);
        }
}

} // namespace

Integer wreath_centralizer_order(const TwoPartition& th) {
    // per block S_i wr S_{nu_i}: prod over mu, j of (j * z_mu)^{m_j} m_j!
    Integer z = 1;
    for (auto& [mu, row] : th.entries()) {
        Integer zmu = mu.z();
        for (auto& [j, m] : row.entries()) z *= ipow(Integer(j) * zmu, m) * factorial(m);
    }
    return z;
}

std::vector<std::pair<TwoPartition, Integer>> two_partitions_of(const GeneralizedPartition& nu) {
    std::vector<std::vector<TwoPartition>> per_block;
    for (auto& [i, ni] : nu.entries()) {
        std::vector<TwoPartition> rows;
        TwoPartition acc;
        enumerate_rows(partitions_of(i), 0, ni, acc, rows);
        per_block.push_back(std::move(rows));
    }
    std::vector<TwoPartition> all{TwoPartition()};
    for (auto& rows : per_block) {
        std::vector<TwoPartition> next;
        for (auto& a : all)
            for (auto& r : rows) next.push_back(a + r);
        all = std::move(next);
    }
    Integer order = nu.group_order();
    std::vector<std::pair<TwoPartition, Integer>> out;
    out.reserve(all.size());
    for (auto& th : all) out.push_back({th, order / wreath_centralizer_order(th)});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

GradedSeries w2_act(const TwoPartition& th, const GradedSeries& a) {
    GradedSeries r = GradedSeries::one(a.max_deg(), a.t_max(), a.weight_cap());
    for (auto& [mu, row] : th.entries()) {
        GradedSeries da = skew(mu, a);
        for (auto& [j, m] : row.entries()) {
            GradedSeries piece = adams_graded(j, da);
            for (int k = 0; k < m; ++k) r = r * piece;
        }
    }
    return r;
}

GradedSeries w2_act(const W2Elem& w, const GradedSeries& a) {
    GradedSeries r = GradedSeries::zero(a.max_deg(), a.t_max(), a.weight_cap());
    for (auto& [th, c] : w.terms()) r += w2_act(th, a).scaled(c);
    return r;
}

SymFunc w2_act_weighted(const WeightedTuple& tuple,
                        const std::function<SymFunc(int, const Partition&)>& insertion,
                        int max_deg) {
    SymFunc r = SymFunc::one(max_deg);
    for (int h = 0; h < (int)tuple.size(); ++h) {
        for (auto& [mu, row] : tuple[h].entries()) {
            SymFunc w = insertion(h, mu);
            for (auto& [j, m] : row.entries()) {
                SymFunc piece = adams(j, w);
                for (int k = 0; k < m && !r.is_zero(); ++k) r = r * piece;
            }
        }
    }
    return r;
}

SymFunc w2_forget(const W2Elem& w, ForgetMode mode, int max_deg) {
    SymFunc out(max_deg);
    for (auto& [th, c] : w.terms()) {
        Partition q;
        for (auto& [mu, row] : th.entries())
            for (auto& [j, m] : row.entries()) {
                if (mode == ForgetMode::vertices) {
                    q.add(j, m);
                } else {
                    // p_j o p_mu = p_{j*mu}; empty mu contributes nothing
                    for (auto& [i, mi] : mu.entries()) q.add(j * i, mi * m);
                }
            }
        out += SymFunc::power_sum(q, max_deg).scaled(c);
    }
    return out;
}

} // namespace serreq
