#include "serreq/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace serreq {

Partition Partition::single(int part, int mult) {
    Partition p;
    p.add(part, mult);
    return p;
}

Partition Partition::from_parts(const std::vector<int>& parts) {
    Partition p;
    for (int x : parts) p.add(x, 1);
    return p;
}

void Partition::add(int part, int mult) {
    if (mult == 0) return;
    if (part < 1 || mult < 0) throw std::invalid_argument("Partition::add: bad part");
    auto it = std::lower_bound(m_.begin(), m_.end(), std::make_pair(part, 0));
    if (it != m_.end() && it->first == part)
        it->second += mult;
    else
        m_.insert(it, {part, mult});
}

int Partition::size() const {
    int s = 0;
    for (auto& [i, m] : m_) s += i * m;
    return s;
}

int Partition::length() const {
    int s = 0;
    for (auto& [i, m] : m_) s += m;
    return s;
}

int Partition::mult(int part) const {
    for (auto& [i, m] : m_)
        if (i == part) return m;
    return 0;
}

Integer Partition::z() const {
    Integer r = 1;
    for (auto& [i, m] : m_) r *= ipow(i, m) * factorial(m);
    return r;
}

Partition Partition::odot(const Partition& o) const {
    Partition r = *this;
    for (auto& [i, m] : o.m_) r.add(i, m);
    return r;
}

Partition Partition::stretch(int n) const {
    Partition r;
    for (auto& [i, m] : m_) r.add(i * n, m);
    return r;
}

std::vector<int> Partition::parts_desc() const {
    std::vector<int> out;
    for (auto it = m_.rbegin(); it != m_.rend(); ++it)
        for (int k = 0; k < it->second; ++k) out.push_back(it->first);
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int p : parts_desc()) {
        if (!first) os << ' ';
        os << p;
        first = false;
    }
    return os.str();
}

GeneralizedPartition GeneralizedPartition::single(int part, int mult) {
    GeneralizedPartition p;
    p.add(part, mult);
    return p;
}

void GeneralizedPartition::add(int part, int mult) {
    if (mult == 0) return;
    if (part < 0 || mult < 0) throw std::invalid_argument("GeneralizedPartition::add: bad part");
    auto it = std::lower_bound(m_.begin(), m_.end(), std::make_pair(part, 0));
    if (it != m_.end() && it->first == part)
        it->second += mult;
    else
        m_.insert(it, {part, mult});
}

int GeneralizedPartition::size() const {
    int s = 0;
    for (auto& [i, m] : m_) s += i * m;
    return s;
}

int GeneralizedPartition::length() const {
    int s = 0;
    for (auto& [i, m] : m_) s += m;
    return s;
}

int GeneralizedPartition::mult(int part) const {
    for (auto& [i, m] : m_)
        if (i == part) return m;
    return 0;
}

GeneralizedPartition GeneralizedPartition::odot(const GeneralizedPartition& o) const {
    GeneralizedPartition r = *this;
    for (auto& [i, m] : o.m_) r.add(i, m);
    return r;
}

Integer GeneralizedPartition::group_order() const {
    Integer r = 1;
    for (auto& [i, m] : m_) r *= ipow(factorial(i), m) * factorial(m);
    return r;
}

std::string GeneralizedPartition::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = m_.rbegin(); it != m_.rend(); ++it)
        for (int k = 0; k < it->second; ++k) {
            if (!first) os << ' ';
            os << it->first;
            first = false;
        }
    return os.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition::from_parts(acc));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> acc;
    if (n >= 0) gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        const auto& ps = partitions_of(k);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

} // namespace serreq
