#include <map>
#include <mutex>
#include <sstream>

#include "serreq/symfunc.hpp"

namespace serreq {

namespace {

// beta-set border-strip removal; sign is (-1)^{#beta numbers jumped over}
Integer chi_impl(std::vector<int> beta, const std::vector<int>& cycles, size_t ci,
                 std::map<std::pair<std::vector<int>, int>, Integer>& memo) {
    if (ci == cycles.size()) return 1;
    auto key = std::make_pair(beta, (int)ci);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int r = cycles[ci];
    Integer total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end());
        Integer sub = chi_impl(std::move(nb), cycles, ci + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

Integer sym_group_character(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) return 0;
    if (la.size() == 0) return 1;
    static std::map<std::pair<Partition, Partition>, Integer> cache;
    static std::mutex guard;
    std::lock_guard<std::mutex> lk(guard);
    auto key = std::make_pair(la, mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // pad the beta-set so every strip removal stays representable
    std::vector<int> parts = la.parts_desc();
    int L = la.length() + mu.length();
    parts.resize(L, 0);
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = parts[i] + (L - 1 - i);
    std::sort(beta.begin(), beta.end());

    std::vector<int> cycles = mu.parts_desc();
    std::map<std::pair<std::vector<int>, int>, Integer> memo;
    Integer v = chi_impl(std::move(beta), cycles, 0, memo);
    cache.emplace(std::move(key), v);
    return v;
}

SymFunc schur(const Partition& la, int max_deg) {
    SymFunc f(max_deg);
    int n = la.size();
    if (n > max_deg) return f;
    for (const auto& mu : partitions_of(n)) {
        Integer chi = sym_group_character(la, mu);
        if (chi != 0) f.set_coeff(mu, MotivicScalar(Rational(chi) / Rational(mu.z())));
    }
    return f;
}

std::map<Partition, MotivicScalar> to_schur(const SymFunc& f) {
    std::map<Partition, MotivicScalar> out;
    std::map<int, bool> degrees;
    for (auto& [mu, c] : f.terms()) degrees[mu.size()] = true;
    for (auto& [d, unused] : degrees) {
        (void)unused;
        for (const auto& la : partitions_of(d)) {
            MotivicScalar c;
            for (const auto& mu : partitions_of(d)) {
                MotivicScalar fm = f.coeff(mu);
                if (fm.is_zero()) continue;
                Integer chi = sym_group_character(la, mu);
                if (chi != 0) c += fm.scaled(Rational(chi));
            }
            if (!c.is_zero()) out[la] = c;
        }
    }
    return out;
}

SymFunc from_schur(const std::map<Partition, MotivicScalar>& coeffs, int max_deg) {
    SymFunc f(max_deg);
    for (auto& [la, c] : coeffs) f += schur(la, max_deg).scaled(c);
    return f;
}

std::string schur_string(const SymFunc& f) {
    auto sc = to_schur(f);
    if (sc.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [la, c] : sc) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (!la.empty()) os << "*s[" << la.to_string() << "]";
    }
    return os.str();
}

} // namespace serreq
