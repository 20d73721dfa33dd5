#include "serreq/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace serreq {

MotivicScalar::MotivicScalar(const Rational& c) {
    if (c != 0) t_[MotiveMonomial{}] = c;
}

MotivicScalar MotivicScalar::lefschetz(int k) {
    if (k < 1) throw std::invalid_argument("lefschetz: exponent must be >= 1");
    MotivicScalar s;
    s.t_[MotiveMonomial{k, {}}] = 1;
    return s;
}

MotivicScalar MotivicScalar::symbol(const std::string& name, int adams) {
    if (adams < 1) throw std::invalid_argument("symbol: adams index must be >= 1");
    MotivicScalar s;
    s.t_[MotiveMonomial{0, {{MotiveSym{name, adams}, 1}}}] = 1;
    return s;
}

bool MotivicScalar::is_rational() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

Rational MotivicScalar::rational_value() const {
    if (t_.empty()) return 0;
    if (!is_rational()) throw std::logic_error("rational_value: scalar has L or symbols");
    return t_.begin()->second;
}

bool MotivicScalar::has_symbols() const {
    for (auto& [m, c] : t_)
        if (!m.syms.empty()) return true;
    return false;
}

MotivicScalar MotivicScalar::operator-() const {
    MotivicScalar r;
    for (auto& [m, c] : t_) r.t_[m] = -c;
    return r;
}

MotivicScalar& MotivicScalar::operator+=(const MotivicScalar& o) {
    for (auto& [m, c] : o.t_) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    return *this;
}

MotivicScalar& MotivicScalar::operator-=(const MotivicScalar& o) {
    for (auto& [m, c] : o.t_) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_[m] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) t_.erase(it);
        }
    }
    return *this;
}

namespace {

MotiveMonomial mono_mul(const MotiveMonomial& a, const MotiveMonomial& b) {
    MotiveMonomial r;
    r.l_exp = a.l_exp + b.l_exp;
    // merge sorted symbol lists, adding exponents of equal symbols
    auto ia = a.syms.begin(), ib = b.syms.begin();
    while (ia != a.syms.end() || ib != b.syms.end()) {
        if (ib == b.syms.end() || (ia != a.syms.end() && ia->first < ib->first)) {
            r.syms.push_back(*ia++);
        } else if (ia == a.syms.end() || ib->first < ia->first) {
            r.syms.push_back(*ib++);
        } else {
            r.syms.push_back({ia->first, ia->second + ib->second});
            ++ia;
            ++ib;
        }
    }
    return r;
}

} // namespace

MotivicScalar operator*(const MotivicScalar& a, const MotivicScalar& b) {
    MotivicScalar r;
    for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms()) {
            MotiveMonomial m = mono_mul(ma, mb);
            Rational c = ca * cb;
            auto it = r.t_.find(m);
            if (it == r.t_.end()) {
                if (c != 0) r.t_[m] = c;
            } else {
                it->second += c;
                if (it->second == 0) r.t_.erase(it);
            }
        }
    return r;
}

MotivicScalar MotivicScalar::scaled(const Rational& c) const {
    MotivicScalar r;
    if (c == 0) return r;
    for (auto& [m, x] : t_) r.t_[m] = x * c;
    return r;
}

MotivicScalar MotivicScalar::adams(int k) const {
    if (k < 1) throw std::invalid_argument("adams: index must be >= 1");
    if (k == 1) return *this;
    MotivicScalar r;
    for (auto& [m, c] : t_) {
        MotiveMonomial m2;
        m2.l_exp = m.l_exp * k;
        for (auto& [s, e] : m.syms) m2.syms.push_back({MotiveSym{s.name, s.adams * k}, e});
        std::sort(m2.syms.begin(), m2.syms.end());
        auto it = r.t_.find(m2);
        if (it == r.t_.end())
            r.t_[m2] = c;
        else
            it->second += c;
    }
    for (auto it = r.t_.begin(); it != r.t_.end();)
        it = (it->second == 0) ? r.t_.erase(it) : std::next(it);
    return r;
}

std::map<std::pair<int, int>, Rational> MotivicScalar::specialize_epoly() const {
    std::map<std::pair<int, int>, Rational> out;
    for (auto& [m, c] : t_) {
        if (!m.syms.empty())
            throw unsupported_class_error("specialize_epoly: opaque symbol present");
        out[{m.l_exp, m.l_exp}] += c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

void MotivicScalar::set_term(const MotiveMonomial& m, const Rational& c) {
    if (c == 0)
        t_.erase(m);
    else
        t_[m] = c;
}

std::string MotivicScalar::to_string(const std::string& lname) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest L-powers first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == 1) && !m.is_one();
        if (!unit_coeff) {
            os << a;
            if (!m.is_one()) os << "*";
        }
        bool star = false;
        if (m.l_exp > 0) {
            os << lname;
            if (m.l_exp > 1) os << "^" << m.l_exp;
            star = true;
        }
        for (auto& [s, e] : m.syms) {
            if (star) os << "*";
            if (s.adams != 1) os << "psi" << s.adams << "(" << s.name << ")";
            else os << s.name;
            if (e > 1) os << "^" << e;
            star = true;
        }
    }
    return os.str();
}

} // namespace serreq
