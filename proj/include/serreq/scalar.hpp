#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "serreq/rational.hpp"

namespace serreq {

struct unsupported_class_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Opaque motive symbol carrying an Adams index.  Index 1 is the plain
/// symbol; psi_j(psi_k(s)) is stored as the single index j*k.
struct MotiveSym {
    std::string name;
    int adams = 1;
    auto operator<=>(const MotiveSym&) const = default;
};

/// A monomial in the Lefschetz class L and finitely many motive symbols.
struct MotiveMonomial {
    int l_exp = 0;
    std::vector<std::pair<MotiveSym, int>> syms; // sorted, exponents >= 1
    auto operator<=>(const MotiveMonomial&) const = default;
    bool is_one() const { return l_exp == 0 && syms.empty(); }
};

/// Exact polynomial in L and formal Adams symbols with rational
/// coefficients; desk-scale model of K0(MHS).  Immutable value semantics,
/// no stored zero coefficients, keys kept sorted.
class MotivicScalar {
public:
    MotivicScalar() = default;
    MotivicScalar(const Rational& c);
    MotivicScalar(long c) : MotivicScalar(Rational(c)) {}
    MotivicScalar(int c) : MotivicScalar(Rational(c)) {}

    static MotivicScalar lefschetz(int k = 1);
    static MotivicScalar symbol(const std::string& name, int adams = 1);

    bool is_zero() const { return t_.empty(); }
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()
    bool has_symbols() const;

    MotivicScalar operator-() const;
    MotivicScalar& operator+=(const MotivicScalar& o);
    MotivicScalar& operator-=(const MotivicScalar& o);
    friend MotivicScalar operator+(MotivicScalar a, const MotivicScalar& b) { return a += b; }
    friend MotivicScalar operator-(MotivicScalar a, const MotivicScalar& b) { return a -= b; }
    friend MotivicScalar operator*(const MotivicScalar& a, const MotivicScalar& b);
    MotivicScalar& operator*=(const MotivicScalar& o) { return *this = *this * o; }
    MotivicScalar scaled(const Rational& c) const;

    bool operator==(const MotivicScalar&) const = default;

    /// Adams operation: ring hom, L -> L^k, (s, m) -> (s, mk), rationals fixed.
    MotivicScalar adams(int k) const;

    /// rank specialization L -> q; symbols kept as tagged indeterminates.
    /// Structurally the identity; rendered with "q" instead of "L".
    MotivicScalar specialize_rank() const { return *this; }

    /// E-polynomial: L -> uv.  Exponent pairs (u, v) -> coefficient.
    /// Throws unsupported_class_error if an opaque symbol is present.
    std::map<std::pair<int, int>, Rational> specialize_epoly() const;

    const std::map<MotiveMonomial, Rational>& terms() const { return t_; }
    void set_term(const MotiveMonomial& m, const Rational& c);

    std::string to_string(const std::string& lefschetz_name = "L") const;

private:
    std::map<MotiveMonomial, Rational> t_;
};

} // namespace serreq
