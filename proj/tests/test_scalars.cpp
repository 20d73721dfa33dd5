#include <doctest.h>

#include <random>

#include "serreq/scalar.hpp"

using namespace serreq;

namespace {

MotivicScalar random_scalar(std::mt19937& rng, bool with_symbols = true) {
    std::uniform_int_distribution<int> nterms(0, 3), lexp(0, 3), coef(-3, 3), pick(0, 2);
    MotivicScalar s;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        MotivicScalar term(Rational(coef(rng)));
        int l = lexp(rng);
        if (l > 0) term = term * MotivicScalar::lefschetz(l);
        if (with_symbols && pick(rng) == 0)
            term = term * MotivicScalar::symbol("x", 1 + pick(rng));
        s += term;
    }
    return s;
}

} // namespace

TEST_CASE("ring operations on stated examples") {
    MotivicScalar L = MotivicScalar::lefschetz();
    CHECK(L * L == MotivicScalar::lefschetz(2));
    CHECK((L + MotivicScalar(1)) + (L - MotivicScalar(1)) == L.scaled(2));
    // (L-2)(L+1) = L^2 - L - 2
    MotivicScalar lhs = (L - MotivicScalar(2)) * (L + MotivicScalar(1));
    MotivicScalar rhs = MotivicScalar::lefschetz(2) - L - MotivicScalar(2);
    CHECK(lhs == rhs);
}

TEST_CASE("ring axioms on randomized triples") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 120; ++i) {
        MotivicScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MotivicScalar());
    }
}

TEST_CASE("adams operations") {
    MotivicScalar L = MotivicScalar::lefschetz();
    CHECK((L + MotivicScalar(1)).adams(2) == MotivicScalar::lefschetz(2) + MotivicScalar(1));
    MotivicScalar s = MotivicScalar::symbol("s");
    CHECK(s.adams(3).adams(2) == s.adams(6)); // psi_2 psi_3 = psi_6
    CHECK_THROWS(s.adams(0));

    std::mt19937 rng(777);
    for (int i = 0; i < 120; ++i) {
        MotivicScalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK(a.adams(1) == a);
        CHECK(a.adams(2).adams(3) == a.adams(6));
        CHECK((a * b).adams(2) == a.adams(2) * b.adams(2));
        CHECK((a + b).adams(3) == a.adams(3) + b.adams(3));
    }
}

TEST_CASE("specializations") {
    MotivicScalar L = MotivicScalar::lefschetz();
    MotivicScalar f = MotivicScalar::lefschetz(2) + MotivicScalar(1);
    // rank is structurally the identity (L plays q)
    CHECK(f.specialize_rank() == f);
    auto e = L.specialize_epoly();
    REQUIRE(e.size() == 1);
    CHECK(e.begin()->first == std::make_pair(1, 1)); // uv
    CHECK(e.begin()->second == 1);
    CHECK_THROWS_AS(MotivicScalar::symbol("s").adams(2).specialize_epoly(),
                    unsupported_class_error);

    std::mt19937 rng(999);
    for (int i = 0; i < 100; ++i) {
        MotivicScalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK((a * b).specialize_rank() == a.specialize_rank() * b.specialize_rank());
    }
}

TEST_CASE("canonical storage") {
    MotivicScalar s = MotivicScalar::symbol("s", 1);
    // adams index 1 symbols equal plain symbols
    CHECK(s.adams(1) == MotivicScalar::symbol("s"));
    CHECK(MotivicScalar(0).is_zero());
    CHECK((s - s).is_zero());
    MotivicScalar L = MotivicScalar::lefschetz();
    CHECK(L.to_string() == "L");
    CHECK((L * L + MotivicScalar(1)).to_string() == "L^2 + 1");
}
