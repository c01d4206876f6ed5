#include <doctest.h>

#include <random>

#include "knotsig/laurent.hpp"
#include "oracles.hpp"

using namespace knotsig;

TEST_CASE("normalize picks the unit with lowest exponent 0 and positive lead") {
    auto n = normalize(parseLaurent("-t^-1+1"));
    CHECK(n.poly == parseLaurent("t-1"));
    CHECK(n.type == PalindromeType::Minus);

    n = normalize(parseLaurent("t^2-t+1"));
    CHECK(n.poly == parseLaurent("t^2-t+1"));
    CHECK(n.type == PalindromeType::Plus);

    n = normalize(parseLaurent("2t^3-3t^2+2t"));
    CHECK(n.poly == parseLaurent("2t^2-3t+2"));
    CHECK(n.type == PalindromeType::Plus);

    CHECK_THROWS_WITH_AS(normalize(LaurentPoly{}), "ZeroPolynomial", std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == parseLaurent("t-1"));
    CHECK(cyclotomic(6) == parseLaurent("t^2-t+1"));
    CHECK(cyclotomic(10) == parseLaurent("t^4-t^3+t^2-t+1"));
    CHECK(cyclotomic(12) == parseLaurent("t^4-t^2+1"));
}

TEST_CASE("cyclotomic divides t^k-1 and distinct indices are coprime") {
    for (int k = 1; k <= 60; ++k) {
        Poly tk = Poly::monomial(k, 1) - Poly::constant(1);
        CHECK_NOTHROW(divExact(tk, cyclotomic(k).polyPart()));
    }
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(1, 60);
    for (int trial = 0; trial < 40; ++trial) {
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        CHECK(gcd(cyclotomic(a).polyPart(), cyclotomic(b).polyPart()).degree() == 0);
    }
}

TEST_CASE("cyclotomicFactorization") {
    auto f = cyclotomicFactorization(parseLaurent("t^2-t+1"));
    CHECK(f.exponents == std::map<int, int>{{6, 1}});
    CHECK(f.remainder == LaurentPoly::constant(1));

    LaurentPoly p = cyclotomic(6) * cyclotomic(6) * cyclotomic(10);
    f = cyclotomicFactorization(p);
    CHECK(f.exponents == std::map<int, int>{{6, 2}, {10, 1}});
    CHECK(f.remainder == LaurentPoly::constant(1));

    f = cyclotomicFactorization(parseLaurent("2t^2-3t+2"));
    CHECK(f.exponents.empty());
    CHECK(f.remainder == parseLaurent("2t^2-3t+2"));
}

TEST_CASE("cyclotomicFactorization roundtrip on random products") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> idx(1, 14), cnt(1, 3), extra(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly p = LaurentPoly::constant(1);
        int parts = cnt(rng);
        for (int i = 0; i < parts; ++i) p = p * cyclotomic(idx(rng));
        if (extra(rng)) p = p * parseLaurent("2t^2-3t+2");
        auto f = cyclotomicFactorization(p);
        LaurentPoly rebuilt = f.remainder;
        for (const auto& [k, e] : f.exponents)
            for (int i = 0; i < e; ++i) rebuilt = rebuilt * cyclotomic(k);
        CHECK(rebuilt == normalize(p).poly);
    }
}

TEST_CASE("isCyclotomicProduct") {
    CHECK(isCyclotomicProduct(parseLaurent("t^2-t+1")));
    CHECK_FALSE(isCyclotomicProduct(parseLaurent("t^2-3t+1")));
    CHECK(isCyclotomicProduct(parseLaurent("t-1")));
    CHECK_FALSE(isCyclotomicProduct(parseLaurent("2t^2-3t+2")));
}

TEST_CASE("evalAtRootOfUnity") {
    auto v = evalAtRootOfUnity(parseLaurent("t-1"), 2, 1);
    CHECK(v.asRational() == Rat(-2));

    v = evalAtRootOfUnity(parseLaurent("t^2-t+1"), 6, 1);
    CHECK(v.isZero());

    v = evalAtRootOfUnity(parseLaurent("2t^2-3t+2"), 2, 1);
    CHECK(v.asRational() == Rat(7));

    // negative exponents reduce through t^n = 1
    v = evalAtRootOfUnity(parseLaurent("t^-1+1"), 4, 1);
    CHECK(v.order == 4);
    CHECK_FALSE(v.isZero());
}

TEST_CASE("resultantWithCyclotomicTower") {
    CHECK(resultantWithCyclotomicTower(parseLaurent("t^2-t+1"), 2) == Int(3));
    CHECK_FALSE(resultantWithCyclotomicTower(parseLaurent("t^2-t+1"), 6).has_value());
    CHECK(resultantWithCyclotomicTower(parseLaurent("t-1"), 5) == Int(5));
}

TEST_CASE("tower at n = 2 equals |p(-1)|") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-4, 4), deg(1, 7);
    for (int trial = 0; trial < 50; ++trial) {
        std::map<int, Int> m;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) m[i] = c(rng);
        LaurentPoly p = LaurentPoly::fromMap(m);
        if (p.isZero()) continue;
        Int atMinusOne = p.polyPart().eval(Int(-1));
        auto r = resultantWithCyclotomicTower(normalize(p).poly, 2);
        if (atMinusOne == 0) CHECK_FALSE(r.has_value());
        else CHECK(*r == abs(atMinusOne));
    }
}

TEST_CASE("chebyshevReduce") {
    CHECK(chebyshevReduce(parseLaurent("t^2-t+1")) == Poly({Int(-1), Int(1)}));
    CHECK(chebyshevReduce(parseLaurent("2t^2-3t+2")) == Poly({Int(-3), Int(2)}));
    CHECK(chebyshevReduce(parseLaurent("t^4-t^3+t^2-t+1")) == Poly({Int(-1), Int(-1), Int(1)}));
    CHECK_THROWS_AS(chebyshevReduce(parseLaurent("t-1")), std::invalid_argument);
}

TEST_CASE("string parse/print roundtrip") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(-9, 9), e(-5, 5), terms(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        std::map<int, Int> m;
        int n = terms(rng);
        for (int i = 0; i < n; ++i) m[e(rng)] = c(rng);
        LaurentPoly p = LaurentPoly::fromMap(m);
        if (p.isZero()) continue;
        CHECK(parseLaurent(p.str()) == p);
    }
}
