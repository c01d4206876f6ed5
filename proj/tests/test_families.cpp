#include <doctest.h>

#include "knotsig/families.hpp"
#include "knotsig/obstruct.hpp"
#include "knotsig/seifert.hpp"
#include "oracles.hpp"

using namespace knotsig;

TEST_CASE("pretzel knot strong quasipositivity") {
    CHECK(pretzelKnotIsSQP({{3, 5, 7}}).verdict == Verdict3::Yes);
    CHECK(pretzelKnotIsSQP({{3, 5, -4}}).verdict == Verdict3::Yes);
    CHECK(pretzelKnotIsSQP({{3, 5, -3}}).verdict == Verdict3::No);
    CHECK(pretzelKnotIsSQP({{3, 5, -7}}).verdict == Verdict3::No);
    CHECK(pretzelKnotIsSQP({{4, 3, 5}}).verdict == Verdict3::No);
    // the open all-odd region
    CHECK(pretzelKnotIsSQP({{3, 3, -3, -3, 3}}).verdict == Verdict3::Unknown);
    CHECK_THROWS_WITH_AS(pretzelKnotIsSQP({{2, 4, 3}}), "NotAKnot", std::invalid_argument);
    CHECK_THROWS_AS(pretzelKnotIsSQP({{3, 3, 3, 3}}), std::invalid_argument);  // 2-component
}

TEST_CASE("3-strand pretzel links by orientation") {
    CHECK(pretzelLinkIsSQP3(2, 4, 6, PretzelOrientation::A));
    CHECK_FALSE(pretzelLinkIsSQP3(4, 3, -5, PretzelOrientation::B));
    CHECK(pretzelLinkIsSQP3(4, 6, -2, PretzelOrientation::A));
    CHECK_FALSE(pretzelLinkIsSQP3(4, 6, -4, PretzelOrientation::A));  // |r| >= min(p,q)
    CHECK(pretzelLinkIsSQP3(4, 3, -2, PretzelOrientation::D));
    CHECK_THROWS_AS(pretzelLinkIsSQP3(3, 4, 5, PretzelOrientation::A), std::invalid_argument);
}

TEST_CASE("all-odd pretzel signature formula") {
    CHECK(pretzelAllOddSignature({{3, 3, -3}}) == 0);
    CHECK(pretzelAllOddSignature({{3, 5, -7}}) == 0);
    CHECK(pretzelAllOddSignature({{3, 3, -5}}) == 0);
    CHECK(pretzelAllOddSignature({{5, 5, 5, 5, -3}}) == 2);  // sign term -1
    CHECK_THROWS_AS(pretzelAllOddSignature({{3, -3, 3}}), std::invalid_argument);
}

TEST_CASE("symmetrized 3-pretzel form") {
    auto f = pretzel3SymmetrizedForm(3, 3, 3);
    CHECK(f.det == 27);
    CHECK(f.inertia == Inertia{2, 0, 0});

    f = pretzel3SymmetrizedForm(4, 6, -2);
    CHECK(f.det == 4);
    CHECK(f.matrix == Matrix<Int>{{Int(2), Int(-2)}, {Int(-2), Int(4)}});
    CHECK(f.inertia == Inertia{2, 0, 0});

    f = pretzel3SymmetrizedForm(2, 2, -2);
    CHECK(f.det == -4);
    CHECK(f.inertia == Inertia{1, 0, 1});
    CHECK(f.inertia.signature() == 0);
}

TEST_CASE("double cover L-space test for pretzels") {
    CHECK(pretzelSigma2IsLspace({3, 5}, {7}));
    CHECK_FALSE(pretzelSigma2IsLspace({5, 7}, {3}));
    CHECK(pretzelSigma2IsLspace({5, 7}, {4}));
    CHECK(pretzelSigma2IsLspace({2, 3, 7}, {}));
    CHECK_FALSE(pretzelSigma2IsLspace({3, 3, 3}, {2, 2}));
    CHECK_THROWS_AS(pretzelSigma2IsLspace({5, 3}, {2}), std::invalid_argument);
}

TEST_CASE("double cover test agrees with the fibration search oracle") {
    for (long p1 = 2; p1 <= 12; ++p1)
        for (long p2 = p1; p2 <= 12; ++p2)
            for (long q = 2; q <= 12; ++q) {
                bool lib = pretzelSigma2IsLspace({p1, p2}, {q});
                bool oracle = oracles::sigma2LspaceSearchOracle({p1, p2}, {q});
                CHECK(lib == oracle);
            }
}

TEST_CASE("genus-1 pretzel Alexander polynomials") {
    auto g = pretzelGenus1Alexander(3, 3, 3);
    CHECK(g.a == 7);
    CHECK(g.delta == parseLaurent("7t^2-13t+7"));

    g = pretzelGenus1Alexander(3, 5, -7);
    CHECK(g.a == -10);
    CHECK(g.delta == parseLaurent("-10t^2+21t-10"));

    g = pretzelGenus1Alexander(1, 1, 1);
    CHECK(g.a == 1);
    CHECK(g.delta == parseLaurent("t^2-t+1"));
}

TEST_CASE("genus-1 determinant identities for odd triples") {
    for (long p = 3; p <= 15; p += 4)
        for (long q = 3; q <= 15; q += 2)
            for (long r = -15; r <= 15; r += 6) {
                if (r == 0 || r % 2 == 0) continue;
                auto g = pretzelGenus1Alexander(p, q, r);
                auto f = pretzel3SymmetrizedForm(p, q, r);
                Int atMinusOne = abs(g.delta.polyPart().eval(Int(-1)));
                CHECK(atMinusOne == abs(Int(p) * q + Int(q) * r + Int(r) * p));
                CHECK(atMinusOne == abs(f.det));
            }
}

TEST_CASE("genus-1 cover bound") {
    CHECK(genus1NBound(1) == 5);
    CHECK(genus1NBound(2) == 8);
    CHECK(genus1NBound(7) == 16);
    CHECK_THROWS_WITH_AS(genus1NBound(0), "NoCircleRoots", std::invalid_argument);
    CHECK_THROWS_AS(genus1NBound(Int(-3)), std::invalid_argument);
}

TEST_CASE("genus-1 cover bound equals n3 of the quadratic") {
    for (long a = 1; a <= 100; ++a) {
        LaurentPoly delta =
            LaurentPoly::fromMap({{2, Int(a)}, {1, Int(1 - 2 * a)}, {0, Int(a)}});
        auto n3 = computeN3(delta);
        REQUIRE(n3.kind == N3Result::Kind::Value);
        CHECK(genus1NBound(a) == n3.value);
    }
}

TEST_CASE("genus-1 two-bridge records") {
    auto r = genus1TwoBridge(1, 1);
    CHECK(r.p == 3);
    CHECK(r.q == 2);
    CHECK(normalize(r.delta).poly == parseLaurent("t^2-t+1"));
    CHECK(r.isSQP);
    CHECK(r.nBound == 5);

    r = genus1TwoBridge(2, 1);
    CHECK(r.p == 7);
    CHECK(r.q == 2);
    CHECK(r.delta == parseLaurent("2t^2-3t+2"));
    CHECK(r.isSQP);
    CHECK(r.nBound == 8);

    r = genus1TwoBridge(1, -1);
    CHECK(r.p == 5);
    CHECK(r.q == 2);
    CHECK(normalize(r.delta).poly == parseLaurent("t^2-3t+1"));
    CHECK_FALSE(r.isSQP);
    CHECK(r.lspaceForAllN);
    CHECK(r.sigmaAbs == 0);
}

TEST_CASE("even continued fractions") {
    CHECK(evenContinuedFraction(7, 2) == std::vector<long>{4, -2});
    CHECK(evenContinuedFraction(3, 2) == std::vector<long>{2, -2});
    auto terms = evenContinuedFraction(13, 4);
    CHECK(terms.size() == 4);
    // back-substitution: value must reproduce p/q
    auto value = [](const std::vector<long>& ts) {
        Rat v(ts.back());
        for (auto it = std::next(ts.rbegin()); it != ts.rend(); ++it) v = *it + 1 / v;
        return v;
    };
    CHECK(value(terms) == Rat(13, 4));
    for (long p = 5; p <= 39; p += 2)
        for (long q = 2; q < p; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            auto ts = evenContinuedFraction(p, q);
            CHECK(ts.size() % 2 == 0);
            for (long a : ts) CHECK(a % 2 == 0);
            CHECK(value(ts) == Rat(p, q));
        }
    CHECK_THROWS_AS(evenContinuedFraction(7, 3), std::invalid_argument);
}

TEST_CASE("two-bridge Alexander via alternating partial sums") {
    CHECK(minkusAlexander(3, 1) == parseLaurent("t^2-t+1"));
    CHECK(minkusAlexander(7, 3) == parseLaurent("2t^2-3t+2"));
    // cross-check against the Seifert matrix of the figure-8 knot
    SeifertMatrix fig8{{{Int(1), Int(1)}, {Int(0), Int(-1)}}, 1, 1, ""};
    CHECK(minkusAlexander(5, 3) == alexander(fig8).delta);
    // even q goes through the mirror substitution
    CHECK(minkusAlexander(5, 2) == alexander(fig8).delta);
}

TEST_CASE("K(k,m) closed form matches the partial-sum formula") {
    CHECK(kkmAlexander(1, 1) == parseLaurent("t^2-t+1"));
    CHECK(kkmAlexander(2, 1) == parseLaurent("2t^2-3t+2"));
    CHECK(kkmAlexander(2, 2) == parseLaurent("2t^4-3t^3+3t^2-3t+2"));
    for (long k = 1; k <= 3; ++k)
        for (long m = 1; m <= 3; ++m)
            CHECK(normalize(kkmAlexander(k, m)).poly ==
                  minkusAlexander(2 * m * (2 * k - 1) + 1, 2 * k - 1));
}

TEST_CASE("K(k,m) root locations") {
    auto loc = kkmRootLocationCheck(1, 3);
    CHECK(loc.hasRootIn23PiToPi);

    loc = kkmRootLocationCheck(2, 2);
    CHECK(loc.hasRootInPi2ToPi);
    CHECK_FALSE(loc.hasRootIn23PiToPi);

    loc = kkmRootLocationCheck(1, 1);
    CHECK_FALSE(loc.hasRootIn23PiToPi);
    CHECK_FALSE(loc.hasRootInPi2ToPi);
}

TEST_CASE("chain link determinants") {
    CHECK(chainLinkDet({1, 1, 1}) == 1);
    CHECK(chainLinkDet({1, 1, std::nullopt}) == 2);
    CHECK(chainLinkDet({5, std::nullopt, std::nullopt}) == 3);
    CHECK_THROWS_AS(chainLinkDet({std::nullopt, std::nullopt, std::nullopt}),
                    std::invalid_argument);
}

TEST_CASE("additive triples") {
    // bumping a finite slot against the infinity resolution
    CHECK(additiveTripleCheck({2, 4, std::nullopt}, {2, 3, std::nullopt},
                              {7, std::nullopt, std::nullopt}));
    CHECK(additiveTripleCheck({2, 3, 5}, {2, 3, 4}, {2, 3, std::nullopt}));
    // mismatched pattern
    CHECK_FALSE(additiveTripleCheck({2, 3, 5}, {2, 3, 3}, {2, 3, std::nullopt}));
    CHECK_FALSE(additiveTripleCheck({2, 3, 5}, {2, 3, 4}, {2, 4, std::nullopt}));
}

TEST_CASE("torus knot Alexander polynomials") {
    CHECK(torusAlexander(2, 3) == cyclotomic(6));
    CHECK(torusAlexander(2, 5) == cyclotomic(10));
    CHECK(torusAlexander(3, 4) == parseLaurent("t^6-t^5+t^3-t+1"));
    CHECK_THROWS_AS(torusAlexander(2, 4), std::invalid_argument);
}

TEST_CASE("sqp-positive all-odd triples are definite in the genus-1 model") {
    // every all-odd positive triple is strongly quasipositive with |sigma| = 2
    for (long p = 3; p <= 9; p += 2)
        for (long q = p; q <= 9; q += 2)
            for (long r = q; r <= 9; r += 2) {
                CHECK(pretzelKnotIsSQP({{p, q, r}}).verdict == Verdict3::Yes);
                auto g = pretzelGenus1Alexander(p, q, r);
                CHECK(g.a > 0);
                auto f = pretzel3SymmetrizedForm(p, q, r);
                CHECK(std::abs(f.inertia.signature()) == 2);
            }
}
