#include <doctest.h>

#include <random>

#include "unrx/localarith.hpp"

using namespace unrx;

namespace {

IntPoly sextic_g() { return IntPoly::from_longs({62208, 0, -5940, 0, 53, 0, 1}); }
IntPoly sextic_h() { return IntPoly::from_longs({0, 1600, 0, -172, 0, 3}); }

IntPoly paper_fiber(long t) { return sextic_g() - BigInt(t) * sextic_h(); }

}  // namespace

TEST_CASE("newton_polygon shapes") {
    // X^2 - p at p: one segment, slope -1/2, length 2
    for (long p : {2L, 5L, 13L}) {
        NewtonPolygon np = newton_polygon(IntPoly::from_longs({-p, 0, 1}), BigInt(p));
        REQUIRE(np.segments.size() == 1);
        CHECK(np.segments[0].slope == Rational(-1, 2));
        CHECK(np.segments[0].length == 2);
    }
    // unit coefficients, unit constant: single slope-0 segment
    NewtonPolygon np0 = newton_polygon(IntPoly::from_longs({1, 3, 1, 1}), BigInt(5));
    REQUIRE(np0.segments.size() == 1);
    CHECK(np0.segments[0].slope == 0);
    CHECK(np0.segments[0].length == 3);

    // tech1 polynomial at n = p = 11: f = X^11 - X^10 + 11^5 5^-11 t^10, t = 2
    std::vector<Rational> coeffs(12, Rational(0));
    coeffs[0] = make_rational(pow(BigInt(11), 5) * pow(BigInt(2), 10), pow(BigInt(5), 11));
    coeffs[10] = -1;
    coeffs[11] = 1;
    NewtonPolygon np1 = newton_polygon(RatPoly(coeffs), BigInt(11));
    REQUIRE(np1.segments.size() == 2);
    CHECK(np1.segments[0].slope == Rational(-1, 2));
    CHECK(np1.segments[0].length == 10);
    CHECK(np1.segments[1].slope == 0);
    CHECK(np1.segments[1].length == 1);
}

TEST_CASE("newton_polygon invariances") {
    std::mt19937_64 rng(61);
    std::vector<long> small_primes = {2, 3, 5, 7};
    for (int iter = 0; iter < 100; ++iter) {
        long p = small_primes[rng() % 4];
        int deg = 2 + static_cast<int>(rng() % 6);
        std::vector<BigInt> v(deg + 1);
        for (auto& c : v) c = (static_cast<long>(rng() % 200) - 100);
        if (v[0] == 0) v[0] = 1;
        if (v.back() == 0) v.back() = 1;
        IntPoly f(std::move(v));
        NewtonPolygon np = newton_polygon(f, BigInt(p));

        // slope/length multiset invariant under X -> uX for units u
        long u = 1 + static_cast<long>(rng() % (p - 1));
        IntPoly fu = f.compose_affine(BigInt(u), BigInt(0));
        NewtonPolygon npu = newton_polygon(fu, BigInt(p));
        CHECK(np.segments == npu.segments);

        // f -> c*f shifts vertex heights, keeps slopes
        IntPoly fc = BigInt(p * p) * f;
        NewtonPolygon npc = newton_polygon(fc, BigInt(p));
        CHECK(np.segments == npc.segments);

        // total drop bookkeeping: sum(length * -slope) = v(first) - v(last)
        Rational total = 0;
        for (const auto& seg : np.segments) total += Rational(seg.length) * (-seg.slope);
        int k = 0;
        while (f[k] == 0) ++k;
        CHECK(total == Rational(valuation(f[k], BigInt(p)) - valuation(f.lc(), BigInt(p))));
    }
}

TEST_CASE("certify_unramified base and tame cases") {
    LocalCertificate c1 = certify_unramified(IntPoly::from_longs({-2, 0, 1}), BigInt(5), 2);
    CHECK(c1.verdict == LocalVerdict::UnramifiedCertified);

    LocalCertificate c2 = certify_unramified(IntPoly::from_longs({-5, 0, 1}), BigInt(5), 2);
    CHECK(c2.verdict == LocalVerdict::RamifiedTame);
    CHECK(c2.inertia_orbits == std::vector<int>{2});
    CHECK(c2.disc_valuation == 1);

    // split roots one p-adic digit apart: (X-1)(X-1-p)(X+1)
    for (long p : {3L, 7L}) {
        IntPoly f = IntPoly::from_longs({-1, 1}) * IntPoly::from_longs({-1 - p, 1}) *
                    IntPoly::from_longs({1, 1});
        LocalCertificate c = certify_unramified(f, BigInt(p), 3);
        CHECK(c.verdict == LocalVerdict::UnramifiedCertified);
    }
}

TEST_CASE("certify_unramified on the paper fiber at 3 reproduces the proof transcript") {
    LocalCertificate cert = certify_unramified(paper_fiber(385), BigInt(3), 2);
    CHECK(cert.verdict == LocalVerdict::UnramifiedCertified);
    CHECK(cert.disc_valuation == 14);  // even
    REQUIRE(cert.level_patterns.size() >= 2);
    // X(X-1)(X+1)^4
    FactorPattern l0;
    l0.parts = {{1, 1}, {1, 1}, {1, 4}};
    l0.separable = false;
    CHECK(cert.level_patterns[0] == l0);
    // quartic X(X-1)(X+1)^2
    FactorPattern l1;
    l1.parts = {{1, 1}, {1, 1}, {1, 2}};
    l1.separable = false;
    CHECK(cert.level_patterns[1] == l1);
    CHECK(cert.first_level_strip == 4);
    bool parity_note = false;
    for (const auto& line : cert.transcript)
        if (line.find("even disc valuation") != std::string::npos) parity_note = true;
    CHECK(parity_note);
}

TEST_CASE("certify_unramified on the paper fiber at 2 resolves fully") {
    LocalCertificate cert = certify_unramified(paper_fiber(385), BigInt(2), 10);
    CHECK(cert.verdict == LocalVerdict::UnramifiedCertified);
    CHECK(cert.disc_valuation == 24);
    CHECK(cert.first_level_strip == 4);
    CHECK(cert.max_strip == 14);
}

TEST_CASE("certify_unramified soundness sweep against the disc/pattern oracle") {
    std::mt19937_64 rng(67);
    std::vector<long> primes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    int tested = 0;
    for (int iter = 0; tested < 500; ++iter) {
        int deg = 3 + static_cast<int>(rng() % 2);
        std::vector<BigInt> v(deg + 1);
        for (auto& c : v) c = static_cast<long>(rng() % 41) - 20;
        if (v.back() == 0) v.back() = 1;
        IntPoly f = IntPoly(std::move(v)).primitive_part();
        if (f.degree() < 3) continue;
        BigInt disc = discriminant(f);
        if (disc == 0) continue;
        ++tested;
        long p = primes[rng() % primes.size()];
        LocalCertificate cert = certify_unramified(f, BigInt(p), 4);
        int dv = valuation(disc, BigInt(p));
        if (cert.verdict == LocalVerdict::UnramifiedCertified) {
            CHECK(dv % 2 == 0);  // never certified on odd disc valuation
        }
        if (cert.verdict == LocalVerdict::RamifiedTame) {
            CHECK(p != 2);
            CHECK(dv % 2 == 1);
        }
        if (dv == 0 && !mpz_divisible_ui_p(f.lc().get_mpz_t(), p)) {
            // disc a unit: separable pattern, must certify
            CHECK(cert.verdict == LocalVerdict::UnramifiedCertified);
        }
    }
}

TEST_CASE("tame_inertia_cycle_type") {
    // separable: unramified
    LocalCertificate c1 = tame_inertia_cycle_type(IntPoly::from_longs({-2, 0, 1}), BigInt(7));
    CHECK(c1.verdict == LocalVerdict::UnramifiedCertified);

    // (X^2 - q)(X - 1): double root 0 mod q, disc valuation 1
    for (long q : {5L, 13L}) {
        IntPoly f = IntPoly::from_longs({-q, 0, 1}) * IntPoly::from_longs({-1, 1});
        LocalCertificate c = tame_inertia_cycle_type(f, BigInt(q));
        CHECK(c.verdict == LocalVerdict::RamifiedTame);
        CHECK(c.inertia_orbits == std::vector<int>{2});
        CHECK(c.frobenius_pattern == std::vector<int>{1});
    }

    // even disc multiplicity: no claim
    IntPoly g2 = IntPoly::from_longs({-5, 0, 1}) * IntPoly::from_longs({5, 0, 1});
    LocalCertificate c2 = tame_inertia_cycle_type(g2, BigInt(5));
    CHECK(c2.verdict == LocalVerdict::Unknown);
}

TEST_CASE("residue_degree_odd_at_n") {
    CHECK(residue_degree_odd_at_n(BigInt(3)));
    CHECK(residue_degree_odd_at_n(BigInt(11)));
    CHECK(residue_degree_odd_at_n(BigInt(19)));
    // the regime the main theorem uses: all p = 3 mod 8 up to 200
    for (long p : {3L, 11L, 19L, 43L, 59L, 67L, 83L, 107L, 131L, 139L, 163L, 179L})
        CHECK(residue_degree_odd_at_n(BigInt(p)));
    CHECK_THROWS_AS((void)residue_degree_odd_at_n(BigInt(5)), precondition_unmet);
}

TEST_CASE("frobenius_parity") {
    CHECK(frobenius_parity(BigInt(49), BigInt(5)) == 1);  // square delta
    CHECK(frobenius_parity(BigInt(15), BigInt(5)) == 0);  // q | delta
    CHECK(frobenius_parity(BigInt(17 * 23 * 43), BigInt(103)) ==
          jacobi(BigInt(17 * 23 * 43), BigInt(103)));
    // paper footnote: the four Legendre symbols (286855 / p) are all -1
    for (long p : {17L, 23L, 43L, 101L}) CHECK(frobenius_parity(BigInt(286855), BigInt(p)) == -1);
}
