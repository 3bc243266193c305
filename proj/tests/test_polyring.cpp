#include <doctest.h>

#include <random>

#include "unrx/polyring.hpp"

using namespace unrx;

namespace {

// Independent resultant oracle: Sylvester matrix determinant by
// fraction-free Bareiss elimination.
BigInt resultant_by_sylvester(const IntPoly& f, const IntPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m == 0) return pow(f.lc(), static_cast<unsigned long>(n));
    if (n == 0) return pow(g.lc(), static_cast<unsigned long>(m));
    int size = m + n;
    std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size, BigInt(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) a[r][r + j] = f[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) a[n + r][r + j] = g[n - j];
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < size; ++r)
                if (a[r][k] != 0) { swap_row = r; break; }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return BigInt(sign) * a[size - 1][size - 1];
}

IntPoly random_poly(std::mt19937_64& rng, int deg, long span = 20) {
    std::vector<BigInt> v(deg + 1);
    for (auto& c : v) c = static_cast<long>(rng() % (2 * span + 1)) - span;
    if (v.back() == 0) v.back() = 1;
    return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
    IntPoly f = IntPoly::from_longs({-1, 0, 1});  // X^2 - 1
    IntPoly g = IntPoly::from_longs({1, 1});      // X + 1
    CHECK((f * g).degree() == 3);
    CHECK(f.div_exact(g) == IntPoly::from_longs({-1, 1}));
    CHECK(f.eval(BigInt(3)) == 8);
    CHECK(f.derivative() == IntPoly::from_longs({0, 2}));
    CHECK(f.reversed() == IntPoly::from_longs({1, 0, -1}));
    CHECK(IntPoly::from_longs({0, 0, 2, 4}).content() == 2);
    CHECK(IntPoly::from_longs({0, 0, -2, -4}).content() == -2);
    CHECK(f.compose_affine(BigInt(2), BigInt(1)) == IntPoly::from_longs({0, 4, 4}));
}

TEST_CASE("resultant matches Sylvester-Bareiss oracle") {
    // res(X^2-1, X-2) = (X^2-1)(2) = 3
    CHECK(resultant(IntPoly::from_longs({-1, 0, 1}), IntPoly::from_longs({-2, 1})) == 3);
    // shared root
    CHECK(resultant(IntPoly::from_longs({-1, 0, 0, 1}), IntPoly::from_longs({-1, 0, 1})) == 0);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        int df = 1 + static_cast<int>(rng() % 8);
        int dg = 1 + static_cast<int>(rng() % 8);
        IntPoly f = random_poly(rng, df);
        IntPoly g = random_poly(rng, dg);
        CHECK(resultant(f, g) == resultant_by_sylvester(f, g));
    }
}

TEST_CASE("resultant multiplicativity and rational scaling") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        IntPoly f = random_poly(rng, 3);
        IntPoly g = random_poly(rng, 2);
        IntPoly h = random_poly(rng, 2);
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
    // res over Q with content scaling
    RatPoly f({Rational(1, 2), Rational(0), Rational(1)});  // X^2 + 1/2
    RatPoly g({Rational(-1), Rational(1)});                 // X - 1
    CHECK(resultant(f, g) == Rational(3, 2));
}

TEST_CASE("discriminant closed forms") {
    // disc(X^2 + bX + c) = b^2 - 4c
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        long b = static_cast<long>(rng() % 41) - 20;
        long c = static_cast<long>(rng() % 41) - 20;
        CHECK(discriminant(IntPoly::from_longs({c, b, 1})) == BigInt(b) * b - 4 * BigInt(c));
    }
    CHECK(discriminant(IntPoly::from_longs({1, 0, 1})) == -4);
    // disc(X^3 + pX + q) = -4p^3 - 27q^2
    for (int i = 0; i < 50; ++i) {
        long p = static_cast<long>(rng() % 21) - 10;
        long q = static_cast<long>(rng() % 21) - 10;
        CHECK(discriminant(IntPoly::from_longs({q, p, 0, 1})) ==
              -4 * pow(BigInt(p), 3) - 27 * BigInt(q) * q);
    }
}

TEST_CASE("discriminant of the residue polynomial family") {
    // disc(sum_{i=0}^{n-2} (i+1) X^i) = (-1)^((n+1)/2) * 2 * n^(n-3) * (n-1)^(n-4)
    for (long n = 7; n <= 31; n += 4) {
        std::vector<BigInt> v;
        for (long i = 0; i <= n - 2; ++i) v.emplace_back(i + 1);
        IntPoly g(std::move(v));
        BigInt expect = 2 * pow(BigInt(n), static_cast<unsigned long>(n - 3)) *
                        pow(BigInt(n - 1), static_cast<unsigned long>(n - 4));
        if (((n + 1) / 2) % 2 != 0) expect = -expect;
        CHECK(discriminant(g) == expect);
    }
    // n = 7 value written out: 2 * 7^4 * 6^3
    std::vector<BigInt> v7;
    for (long i = 0; i <= 5; ++i) v7.emplace_back(i + 1);
    CHECK(discriminant(IntPoly(std::move(v7))) == 2 * pow(BigInt(7), 4) * pow(BigInt(6), 3));
}

TEST_CASE("normalize_content and affine substitution") {
    RatPoly f({Rational(1, 6), Rational(0), Rational(2, 3)});
    auto [prim, cont] = normalize_content(f);
    CHECK(prim == IntPoly::from_longs({1, 0, 4}));
    CHECK(cont == Rational(1, 6));
    CHECK(cont * prim.to_rational() == f);

    RatPoly g({Rational(0), Rational(0), Rational(1)});  // X^2
    CHECK(substitute_affine(g, Rational(2), Rational(1)) ==
          RatPoly({Rational(1), Rational(4), Rational(4)}));
    // substitute then un-substitute round trip
    std::mt19937_64 rng(37);
    for (int i = 0; i < 40; ++i) {
        IntPoly h = random_poly(rng, 5);
        RatPoly hr = h.to_rational();
        Rational a = make_rational(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 5) + 1);
        Rational b(static_cast<long>(rng() % 11) - 5);
        RatPoly tr = substitute_affine(hr, a, b);
        CHECK(substitute_affine(tr, 1 / a, -b / a) == hr);
    }
}

TEST_CASE("mod-p factorization reconstructs the input") {
    std::mt19937_64 rng(41);
    std::vector<long> ps = {2, 3, 5, 7, 11, 101, 9973};
    for (int i = 0; i < 300; ++i) {
        long p = ps[rng() % ps.size()];
        int deg = 1 + static_cast<int>(rng() % 9);
        std::vector<BigInt> v(deg + 1);
        for (auto& c : v) c = static_cast<long>(rng() % p);
        ModPoly f(BigInt(p), std::move(v));
        if (f.degree() < 1) continue;
        auto fac = factor_mod_p(f, rng);
        ModPoly prod = ModPoly::constant(BigInt(p), fac.unit);
        for (const auto& [q, m] : fac.factors) {
            CHECK(q.lc() == 1);
            for (int j = 0; j < m; ++j) prod = prod * q;
        }
        CHECK(prod == f);
        // each factor passes a distinct-degree irreducibility recheck
        for (const auto& [q, m] : fac.factors) {
            auto dd = distinct_degree_factor(q);
            REQUIRE(dd.size() == 1);
            CHECK(dd[0].second == q.degree());
        }
    }
}

TEST_CASE("factorization of the paper's mod-3 and mod-p reductions") {
    std::mt19937_64 rng(43);
    // X^2 + 1 mod 5 = (X+2)(X+3)
    ModPoly f(BigInt(5), {BigInt(1), BigInt(0), BigInt(1)});
    auto fac = factor_mod_p(f, rng);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == ModPoly(BigInt(5), {BigInt(2), BigInt(1)}));
    CHECK(fac.factors[1].first == ModPoly(BigInt(5), {BigInt(3), BigInt(1)}));

    // X^(p-1) - 2^((p+1)/2) mod p for p = 11: (X^5 - 2^3)(X^5 + 2^3)
    BigInt p = 11;
    std::vector<BigInt> v(11, BigInt(0));
    v[10] = 1;
    v[0] = -pow(BigInt(2), 6);
    ModPoly g(p, std::move(v));
    auto gf = factor_mod_p(g, rng);
    ModPoly a(p, {BigInt(-8), BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(1)});
    ModPoly b(p, {BigInt(8), BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(1)});
    REQUIRE(gf.factors.size() == 2);
    CHECK(((gf.factors[0].first == a && gf.factors[1].first == b) ||
           (gf.factors[0].first == b && gf.factors[1].first == a)));
}

TEST_CASE("factor_pattern") {
    FactorPattern pat = factor_pattern(IntPoly::from_longs({-1, 0, 0, 0, 0, 0, 1}), BigInt(7));
    CHECK(pat.separable);
    REQUIRE(pat.parts.size() == 6);
    for (auto [d, m] : pat.parts) {
        CHECK(d == 1);
        CHECK(m == 1);
    }
    CHECK_THROWS_AS((void)factor_pattern(IntPoly::from_longs({1, 3}), BigInt(3)), leading_drop);

    // disc(f) = 0 mod p iff pattern non-separable, p not dividing lc
    std::mt19937_64 rng(47);
    std::vector<long> ps = {3, 5, 7, 13, 31};
    for (int i = 0; i < 200; ++i) {
        IntPoly f = random_poly(rng, 4).primitive_part();
        if (f.degree() < 2) continue;
        BigInt d = discriminant(f);
        if (d == 0) continue;  // repeated factor over Q; pattern never separable
        for (long p : ps) {
            if (mpz_divisible_ui_p(f.lc().get_mpz_t(), p)) continue;
            FactorPattern pp = factor_pattern(f, BigInt(p));
            CHECK(pp.separable == !mpz_divisible_ui_p(d.get_mpz_t(), p));
        }
    }
}

TEST_CASE("sturm_count") {
    CHECK(sturm_count(RatPoly({Rational(1), Rational(0), Rational(1)})) == 0);
    CHECK(sturm_count(RatPoly({Rational(-1), Rational(0), Rational(1)})) == 2);
    CHECK(sturm_count(RatPoly({Rational(-2), Rational(1)})) == 1);
    // roots in (0, 2]: X^2 - 1 has one
    CHECK(sturm_count(RatPoly({Rational(-1), Rational(0), Rational(1)}),
                      SturmBound::at(Rational(0)), SturmBound::at(Rational(2))) == 1);
    // repeated roots counted once
    RatPoly sq({Rational(1), Rational(-2), Rational(1)});  // (X-1)^2
    CHECK(sturm_count(sq) == 1);

    // oracle: cubics with known rational roots
    std::mt19937_64 rng(53);
    for (int i = 0; i < 100; ++i) {
        long r1 = static_cast<long>(rng() % 21) - 10;
        long r2 = static_cast<long>(rng() % 21) - 10;
        long r3 = static_cast<long>(rng() % 21) - 10;
        IntPoly f = IntPoly::from_longs({-r1, 1}) * IntPoly::from_longs({-r2, 1}) *
                    IntPoly::from_longs({-r3, 1});
        std::vector<long> roots = {r1, r2, r3};
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        CHECK(sturm_count(f.to_rational()) == static_cast<int>(roots.size()));
    }
}

TEST_CASE("rational_roots") {
    IntPoly f = IntPoly::from_longs({-3, 2}) * IntPoly::from_longs({5, 1}) *
                IntPoly::from_longs({1, 0, 1});
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(-5));
    CHECK(roots[1] == Rational(3, 2));
    CHECK(rational_roots(IntPoly::from_longs({0, 0, 1})) == std::vector<Rational>{Rational(0)});
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(IntPoly::from_longs({1, 1, 1, 1, 1})) == Trilean::True);  // Phi_5
    CHECK(is_irreducible(IntPoly::from_longs({1, 0, 0, 0, 1})) == Trilean::True);  // X^4+1
    CHECK(is_irreducible(IntPoly::from_longs({-1, 0, 0, 0, 1})) == Trilean::False);
    CHECK(is_irreducible(IntPoly::from_longs({-2, 0, 1})) == Trilean::True);
    CHECK(is_irreducible(IntPoly::from_longs({2, 3})) == Trilean::True);
}

namespace {

// Oracle for quartic Galois groups: the set of separable factor patterns
// over many primes is a Chebotarev fingerprint. The five groups have
// pairwise distinct attainable cycle-type sets on 4 points.
QuarticGroup quartic_group_by_patterns(const IntPoly& f) {
    bool has4 = false, has112 = false, has13 = false;
    unsigned long p = 5;
    for (int i = 0; i < 400; ++i) {
        BigInt pp;
        mpz_nextprime(pp.get_mpz_t(), BigInt(p).get_mpz_t());
        p = mpz_get_ui(pp.get_mpz_t());
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), p)) continue;
        FactorPattern pat = factor_pattern(f, BigInt(p));
        if (!pat.separable) continue;
        std::vector<int> degs;
        for (auto [d, m] : pat.parts)
            for (int j = 0; j < m; ++j) degs.push_back(d);
        std::sort(degs.begin(), degs.end());
        if (degs == std::vector<int>{4}) has4 = true;
        if (degs == std::vector<int>{1, 1, 2}) has112 = true;
        if (degs == std::vector<int>{1, 3}) has13 = true;
    }
    if (has13) return has112 ? QuarticGroup::S4 : QuarticGroup::A4;
    if (has112) return QuarticGroup::D4;
    if (has4) return QuarticGroup::C4;
    return QuarticGroup::V4;
}

}  // namespace

TEST_CASE("quartic_galois_group") {
    CHECK(quartic_galois_group(IntPoly::from_longs({1, 0, 0, 0, 1})) == QuarticGroup::V4);
    CHECK(quartic_galois_group(IntPoly::from_longs({1, 1, 1, 1, 1})) == QuarticGroup::C4);
    CHECK(quartic_galois_group(IntPoly::from_longs({-2, 0, 0, 0, 1})) == QuarticGroup::D4);
    CHECK(quartic_galois_group(IntPoly::from_longs({1, 1, 0, 0, 1})) == QuarticGroup::S4);
    CHECK(quartic_galois_group(IntPoly::from_longs({12, 8, 0, 0, 1})) == QuarticGroup::A4);
    CHECK_THROWS_AS((void)quartic_galois_group(IntPoly::from_longs({-1, 0, 0, 0, 1})),
                    not_irreducible);
    CHECK_THROWS_AS((void)quartic_galois_group(IntPoly::from_longs({4, 0, 5, 0, 1})),
                    not_irreducible);  // (X^2+1)(X^2+4)

    // cross-check against the pattern fingerprint oracle
    std::mt19937_64 rng(59);
    int checked = 0;
    for (int i = 0; checked < 60 && i < 4000; ++i) {
        IntPoly f = random_poly(rng, 4, 8);
        try {
            QuarticGroup g = quartic_galois_group(f);
            CHECK(g == quartic_group_by_patterns(f.primitive_part()));
            ++checked;
        } catch (const not_irreducible&) {
        }
    }
    CHECK(checked == 60);
}
