#include "unrx/families.hpp"

#include <algorithm>
#include <sstream>

namespace unrx {

std::string to_string(FamilyTag t) { return t == FamilyTag::Tech1 ? "tech1" : "tech2"; }

std::string to_string(SnVerdict v) {
    return v == SnVerdict::Certified ? "certified" : "inconclusive";
}

FamilyInstance build_family(FamilyTag tag, long n, const BigInt& t) {
    if (tag == FamilyTag::Tech1) {
        if (n < 7 || n % 4 != 3)
            throw bad_congruence("tech1 needs n >= 7 with n = 3 mod 4, got n = " +
                                 std::to_string(n));
    } else {
        if (n < 6 || n % 4 != 2)
            throw bad_congruence("tech2 needs n >= 6 with n = 2 mod 4, got n = " +
                                 std::to_string(n));
    }
    if (t == 0 || gcd(t, BigInt(n) * BigInt(n - 1)) != 1)
        throw not_coprime("t must be nonzero and coprime to n(n-1)");

    FamilyInstance inst;
    inst.tag = tag;
    inst.n = n;
    inst.t = t;

    // monic model X^{n-1}(X-1) + c and the denominator-cleared primitive
    Rational c;
    IntPoly primitive;
    if (tag == FamilyTag::Tech1) {
        // c = n^((n-1)/2) * ((n-1)/2)^(-n) * t^(n-1)
        BigInt num = pow(BigInt(n), static_cast<unsigned long>((n - 1) / 2)) *
                     pow(t, static_cast<unsigned long>(n - 1));
        BigInt den = pow(BigInt((n - 1) / 2), static_cast<unsigned long>(n));
        c = make_rational(num, den);
        std::vector<BigInt> v(n + 1, BigInt(0));
        v[0] = num;
        v[n - 1] = -den;
        v[n] = den;
        primitive = IntPoly(std::move(v));
    } else {
        // c = (n-1)^(-n/2) * (n/2)^(n-1) * t^(-n); t^n > 0 for even n
        BigInt num = pow(BigInt(n / 2), static_cast<unsigned long>(n - 1));
        BigInt den = pow(BigInt(n - 1), static_cast<unsigned long>(n / 2)) *
                     pow(t, static_cast<unsigned long>(n));
        c = make_rational(num, den);
        std::vector<BigInt> v(n + 1, BigInt(0));
        v[0] = num;
        v[n - 1] = -den;
        v[n] = den;
        primitive = IntPoly(std::move(v));
    }
    std::vector<Rational> fc(n + 1, Rational(0));
    fc[0] = c;
    fc[n - 1] = -1;
    fc[n] = 1;
    inst.f = RatPoly(std::move(fc));
    inst.primitive = primitive.primitive_part();
    if (inst.primitive.content() != 1)
        throw error("build_family: primitive model has nontrivial content");

    inst.branch_point = make_rational(pow(BigInt(n - 1), static_cast<unsigned long>(n - 1)),
                                      pow(BigInt(n), static_cast<unsigned long>(n)));
    return inst;
}

// ---------------------------------------------------------------------
// clause i

ClauseReport verify_clause_i(const FamilyInstance& inst, int depth) {
    ClauseReport rep;
    long n = inst.n;

    BigInt modulus = inst.tag == FamilyTag::Tech1 ? BigInt(n - 1) : BigInt(n);
    PrimeFactorization fac = factorize(modulus);

    if (inst.tag == FamilyTag::Tech1) {
        // Rescaled model R = X^{n-1}(X - (n-1)/2) + n^((n-1)/2) t^(n-1):
        // separable mod every divisor of n-1; equal to X^n + t^(n-1) mod
        // the odd divisors.
        std::vector<BigInt> v(n + 1, BigInt(0));
        v[0] = pow(BigInt(n), static_cast<unsigned long>((n - 1) / 2)) *
               pow(inst.t, static_cast<unsigned long>(n - 1));
        v[n - 1] = -BigInt((n - 1) / 2);
        v[n] = 1;
        IntPoly rescaled(std::move(v));

        for (const auto& [p, e] : fac.factors) {
            (void)e;
            PrimeVerdict pv;
            pv.p = p;
            FactorPattern pat = factor_pattern(rescaled, p);
            pv.cert.p = p;
            pv.cert.level_patterns.push_back(pat);
            pv.cert.transcript.push_back("rescaled model mod " + p.get_str() + ": " + pat.str());
            if (p != 2) {
                std::vector<BigInt> w(n + 1, BigInt(0));
                w[0] = pow(inst.t, static_cast<unsigned long>(n - 1));
                w[n] = 1;
                ModPoly expect = ModPoly::reduce(IntPoly(std::move(w)), p);
                if (ModPoly::reduce(rescaled, p) != expect)
                    throw error("clause i: rescaled reduction identity failed at " + p.get_str());
                pv.cert.transcript.push_back("reduction equals X^" + std::to_string(n) + " + t^" +
                                             std::to_string(n - 1));
            }
            pv.verdict = pat.separable ? Verdict::Certified : Verdict::Unknown;
            if (pat.separable) pv.cert.verdict = LocalVerdict::UnramifiedCertified;
            rep.primes.push_back(std::move(pv));
        }
    } else {
        for (const auto& [p, e] : fac.factors) {
            (void)e;
            PrimeVerdict pv;
            pv.p = p;
            pv.cert = certify_unramified(inst.primitive, p, depth);
            pv.verdict = pv.cert.certified_unramified() ? Verdict::Certified : Verdict::Unknown;
            rep.primes.push_back(std::move(pv));
        }
    }

    rep.verdict = Verdict::Certified;
    for (const auto& pv : rep.primes)
        if (pv.verdict != Verdict::Certified) rep.verdict = Verdict::Unknown;
    return rep;
}

// ---------------------------------------------------------------------
// clause ii

BigInt residue_field_class(FamilyTag tag, long n) {
    (void)tag;  // both families specialize the same degree-n cover
    // The fiber at the branch point S0 = (n-1)^{n-1}/n^n has the double
    // root eta = (n-1)/n; the residue extension is the splitting field
    // of the degree n-2 cofactor.
    Rational s0 = make_rational(pow(BigInt(n - 1), static_cast<unsigned long>(n - 1)),
                                pow(BigInt(n), static_cast<unsigned long>(n)));
    std::vector<Rational> v(n + 1, Rational(0));
    v[0] = s0;
    v[n - 1] = -1;
    v[n] = 1;
    RatPoly fiber(std::move(v));
    Rational eta = make_rational(BigInt(n - 1), BigInt(n));
    RatPoly lin({-eta, Rational(1)});
    auto [q1, r1] = fiber.divrem(lin);
    if (!r1.is_zero()) throw error("residue_field_class: eta is not a root");
    auto [q2, r2] = q1.divrem(lin);
    if (!r2.is_zero()) throw error("residue_field_class: eta is not a double root");
    if (q2.eval(eta) == 0) throw error("residue_field_class: eta is a triple root");
    IntPoly cofactor = normalize_content(q2).first;
    return squarefree_part(discriminant(cofactor));
}

ClauseReport verify_clause_ii(const FamilyInstance& inst, const FactorConfig& cfg, int depth) {
    ClauseReport rep;
    BigInt nn1 = BigInt(inst.n) * BigInt(inst.n - 1);
    BigInt split_class = residue_field_class(inst.tag, inst.n);
    rep.notes.push_back("split condition square class: " + split_class.get_str());

    BigInt disc = discriminant(inst.primitive);
    PrimeFactorization fac;
    try {
        fac = factorize(disc, cfg);
    } catch (const factorization_budget_exceeded& e) {
        rep.verdict = Verdict::Unknown;
        rep.notes.push_back(std::string("disc factorization exhausted: ") + e.what());
        return rep;
    }

    rep.verdict = Verdict::Certified;
    for (const auto& [q, mult] : fac.factors) {
        if (gcd(q, nn1) != 1) continue;     // clause i / clause iii territory
        if (gcd(q, inst.t) != 1) continue;  // scaling primes, even multiplicity by construction
        PrimeVerdict pv;
        pv.p = q;
        if (mult % 2 == 0) {
            if (q < (BigInt(1) << 20)) {
                pv.cert = certify_unramified(inst.primitive, q, depth);
                if (pv.cert.certified_unramified()) {
                    pv.verdict = Verdict::Certified;
                    pv.note = "even disc multiplicity, certified unramified";
                    rep.primes.push_back(std::move(pv));
                    continue;
                }
            }
            pv.verdict = Verdict::Unknown;
            pv.note = "even disc multiplicity: unramified by specialization inertia; "
                      "not independently certified";
            rep.primes.push_back(std::move(pv));
            continue;  // flagged, not fatal for the clause verdict
        }
        pv.cert = tame_inertia_cycle_type(inst.primitive, q);
        if (pv.cert.verdict != LocalVerdict::RamifiedTame) {
            pv.verdict = Verdict::Unknown;
            pv.note = "no transposition certificate";
            rep.verdict = Verdict::Unknown;
            rep.primes.push_back(std::move(pv));
            continue;
        }
        pv.split_symbol = jacobi(split_class, q);
        if (pv.split_symbol == 1) {
            pv.verdict = Verdict::Certified;
        } else {
            pv.verdict = Verdict::Refuted;
            pv.note = "split condition fails: Frobenius acts oddly on the residue extension";
            rep.verdict = Verdict::Refuted;
        }
        rep.primes.push_back(std::move(pv));
    }
    return rep;
}

// ---------------------------------------------------------------------
// clause iii

namespace {

// Root counts of X^(p+1) + a over F_{p^d}: at most 2 for odd d, none
// for even d (the (p+1)-power map is 2-to-1 on odd-degree extensions).
bool two_to_one_root_counts(const BigInt& p, const BigInt& a, int d_limit,
                            std::vector<std::string>& notes) {
    unsigned long pl = mpz_get_ui(p.get_mpz_t());
    std::vector<BigInt> v(pl + 2, BigInt(0));
    v[0] = a;
    v[pl + 1] = 1;
    ModPoly f(p, std::move(v));
    ModPoly x = ModPoly::x_power(p, 1);
    ModPoly frob = x;
    for (int d = 1; d <= d_limit; ++d) {
        frob = powmod(frob, p, f);  // X^(p^d) mod f
        int roots = gcd(frob - x, f).degree();
        bool ok = (d % 2 == 1) ? roots <= 2 : roots == 0;
        if (!ok) {
            notes.push_back("root count " + std::to_string(roots) + " over the degree-" +
                            std::to_string(d) + " extension violates the 2-to-1 bound");
            return false;
        }
    }
    return true;
}

}  // namespace

ClauseReport verify_clause_iii(const FamilyInstance& inst, int depth) {
    ClauseReport rep;
    long n = inst.n;

    if (inst.tag == FamilyTag::Tech1) {
        BigInt p(n);
        if (!is_prime(p)) throw precondition_unmet("tech1 clause iii needs n prime");
        PrimeVerdict pv;
        pv.p = p;
        NewtonPolygon np = newton_polygon(inst.f, p);
        bool shape = np.segments.size() == 2 && np.segments[0].slope == Rational(-1, 2) &&
                     np.segments[0].length == n - 1 && np.segments[1].slope == 0 &&
                     np.segments[1].length == 1;
        pv.cert.p = p;
        pv.cert.transcript.push_back("newton polygon: " + np.str());
        bool odd_residue = residue_degree_odd_at_n(p);
        pv.cert.transcript.push_back(odd_residue ? "residue degree odd"
                                                 : "residue degree not odd");
        if (shape && odd_residue) {
            pv.verdict = Verdict::Certified;
            pv.cert.verdict = LocalVerdict::RamifiedTame;
            pv.cert.inertia_orbits = std::vector<int>((n - 1) / 2, 2);
            pv.note = "inertia involution with one fixed point (" + std::to_string((n - 1) / 2) +
                      " transpositions); odd residue degree";
        } else {
            pv.verdict = shape ? Verdict::Unknown : Verdict::Refuted;
        }
        rep.primes.push_back(std::move(pv));
    } else {
        BigInt nm1(n - 1);
        if (is_prime(nm1)) {
            BigInt p = nm1;
            PrimeVerdict pv;
            pv.p = p;
            NewtonPolygon np = newton_polygon(inst.f, p);
            bool half_integral = !np.segments.empty();
            for (const auto& seg : np.segments)
                if (BigInt(seg.slope.get_den()) != 2) half_integral = false;
            pv.cert.p = p;
            pv.cert.transcript.push_back("newton polygon: " + np.str());
            if (!half_integral) {
                pv.verdict = Verdict::Refuted;
            } else {
                pv.note = "all roots of half-integral valuation: fixed-point-free inertia "
                          "involution (" +
                          std::to_string(n / 2) + " transpositions)";
                // involution fixed-point bound over both ramified quadratic
                // extensions: roots of X^(p+1) + alpha^(-(p+1)/2) 2^p
                bool counts_ok = true;
                for (int which = 0; which < 2 && counts_ok; ++which) {
                    BigInt alpha = 1;
                    if (which == 1) {
                        for (BigInt a = 2; a < p; ++a)
                            if (jacobi(a, p) == -1) {
                                alpha = a;
                                break;
                            }
                    }
                    BigInt coeff =
                        invmod(powmod(alpha, (p + 1) / 2, p), p) * powmod(BigInt(2), p, p) % p;
                    counts_ok =
                        two_to_one_root_counts(p, coeff, 2 * static_cast<int>(n), rep.notes);
                }
                pv.verdict = counts_ok ? Verdict::Certified : Verdict::Unknown;
                if (counts_ok) {
                    pv.cert.verdict = LocalVerdict::RamifiedTame;
                    pv.cert.inertia_orbits = std::vector<int>(n / 2, 2);
                    pv.cert.transcript.push_back(
                        "involutions in the decomposition group have 0 or 2 fixed points");
                }
            }
            rep.primes.push_back(std::move(pv));
        } else if (is_perfect_square(nm1)) {
            for (const auto& [p, e] : factorize(nm1).factors) {
                (void)e;
                PrimeVerdict pv;
                pv.p = p;
                pv.cert = certify_unramified(inst.primitive, p, depth);
                pv.verdict =
                    pv.cert.certified_unramified() ? Verdict::Certified : Verdict::Unknown;
                rep.primes.push_back(std::move(pv));
            }
        } else {
            throw precondition_unmet("tech2 clause iii needs n-1 prime or a square");
        }
    }

    rep.verdict = Verdict::Certified;
    for (const auto& pv : rep.primes) {
        if (pv.verdict == Verdict::Refuted) rep.verdict = Verdict::Refuted;
        else if (pv.verdict == Verdict::Unknown && rep.verdict == Verdict::Certified)
            rep.verdict = Verdict::Unknown;
    }
    return rep;
}

// ---------------------------------------------------------------------
// archimedean

ArchimedeanReport archimedean_check(const FamilyInstance& inst) {
    ArchimedeanReport rep;
    rep.real_roots = sturm_count(inst.f);
    rep.conjugation_transpositions = (static_cast<int>(inst.n) - rep.real_roots) / 2;
    rep.imaginary_quadratic = rep.conjugation_transpositions % 2 == 1;
    BigInt disc = discriminant(inst.primitive);
    rep.disc_sign = disc > 0 ? 1 : (disc < 0 ? -1 : 0);
    // sign(disc) = (-1)^k with k conjugate pairs
    int expect = rep.conjugation_transpositions % 2 == 0 ? 1 : -1;
    if (rep.disc_sign != expect)
        throw error("archimedean_check: conjugation parity contradicts the discriminant sign");
    return rep;
}

// ---------------------------------------------------------------------
// S_n certification

SnReport certify_sn(const IntPoly& f_in, int prime_budget) {
    SnReport rep;
    IntPoly f = f_in.primitive_part();
    int n = f.degree();
    if (n < 2) return rep;

    BigInt disc = discriminant(f);
    if (disc == 0) return rep;
    if (!is_perfect_square(disc)) rep.parity_evidence = true;

    BigInt p = 1;
    for (int i = 0; i < prime_budget; ++i) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (mpz_divisible_p(f.lc().get_mpz_t(), p.get_mpz_t())) continue;
        FactorPattern pat = factor_pattern(f, p);
        if (!pat.separable) continue;
        std::vector<int> degs;
        for (auto [d, m] : pat.parts)
            for (int j = 0; j < m; ++j) degs.push_back(d);
        std::sort(degs.begin(), degs.end());

        if (degs.size() == 1 && degs[0] == n && rep.irreducible_prime == 0)
            rep.irreducible_prime = p;
        if (degs.size() == 2 && degs[0] == 1 && degs[1] == n - 1 && rep.near_cycle_prime == 0)
            rep.near_cycle_prime = p;
        if (degs.size() == static_cast<size_t>(n - 1) && degs[n - 2] == 2 &&
            rep.transposition_prime == 0)
            rep.transposition_prime = p;
        if (rep.cycle_prime == 0) {
            for (int d : degs) {
                if (2 * d > n && d <= n - 3 && is_prime(BigInt(d))) {
                    rep.cycle_prime = p;
                    rep.cycle_length = d;
                    break;
                }
            }
        }
        int odd_part = 0;
        for (int d : degs) odd_part += d - 1;
        if (odd_part % 2 == 1) rep.parity_evidence = true;

        bool route_a = rep.irreducible_prime != 0 && rep.cycle_prime != 0 && rep.parity_evidence;
        bool route_b = rep.irreducible_prime != 0 && rep.near_cycle_prime != 0 &&
                       rep.transposition_prime != 0;
        if (route_a || route_b) {
            rep.verdict = SnVerdict::Certified;
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------
// aggregate

FamilyReport verify_family(const FamilyInstance& inst, const FamilyOptions& opts) {
    FamilyReport rep;
    rep.tag = inst.tag;
    rep.n = inst.n;
    rep.t = inst.t;
    rep.clause_i = verify_clause_i(inst, opts.depth);
    rep.clause_ii = verify_clause_ii(inst, opts.factor, opts.depth);
    try {
        rep.clause_iii = verify_clause_iii(inst, opts.depth);
    } catch (const precondition_unmet& e) {
        rep.clause_iii.verdict = Verdict::Unknown;
        rep.clause_iii.notes.push_back(e.what());
    }
    rep.archimedean = archimedean_check(inst);
    rep.sn = certify_sn(inst.primitive, opts.sn_prime_budget);

    rep.overall = Verdict::Certified;
    for (const auto* clause : {&rep.clause_i, &rep.clause_ii, &rep.clause_iii}) {
        if (clause->verdict == Verdict::Refuted) rep.overall = Verdict::Refuted;
        else if (clause->verdict == Verdict::Unknown && rep.overall != Verdict::Refuted)
            rep.overall = Verdict::Unknown;
    }
    if (rep.sn.verdict != SnVerdict::Certified && rep.overall == Verdict::Certified)
        rep.overall = Verdict::Unknown;
    return rep;
}

}  // namespace unrx
