#pragma once

// Exact integer/rational arithmetic and elementary number theory.
// BigInt and Rational are GMP values (sign+magnitude, always canonical);
// everything on top of them lives here: primality, factorization with an
// explicit effort budget, Jacobi symbols, CRT, p-adic valuations.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "unrx/errors.hpp"

namespace unrx {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& base, long e) {
    if (e >= 0) {
        Rational r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw error("pow: 0 to a negative power");
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(-e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(-e));
    r.canonicalize();
    return r;
}

inline BigInt powmod(const BigInt& base, const BigInt& e, const BigInt& m) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Least nonnegative residue.
inline BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Inverse of a modulo m; throws non_coprime_moduli when gcd(a,m) > 1.
BigInt invmod(const BigInt& a, const BigInt& m);

bool is_perfect_square(const BigInt& n);

// Deterministic primality: Miller-Rabin with a fixed base set below
// 3.3e24, Baillie-PSW above. n >= 0.
bool is_prime(const BigInt& n);

struct PrimeFactor {
    BigInt prime;
    int exponent;
    bool operator==(const PrimeFactor&) const = default;
};

struct PrimeFactorization {
    int sign = 1;                     // -1 for negative inputs
    std::vector<PrimeFactor> factors; // primes strictly increasing

    BigInt value() const;
    bool has_prime(const BigInt& p) const;
    int exponent_of(const BigInt& p) const;
};

struct FactorConfig {
    unsigned long trial_bound = 1'000'000;
    unsigned long rho_budget = 100'000'000;  // total iteration budget
};

// Complete factorization of n != 0. Trial division then Pollard rho
// (Brent); throws factorization_budget_exceeded if a composite cofactor
// survives the budget, so callers report Unknown instead of guessing.
PrimeFactorization factorize(const BigInt& n, const FactorConfig& cfg = {});

// Signed product of the primes with odd exponent; result * square = n.
BigInt squarefree_part(const BigInt& n, const FactorConfig& cfg = {});
BigInt squarefree_part(const PrimeFactorization& f);

// Jacobi symbol (a/m) for odd m >= 1; (a/1) = 1, (0/m) = 0 for m > 1.
// Negative a reduced via (-1/m) = (-1)^((m-1)/2).
int jacobi(const BigInt& a, const BigInt& m);

// Simultaneous congruences x = r_i mod m_i with pairwise coprime moduli.
// Returns (x, prod m_i) with 0 <= x < prod. Throws non_coprime_moduli.
std::pair<BigInt, BigInt> crt(std::span<const std::pair<BigInt, BigInt>> congruences);

// Largest e with p^e | n, for n != 0.
int valuation(const BigInt& n, const BigInt& p);

// Valuation of a rational: v_p(num) - v_p(den); q != 0.
int valuation(const Rational& q, const BigInt& p);

// n with the exact p-power removed.
BigInt remove_factor(const BigInt& n, const BigInt& p);

}  // namespace unrx
