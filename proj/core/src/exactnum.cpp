#include "unrx/exactnum.hpp"

#include <algorithm>
#include <array>

namespace unrx {

BigInt invmod(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw non_coprime_moduli("invmod: argument not invertible");
    return r;
}

bool is_perfect_square(const BigInt& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

namespace {

// Strong probable-prime test to base a; n odd, n > 2, d*2^s = n-1.
bool miller_rabin_witness(const BigInt& n, const BigInt& d, unsigned long s, const BigInt& a) {
    BigInt x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Strong Lucas probable-prime test with Selfridge parameters.
// Assumes n odd, n > 37, not a perfect square.
bool strong_lucas(const BigInt& n) {
    // Selfridge: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    BigInt d_param = 5;
    while (true) {
        int j = jacobi(d_param, n);
        if (j == 0) return false;  // shares a factor with n, |D| << n
        if (j == -1) break;
        d_param = d_param > 0 ? BigInt(-(d_param + 2)) : BigInt(-(d_param - 2));
    }
    const BigInt q_param = (1 - d_param) / 4;

    auto norm = [&n](BigInt x) {
        x %= n;
        if (x < 0) x += n;
        return x;
    };
    auto halve = [&n, &norm](BigInt x) {
        x = norm(std::move(x));
        if (mpz_odd_p(x.get_mpz_t())) x += n;
        return BigInt(x >> 1);
    };

    // n + 1 = d * 2^s with d odd.
    BigInt np1 = n + 1;
    unsigned long s = mpz_scan1(np1.get_mpz_t(), 0);
    BigInt d = np1 >> s;

    // Binary ladder computing U_d, V_d, Q^d mod n (P = 1).
    long bits = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    BigInt u = 1, v = 1, qk = norm(q_param);
    for (long i = bits - 2; i >= 0; --i) {
        u = norm(u * v);
        v = norm(v * v - 2 * qk);
        qk = norm(qk * qk);
        if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            BigInt tu = halve(u + v);
            v = halve(d_param * u + v);
            u = std::move(tu);
            qk = norm(qk * q_param);
        }
    }

    if (u == 0 || v == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        v = norm(v * v - 2 * qk);
        qk = norm(qk * qk);
        if (v == 0) return true;
    }
    return false;
}

constexpr std::array<unsigned long, 12> kDeterministicBases = {2,  3,  5,  7,  11, 13,
                                                               17, 19, 23, 29, 31, 37};

// First 12 prime bases are a deterministic test below this bound.
const BigInt& deterministic_mr_bound() {
    static const BigInt bound("3317044064679887385961981");
    return bound;
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (unsigned long p : kDeterministicBases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    BigInt nm1 = n - 1;
    unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
    BigInt d = nm1 >> s;
    if (n < deterministic_mr_bound()) {
        for (unsigned long a : kDeterministicBases)
            if (!miller_rabin_witness(n, d, s, BigInt(a))) return false;
        return true;
    }
    // BPSW: base-2 strong test + strong Lucas.
    if (!miller_rabin_witness(n, d, s, BigInt(2))) return false;
    if (is_perfect_square(n)) return false;
    return strong_lucas(n);
}

BigInt PrimeFactorization::value() const {
    BigInt v = sign;
    for (const auto& [p, e] : factors) v *= pow(p, static_cast<unsigned long>(e));
    return v;
}

bool PrimeFactorization::has_prime(const BigInt& p) const {
    return exponent_of(p) > 0;
}

int PrimeFactorization::exponent_of(const BigInt& p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exponent;
    return 0;
}

namespace {

// Pollard rho, Brent's cycle detection. Returns a nontrivial factor of
// odd composite n, or 0 once the iteration budget runs out.
BigInt pollard_brent(const BigInt& n, unsigned long& budget) {
    for (unsigned long c = 1; budget > 0; ++c) {
        BigInt y = 2, q = 1, g = 1, x, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r && budget > 0; ++i) {
                y = (y * y + c) % n;
                --budget;
            }
            unsigned long k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                unsigned long steps = std::min(m, r - k);
                for (unsigned long i = 0; i < steps && budget > 0; ++i) {
                    y = (y * y + c) % n;
                    BigInt diff = x - y;
                    if (diff < 0) diff = -diff;
                    q = (q * diff) % n;
                    --budget;
                }
                g = gcd(q, n);
                k += steps;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            g = 1;
            while (g == 1 && budget > 0) {
                ys = (ys * ys + c) % n;
                BigInt diff = x - ys;
                if (diff < 0) diff = -diff;
                g = gcd(diff, n);
                --budget;
            }
        }
        if (g > 1 && g < n) return g;
        // g == n: cycle degenerated, retry with the next polynomial.
    }
    return 0;
}

void factor_into(const BigInt& n, std::vector<BigInt>& primes, unsigned long& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    if (is_perfect_square(n)) {
        BigInt r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        factor_into(r, primes, budget);
        factor_into(r, primes, budget);
        return;
    }
    BigInt g = pollard_brent(n, budget);
    if (g == 0)
        throw factorization_budget_exceeded("factorize: rho budget exhausted on cofactor " +
                                            n.get_str());
    factor_into(g, primes, budget);
    factor_into(n / g, primes, budget);
}

}  // namespace

PrimeFactorization factorize(const BigInt& n, const FactorConfig& cfg) {
    if (n == 0) throw error("factorize: zero input");
    PrimeFactorization result;
    BigInt m = n;
    if (m < 0) {
        result.sign = -1;
        m = -m;
    }
    std::vector<BigInt> primes;
    // Trial division over a 2,3,5-wheel up to the bound.
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(p);
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    static constexpr std::array<unsigned long, 8> wheel = {4, 2, 4, 2, 4, 6, 2, 6};
    unsigned long p = 7;
    size_t w = 0;
    while (p <= cfg.trial_bound && m > 1) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(p);
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            continue;
        }
        BigInt psq = BigInt(p) * p;
        if (psq > m) break;
        p += wheel[w];
        w = (w + 1) % wheel.size();
    }
    if (m > 1) {
        if (BigInt(p) * p > m) {
            primes.push_back(m);  // remaining cofactor is prime
        } else {
            unsigned long budget = cfg.rho_budget;
            factor_into(m, primes, budget);
        }
    }
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        result.factors.push_back({primes[i], static_cast<int>(j - i)});
        i = j;
    }
    return result;
}

BigInt squarefree_part(const PrimeFactorization& f) {
    BigInt r = f.sign;
    for (const auto& [p, e] : f.factors)
        if (e % 2 != 0) r *= p;
    return r;
}

BigInt squarefree_part(const BigInt& n, const FactorConfig& cfg) {
    if (n == 0) throw error("squarefree_part: zero input");
    return squarefree_part(factorize(n, cfg));
}

int jacobi(const BigInt& a, const BigInt& m) {
    if (m <= 0 || mpz_even_p(m.get_mpz_t())) throw error("jacobi: modulus must be odd positive");
    return mpz_jacobi(a.get_mpz_t(), m.get_mpz_t());
}

std::pair<BigInt, BigInt> crt(std::span<const std::pair<BigInt, BigInt>> congruences) {
    if (congruences.empty()) throw error("crt: empty congruence list");
    BigInt x = mod(congruences[0].first, congruences[0].second);
    BigInt m = congruences[0].second;
    for (size_t i = 1; i < congruences.size(); ++i) {
        const auto& [r2, m2] = congruences[i];
        if (m2 <= 0) throw error("crt: modulus must be positive");
        if (gcd(m, m2) != 1)
            throw non_coprime_moduli("crt: moduli " + m.get_str() + " and " + m2.get_str());
        // x' = x + m * ((r2 - x) * m^{-1} mod m2)
        BigInt t = mod((r2 - x) * invmod(m, m2), m2);
        x += m * t;
        m *= m2;
    }
    return {mod(x, m), m};
}

int valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw error("valuation: zero input");
    BigInt rest;
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const Rational& q, const BigInt& p) {
    if (q == 0) throw error("valuation: zero input");
    return valuation(BigInt(q.get_num()), p) - valuation(BigInt(q.get_den()), p);
}

BigInt remove_factor(const BigInt& n, const BigInt& p) {
    BigInt rest;
    mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return rest;
}

}  // namespace unrx
