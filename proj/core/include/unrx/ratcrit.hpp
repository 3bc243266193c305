#pragma once

// Critical data of a rational function over Q, its homogenized
// discriminant and fixed prime divisors, the effective p-adic seed
// search, hypothesis verification for specialization seeds, and prime
// witness search in arithmetic progressions.

#include <optional>
#include <string>
#include <vector>

#include "unrx/localarith.hpp"

namespace unrx {

struct RationalFunctionQ {
    IntPoly num;  // g
    IntPoly den;  // h, coprime to g over Q
    int degree = 0;  // max(deg g, deg h)
};

// Validates coprimality and nonconstancy.
RationalFunctionQ make_rational_function(IntPoly g, IntPoly h);

// alpha/beta in lowest terms with beta >= 0; beta = 0 encodes infinity.
struct ProjectivePoint {
    BigInt alpha;
    BigInt beta;

    static ProjectivePoint infinity() { return {1, 0}; }
    static ProjectivePoint from_rational(const Rational& q);
    bool is_infinity() const { return beta == 0; }
    Rational to_rational() const;  // throws on infinity
    bool operator==(const ProjectivePoint&) const = default;
    bool operator<(const ProjectivePoint& o) const;  // finite ascending, infinity last
    std::string str() const;
};

struct CriticalPoint {
    ProjectivePoint gamma;  // critical value
    ProjectivePoint eta;    // its unique double preimage
    IntPoly q;              // primitive separable cofactor of the fiber
    BigInt q_disc;          // disc(q)
    BigInt delta;           // signed squarefree part of q_disc
};

// The 2n-2 distinct rational critical values with their double
// preimages and residue cofactors; throws not_generic when the function
// does not have the required shape.
std::vector<CriticalPoint> critical_data(const RationalFunctionQ& f, const FactorConfig& cfg = {});

// u*T + v*S + w with the extracted constant lattice divisor nu.
struct AffineForm {
    BigInt u, v, w;
    BigInt nu = 1;

    BigInt eval(const BigInt& t, const BigInt& s) const { return u * t + v * s + w; }
    std::string str() const;
    bool operator==(const AffineForm&) const = default;
};

struct HomogenizedDisc {
    BigInt content;                // disc(s*g - t*h) = content * prod forms(t,s)
    std::vector<AffineForm> forms; // beta_i T - alpha_i S, one per critical value
};

HomogenizedDisc homogenized_discriminant(const RationalFunctionQ& f,
                                         const std::vector<CriticalPoint>& crit);

// Primes dividing every lattice value of content * prod(forms), decided
// exhaustively on candidate primes.
std::vector<BigInt> fixed_prime_divisors(const BigInt& content,
                                         const std::vector<AffineForm>& forms);

struct SeedSearchOptions {
    long t_bound = 2000;  // scan range for the integer seed
    int depth = 12;       // certification depth per prime
};

struct PerPrimeSeed {
    BigInt p;
    BigInt residue;   // seed mod p^exponent
    int exponent;     // = 1 + max(first-level strip, lambda valuation bound)
    int lambda_bound; // max_i v_p(lambda_i(seed, 1))
    LocalCertificate cert;
};

struct SeedProgression {
    BigInt t0 = 0;  // integer seed; the accepted class is t = t0 mod N (s = 1 mod N)
    BigInt s0 = 1;
    BigInt N = 1;
    std::vector<PerPrimeSeed> per_prime;
};

// Scan integer specializations until one is certifiably unramified at
// every fixed prime; stabilize each prime to a p-power modulus and
// combine by CRT. Throws search_exhausted.
SeedProgression unramified_seed_search(const RationalFunctionQ& f,
                                       const std::vector<BigInt>& fixed_primes,
                                       const std::vector<CriticalPoint>& crit,
                                       const SeedSearchOptions& opts = {});

// lambda_i(N T + t0, N S + s0) divided by the constant lattice divisor
// nu_i; verifies pairwise affine independence. Throws dependent_forms.
std::vector<AffineForm> transformed_forms(const std::vector<AffineForm>& forms, const BigInt& N,
                                          const BigInt& t0, const BigInt& s0);

struct ParityRecord {
    size_t index = 0;       // position in the critical-value ordering
    AffineForm form;        // the transformed form used
    BigInt value;           // form evaluated at the seed point
    int sign = 0;
    BigInt d;               // prime-to-S part of |value|
    BigInt delta;           // the matching critical-value discriminant class
    std::vector<std::pair<BigInt, int>> legendre;  // (odd prime of delta, symbol)
    int reciprocity_sign = 1;
    int product = 0;        // signed product; hypothesis holds iff +1
    bool ok = false;
};

// The quadratic-reciprocity certificate: treats the prime-to-S part of
// each |lambda~_i| as if prime and evaluates the symbol product.
// Throws not_coprime when some d shares a factor with 2 * prod delta_j.
std::vector<ParityRecord> parity_check(const std::vector<AffineForm>& tforms,
                                       const std::vector<CriticalPoint>& crit, const BigInt& t,
                                       const BigInt& s, const std::vector<BigInt>& fixed_primes,
                                       const FactorConfig& cfg = {});

// Least prime <= bound congruent to `residue` mod `modulus` with
// gcd(ell, two_prod_delta) = 1 and jacobi(delta, ell) = +1.
std::optional<BigInt> prime_witness_search(const BigInt& residue, const BigInt& modulus,
                                           const BigInt& delta, const BigInt& two_prod_delta,
                                           const BigInt& bound);

struct SeedOptions {
    SeedSearchOptions search;
    FactorConfig factor;
    bool find_witnesses = false;
    BigInt witness_bound = 100'000'000;
};

struct SeedReport {
    std::vector<BigInt> fixed_primes;
    SeedProgression progression;
    std::vector<AffineForm> transformed;
    BigInt t, s;                     // seed point in transformed coordinates
    BigInt composite_t, composite_s; // N*t + t0, N*s + s0
    std::vector<ParityRecord> parity;
    std::vector<std::optional<BigInt>> witnesses;  // parallel to parity when requested
    bool unramified_at_fixed = false;              // hypothesis a)
    bool parity_ok = false;                        // hypothesis b) certificate
    bool twisting_precondition = false;  // some transformed form constant 3 mod 4
    Verdict verdict = Verdict::Unknown;
    std::vector<std::string> notes;
};

// Full orchestration of the hypothesis checks for a seed (t, s) in the
// transformed lattice coordinates.
SeedReport verify_seed(const RationalFunctionQ& f, const BigInt& t, const BigInt& s,
                       const SeedOptions& opts = {});

}  // namespace unrx
