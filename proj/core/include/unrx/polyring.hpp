#pragma once

// Dense univariate polynomials over Z, Q and prime fields, with the
// operations the certification pipelines need: subresultant resultants,
// discriminants, factorization mod p, Sturm chains, affine substitution
// and quartic Galois groups.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "unrx/exactnum.hpp"

namespace unrx {

class RatPoly;

// Polynomial over Z, coefficients ascending, no trailing zeros.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly constant(BigInt c);
    static IntPoly monomial(const BigInt& c, int degree);
    static IntPoly from_longs(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const BigInt& lc() const;
    const BigInt& operator[](int i) const;  // 0 outside range
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt eval(const BigInt& x) const;
    Rational eval(const Rational& x) const;
    IntPoly derivative() const;
    IntPoly reversed() const;  // X^deg * f(1/X), trailing zeros stripped

    // Content (gcd of coefficients, sign of lc) and primitive part.
    BigInt content() const;
    IntPoly primitive_part() const;

    // f(a X + b) for integers a, b.
    IntPoly compose_affine(const BigInt& a, const BigInt& b) const;
    // f(X^k)
    IntPoly inflate(int k) const;

    RatPoly to_rational() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const BigInt& c, const IntPoly& a);
    bool operator==(const IntPoly&) const = default;

    // Exact division; throws if the remainder is nonzero.
    IntPoly div_exact(const IntPoly& d) const;
    bool divisible_by(const IntPoly& d) const;

    std::string str() const;  // human-readable, for transcripts

  private:
    std::vector<BigInt> coeffs_;
    void normalize();
};

// Polynomial over Q.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    static RatPoly constant(Rational c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& lc() const;
    const Rational& operator[](int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    RatPoly derivative() const;
    RatPoly monic() const;

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rational& c, const RatPoly& a);
    bool operator==(const RatPoly&) const = default;

    // Euclidean division over Q.
    std::pair<RatPoly, RatPoly> divrem(const RatPoly& d) const;

    std::string str() const;

  private:
    std::vector<Rational> coeffs_;
    void normalize();
};

RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic gcd
RatPoly squarefree_part(const RatPoly& f);        // f / gcd(f, f')

// f(aX + b), a != 0.
RatPoly substitute_affine(const RatPoly& f, const Rational& a, const Rational& b);

// Primitive integer polynomial plus the extracted rational content:
// f = content * primitive. f != 0.
std::pair<IntPoly, Rational> normalize_content(const RatPoly& f);

// Resultant via the subresultant PRS. f, g != 0.
BigInt resultant(const IntPoly& f, const IntPoly& g);
Rational resultant(const RatPoly& f, const RatPoly& g);

// disc(f) = (-1)^{d(d-1)/2} res(f, f') / lc(f); deg f >= 1.
BigInt discriminant(const IntPoly& f);
Rational discriminant(const RatPoly& f);

// ---------------------------------------------------------------------
// Prime-field polynomials.

class ModPoly {
  public:
    ModPoly() = default;
    ModPoly(BigInt p, std::vector<BigInt> coeffs);
    static ModPoly reduce(const IntPoly& f, const BigInt& p);
    static ModPoly constant(const BigInt& p, const BigInt& c);
    static ModPoly x_power(const BigInt& p, int k);

    const BigInt& modulus() const { return p_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const BigInt& lc() const;
    const BigInt& operator[](int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt eval(const BigInt& x) const;
    ModPoly derivative() const;
    ModPoly monic() const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    ModPoly scaled(const BigInt& c) const;
    bool operator==(const ModPoly&) const = default;

    std::pair<ModPoly, ModPoly> divrem(const ModPoly& d) const;
    ModPoly mod(const ModPoly& d) const { return divrem(d).second; }

    std::string str() const;

  private:
    BigInt p_;
    std::vector<BigInt> coeffs_;
    void normalize();
};

ModPoly gcd(const ModPoly& a, const ModPoly& b);  // monic
// base^e mod m, e >= 0.
ModPoly powmod(const ModPoly& base, const BigInt& e, const ModPoly& m);

// f = prod part^k over distinct multiplicities k; parts squarefree,
// pairwise coprime, monic. Handles p-th power collapse (f' = 0).
std::vector<std::pair<ModPoly, int>> squarefree_decomposition(const ModPoly& f);

// Distinct-degree split of a squarefree monic f: list of (product of all
// irreducible factors of degree d, d), ascending d.
std::vector<std::pair<ModPoly, int>> distinct_degree_factor(const ModPoly& f);

// Full factorization into monic irreducibles with multiplicity, plus the
// leading unit. Cantor-Zassenhaus equal-degree splitting uses rng.
struct ModFactorization {
    BigInt unit;
    std::vector<std::pair<ModPoly, int>> factors;  // sorted deterministically
};
ModFactorization factor_mod_p(const ModPoly& f, std::mt19937_64& rng);

// Degrees/multiplicities of the mod-p factorization. No equal-degree
// splitting is needed, so this path is deterministic.
struct FactorPattern {
    std::vector<std::pair<int, int>> parts;  // (degree, multiplicity), sorted
    bool separable = true;

    int total_degree() const;
    bool operator==(const FactorPattern&) const = default;
    std::string str() const;
};

// Pattern of (primitive part of) f mod p; throws leading_drop if p
// divides the leading coefficient.
FactorPattern factor_pattern(const IntPoly& f, const BigInt& p);
FactorPattern factor_pattern(const ModPoly& f);

// ---------------------------------------------------------------------
// Real-root counting.

struct SturmBound {
    enum Kind { NegInfinity, Finite, PosInfinity } kind;
    Rational value;  // meaningful when Finite
    static SturmBound neg_inf() { return {NegInfinity, {}}; }
    static SturmBound pos_inf() { return {PosInfinity, {}}; }
    static SturmBound at(Rational v) { return {Finite, std::move(v)}; }
};

// Distinct real roots of f in (a, b]; squarefree part is taken first.
int sturm_count(const RatPoly& f, const SturmBound& a, const SturmBound& b);
int sturm_count(const RatPoly& f);  // over (-inf, +inf)

// ---------------------------------------------------------------------
// Irreducibility and quartic Galois groups.

enum class Trilean { True, False, Unknown };

// Irreducibility over Q of the primitive part, via mod-p degree-set
// sieving plus rational-root and two-quadratic tests in low degree.
// Budgeted: returns Unknown rather than looping.
Trilean is_irreducible(const IntPoly& f, int prime_budget = 200);

enum class QuarticGroup { S4, A4, D4, V4, C4 };
std::string to_string(QuarticGroup g);

// Galois group of an irreducible quartic, by resolvent-cubic splitting
// and the discriminant square test. Throws not_irreducible.
QuarticGroup quartic_galois_group(const IntPoly& f);

// All rational roots of f (each exactly once). Needs the divisors of the
// leading/constant coefficients, so it can throw
// factorization_budget_exceeded on adversarial inputs.
std::vector<Rational> rational_roots(const IntPoly& f, const FactorConfig& cfg = {});

}  // namespace unrx
