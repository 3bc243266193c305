#pragma once

// Builders and clause-by-clause verifiers for the two trinomial-type
// specialization families (n = 3 mod 4 and n = 2 mod 4), the
// archimedean/imaginary-quadratic check, and evidence-based S_n
// certification for concrete specializations.

#include <string>
#include <vector>

#include "unrx/localarith.hpp"

namespace unrx {

enum class FamilyTag { Tech1, Tech2 };
std::string to_string(FamilyTag t);

struct FamilyInstance {
    FamilyTag tag;
    long n = 0;
    BigInt t;
    RatPoly f;          // monic rational model X^{n-1}(X-1) + coefficient term
    IntPoly primitive;  // denominators cleared, content 1
    Rational branch_point;  // (n-1)^{n-1} / n^n, the finite nonzero branch point
};

// Throws bad_congruence / not_coprime on invalid (n, t).
FamilyInstance build_family(FamilyTag tag, long n, const BigInt& t);

struct PrimeVerdict {
    BigInt p;
    Verdict verdict = Verdict::Unknown;
    LocalCertificate cert;
    int split_symbol = 0;  // clause ii: jacobi(residue class, q)
    std::string note;
};

struct ClauseReport {
    Verdict verdict = Verdict::Unknown;
    std::vector<PrimeVerdict> primes;
    std::vector<std::string> notes;
};

// i): unramified at every prime divisor of n-1 (Tech1) / of n (Tech2).
ClauseReport verify_clause_i(const FamilyInstance& inst, int depth = 6);

// ii): every ramified prime q coprime to n(n-1) carries transposition
// inertia with decomposition inside Sym{a,b} x Alt(rest), checked as a
// tame transposition certificate plus a split condition at q.
ClauseReport verify_clause_ii(const FamilyInstance& inst, const FactorConfig& cfg = {},
                              int depth = 6);

// iii): the distinguished prime (n for Tech1 when prime; divisors of n-1
// for Tech2 when n-1 is prime or a square).
ClauseReport verify_clause_iii(const FamilyInstance& inst, int depth = 6);

struct ArchimedeanReport {
    int real_roots = 0;
    int conjugation_transpositions = 0;  // k = (n - real_roots)/2
    bool imaginary_quadratic = false;    // k odd
    int disc_sign = 0;
};
ArchimedeanReport archimedean_check(const FamilyInstance& inst);

// Square class (signed squarefree integer) of the residue extension at
// the transposition branch point; feeds the clause-ii split condition.
BigInt residue_field_class(FamilyTag tag, long n);

enum class SnVerdict { Certified, Inconclusive };
std::string to_string(SnVerdict v);

struct SnReport {
    SnVerdict verdict = SnVerdict::Inconclusive;
    BigInt irreducible_prime = 0;    // pattern [n]
    BigInt cycle_prime = 0;          // pattern containing a prime q-cycle, n/2 < q <= n-3
    int cycle_length = 0;
    BigInt near_cycle_prime = 0;     // pattern [n-1, 1]
    BigInt transposition_prime = 0;  // pattern [2, 1...1]
    bool parity_evidence = false;    // odd pattern seen or nonsquare disc
};

// Evidence-based S_n certification from factor patterns across good
// primes: transitivity, A_n containment (prime cycle, or (n-1)-cycle
// plus transposition), and odd-parity evidence.
SnReport certify_sn(const IntPoly& f, int prime_budget = 200);

struct FamilyReport {
    FamilyTag tag;
    long n = 0;
    BigInt t;
    ClauseReport clause_i, clause_ii, clause_iii;
    ArchimedeanReport archimedean;
    SnReport sn;
    Verdict overall = Verdict::Unknown;
    std::vector<std::string> notes;
};

struct FamilyOptions {
    int depth = 6;
    FactorConfig factor;
    int sn_prime_budget = 200;
};

FamilyReport verify_family(const FamilyInstance& inst, const FamilyOptions& opts = {});

}  // namespace unrx
