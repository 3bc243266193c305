#pragma once

// Local analysis at a fixed prime: Newton polygons, unramifiedness
// certificates for splitting fields, tame transposition-inertia
// detection at odd primes, and residue-degree parity.
//
// Certification is a sound semi-decision procedure: UnramifiedCertified
// and RamifiedTame verdicts are proofs, Unknown carries no claim.

#include <string>
#include <vector>

#include "unrx/polyring.hpp"

namespace unrx {

struct NewtonPolygon {
    int x_power = 0;  // exact power of X factored out first
    struct Segment {
        Rational slope;
        int length;  // horizontal span; roots of valuation -slope
        bool operator==(const Segment&) const = default;
    };
    std::vector<std::pair<int, Rational>> vertices;  // (index, valuation)
    std::vector<Segment> segments;                   // slopes strictly increasing

    std::string str() const;
};

NewtonPolygon newton_polygon(const RatPoly& f, const BigInt& p);
NewtonPolygon newton_polygon(const IntPoly& f, const BigInt& p);

enum class LocalVerdict { UnramifiedCertified, RamifiedTame, Unknown };
std::string to_string(LocalVerdict v);

// Tri-state verdict used by every report-producing pipeline.
enum class Verdict { Certified, Refuted, Unknown };
std::string to_string(Verdict v);

struct LocalCertificate {
    BigInt p;
    LocalVerdict verdict = LocalVerdict::Unknown;

    // RamifiedTame: inertia acts with these orbit sizes (always [2] here,
    // padded with fixed points by the caller's n).
    std::vector<int> inertia_orbits;
    // Factor degrees of the separable cofactor mod p (Frobenius data).
    std::vector<int> frobenius_pattern;

    int disc_valuation = -1;  // v_p(disc f), -1 if disc == 0
    int max_strip = 0;        // deepest cumulative p-power stripped at analyzed levels
    int first_level_strip = 0;  // p-power stripped entering the first substitution
    std::vector<FactorPattern> level_patterns;  // reduction pattern per analyzed level
    std::vector<std::string> transcript;

    bool certified_unramified() const { return verdict == LocalVerdict::UnramifiedCertified; }
};

// Unramifiedness certificate for the splitting field of f at p.
// Base case: f separable mod p. Recursive case: substitute X = pY + c at
// repeated linear factors, strip content, recurse up to `depth`
// substitutions. A single leftover root pair at odd p is discharged by
// the even-discriminant-valuation argument. Never certifies when
// v_p(disc f) is odd.
LocalCertificate certify_unramified(const IntPoly& f, const BigInt& p, int depth);

// Tame inertia at odd q: certifies a transposition when the mod-q
// pattern has exactly one double linear factor, all else separable, and
// v_q(disc f) = 1. Separable pattern certifies unramified.
LocalCertificate tame_inertia_cycle_type(const IntPoly& f, const BigInt& q);

// Factor X^(p-1) - 2^((p+1)/2) over F_p; true iff the lcm of the factor
// degrees is odd. p = 3 mod 4.
bool residue_degree_odd_at_n(const BigInt& p);

// jacobi(delta, q): +1 certifies even Frobenius on the residue extension
// with discriminant class delta; 0 when q | delta.
int frobenius_parity(const BigInt& delta, const BigInt& q);

}  // namespace unrx
