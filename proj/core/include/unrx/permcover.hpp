#pragma once

// Permutations of {1..n} and their lifts to the double cover of S_n in
// which transpositions lift to involutions. The cover is modeled inside
// the Clifford algebra with e_i^2 = +1: a transposition (a b) lifts to
// (e_a - e_b)/sqrt(2), and the center is {+1, -1}.

#include <cstdint>
#include <string>
#include <vector>

#include "unrx/exactnum.hpp"

namespace unrx {

class Permutation {
  public:
    explicit Permutation(int n);                     // identity
    explicit Permutation(std::vector<int> images);   // 1-based images
    static Permutation transposition(int n, int a, int b);
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int n() const { return static_cast<int>(img_.size()); }
    int apply(int point) const { return img_[point - 1]; }  // 1-based
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);  // composition, b first
    bool operator==(const Permutation&) const = default;
    bool is_identity() const;

    std::vector<std::vector<int>> cycles() const;  // nontrivial cycles
    std::string str() const;

  private:
    std::vector<int> img_;  // img_[i] = image of i+1
};

// Multiset of cycle lengths, descending, summing to n.
std::vector<int> cycle_type(const Permutation& s);
enum class Parity { Even, Odd };
Parity parity(const Permutation& s);

// Number of 2-cycles of an involution; throws if s^2 != id.
int transposition_count(const Permutation& s);

// Full subgroup generated by `gens`, deterministic order; throws
// closure_overflow past `bound` elements.
std::vector<Permutation> closure(const std::vector<Permutation>& gens, size_t bound = 1'000'000);

// Proposition-style predicates on decomposition groups.
// i): inertia a transposition (a b); every element of the closure fixes
// {a,b} setwise and is even on the complement.
bool check_condition_i(const Permutation& inertia_gen, const std::vector<Permutation>& decomp_gens,
                       size_t bound = 1'000'000);
// ii): inertia an involution with 4j+1 transpositions; every involution
// in the closure has d = 0,1 mod 4 transpositions.
bool check_condition_ii(const Permutation& inertia_gen,
                        const std::vector<Permutation>& decomp_gens, size_t bound = 1'000'000);

// Element of Q(sqrt(2)), the coefficient field of the cover.
struct QSqrt2 {
    Rational a;  // rational part
    Rational b;  // coefficient of sqrt(2)

    QSqrt2() : a(0), b(0) {}
    QSqrt2(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
    friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a + y.a, x.b + y.b}; }
    friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a - y.a, x.b - y.b}; }
    friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    bool operator==(const QSqrt2&) const = default;
    std::string str() const;
};

// Group element of the double cover: (sqrt 2)^e * sum of +-1 blades. The
// uniform-coefficient shape is preserved by products of transposition
// lifts; multiplication re-normalizes and rejects anything else.
class CliffordElement {
  public:
    static CliffordElement one(int n);
    static CliffordElement minus_one(int n);
    // (e_a - e_b)/sqrt(2), 1-based points.
    static CliffordElement transposition_lift(int n, int a, int b);

    int n() const { return n_; }
    bool is_one() const;
    bool is_minus_one() const;
    bool is_central() const { return is_one() || is_minus_one(); }

    // Coefficient of the blade indexed by a point subset (bitmask, bit
    // i-1 for point i).
    QSqrt2 coefficient(std::uint32_t blade) const;
    size_t term_count() const { return terms_.size(); }
    int sqrt2_exponent() const { return sqrt2_exp_; }

    friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y);
    CliffordElement reversal() const;         // anti-automorphism; inverse for group elements
    CliffordElement grade_involution() const; // e_S -> (-1)^|S| e_S
    CliffordElement inverse() const { return reversal(); }

    bool operator==(const CliffordElement&) const = default;
    std::string str() const;

  private:
    CliffordElement(int n, int exp, std::vector<std::pair<std::uint32_t, int>> terms);
    int n_ = 0;
    int sqrt2_exp_ = 0;  // overall scale (sqrt 2)^sqrt2_exp_
    std::vector<std::pair<std::uint32_t, int>> terms_;  // (blade, +-1), sorted by blade
    friend Permutation project(const CliffordElement& x);
};

// Lift along the canonical decomposition of each cycle (a1..ak) into
// (a1 a2)(a2 a3)...(a_{k-1} a_k); other choices differ by the center.
CliffordElement lift(const Permutation& s);

// Permutation recovered from the twisted conjugation action on the span
// of e_1..e_n; throws not_group_element if x does not act monomially.
Permutation project(const CliffordElement& x);

// Order by repeated multiplication, capped at 4 * n!.
int clifford_order(const CliffordElement& x);

// x^-1 y^-1 x y.
CliffordElement clifford_commutator(const CliffordElement& x, const CliffordElement& y);

}  // namespace unrx
