#include <doctest.h>

#include <random>

#include "unrx/permcover.hpp"

using namespace unrx;

namespace {

// All permutations of 1..n in lexicographic order.
std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(img[i], img[rng() % (i + 1)]);
    return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("cycle_type and parity") {
    Permutation t12 = Permutation::transposition(6, 1, 2);
    CHECK(cycle_type(t12) == std::vector<int>{2, 1, 1, 1, 1});
    CHECK(parity(t12) == Parity::Odd);

    Permutation id(5);
    CHECK(cycle_type(id) == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(parity(id) == Parity::Even);

    // five disjoint transpositions in S_10: d = 5 = 1 mod 4, odd
    Permutation inv = Permutation::from_cycles(
        10, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}});
    CHECK(cycle_type(inv) == std::vector<int>{2, 2, 2, 2, 2});
    CHECK(parity(inv) == Parity::Odd);
    CHECK(transposition_count(inv) == 5);
}

TEST_CASE("closure") {
    auto c1 = closure({Permutation::transposition(3, 1, 2)});
    CHECK(c1.size() == 2);

    auto c2 = closure({Permutation::transposition(5, 1, 2),
                       Permutation::from_cycles(5, {{3, 4, 5}})});
    CHECK(c2.size() == 6);

    std::vector<Permutation> all_t;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) all_t.push_back(Permutation::transposition(4, a, b));
    CHECK(closure(all_t).size() == 24);

    CHECK_THROWS_AS((void)closure(all_t, 10), closure_overflow);
}

TEST_CASE("check_condition_i") {
    // decomposition <(1,2),(3,4,5)> with inertia (1,2): contained
    CHECK(check_condition_i(Permutation::transposition(5, 1, 2),
                            {Permutation::transposition(5, 1, 2),
                             Permutation::from_cycles(5, {{3, 4, 5}})}));
    // (3,4) is odd on the complement
    CHECK_FALSE(check_condition_i(Permutation::transposition(5, 1, 2),
                                  {Permutation::transposition(5, 1, 2),
                                   Permutation::transposition(5, 3, 4)}));
    // (1,3) does not normalize {1,2}
    CHECK_FALSE(check_condition_i(Permutation::transposition(5, 1, 2),
                                  {Permutation::transposition(5, 1, 3)}));
    CHECK_THROWS_AS((void)check_condition_i(Permutation::from_cycles(5, {{1, 2, 3}}),
                                            {Permutation(5)}),
                    not_transposition);
}

TEST_CASE("check_condition_ii") {
    Permutation five = Permutation::from_cycles(10, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}});
    CHECK(check_condition_ii(five, {five}));

    // single transposition inertia (d=1) but a d=2 involution in the group
    Permutation d2 = Permutation::from_cycles(6, {{3, 4}, {5, 6}});
    CHECK_FALSE(check_condition_ii(Permutation::transposition(6, 1, 2),
                                   {Permutation::transposition(6, 1, 2), d2}));

    // d = 2 inertia: 2 != 0,1 mod 4
    CHECK_FALSE(check_condition_ii(Permutation::from_cycles(6, {{1, 2}, {3, 4}}),
                                   {Permutation::from_cycles(6, {{1, 2}, {3, 4}})}));
}

TEST_CASE("transposition lifts square to +1, disjoint pairs to -1") {
    // lift((1,2))^2 = +1
    CliffordElement t12 = lift(Permutation::transposition(6, 1, 2));
    CHECK((t12 * t12).is_one());
    CHECK(clifford_order(t12) == 2);

    // lift((1,2)(3,4))^2 = -1 (d = 2: order 4)
    CliffordElement d2 = lift(Permutation::from_cycles(6, {{1, 2}, {3, 4}}));
    CHECK((d2 * d2).is_minus_one());
    CHECK(clifford_order(d2) == 4);

    // d = 4: order 2 again
    CliffordElement d4 = lift(Permutation::from_cycles(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}));
    CHECK((d4 * d4).is_one());
    CHECK(clifford_order(d4) == 2);

    // d = 5: order 2
    CliffordElement d5 = lift(Permutation::from_cycles(10, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}}));
    CHECK((d5 * d5).is_one());
}

TEST_CASE("commutator of disjoint transposition lifts is the central involution") {
    CliffordElement x = lift(Permutation::transposition(6, 1, 2));
    CliffordElement y = lift(Permutation::transposition(6, 3, 4));
    CHECK(clifford_commutator(x, y).is_minus_one());
    CHECK(clifford_commutator(x, x).is_one());

    // commutator with the lift of an even permutation of the complement is +1
    CliffordElement z = lift(Permutation::from_cycles(6, {{3, 4, 5}}));
    CHECK(clifford_commutator(x, z).is_one());

    // odd on the complement: -1
    CliffordElement w = lift(Permutation::transposition(6, 3, 4));
    CHECK(clifford_commutator(x, w).is_minus_one());

    // the center: -1 has order 2
    CliffordElement m = CliffordElement::minus_one(6);
    CHECK(clifford_order(m) == 2);
    CHECK((m * m).is_one());
}

TEST_CASE("projection inverts lift exhaustively for n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& s : all_permutations(n)) {
            CHECK(project(lift(s)) == s);
        }
    }
}

TEST_CASE("projection inverts lift randomized for n = 7..10") {
    std::mt19937_64 rng(71);
    for (int n = 7; n <= 10; ++n) {
        for (int i = 0; i < 50; ++i) {
            Permutation s = random_permutation(n, rng);
            CHECK(project(lift(s)) == s);
        }
    }
}

TEST_CASE("lift is a section up to the center") {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 2000; ++i) {
        int n = 3 + static_cast<int>(rng() % 6);  // up to 8
        Permutation s = random_permutation(n, rng);
        Permutation t = random_permutation(n, rng);
        CliffordElement prod = lift(s) * lift(t);
        CliffordElement target = lift(s * t);
        bool plus = prod == target;
        bool minus = prod == (CliffordElement::minus_one(n) * target);
        CHECK((plus || minus));
    }
}

TEST_CASE("order rule for involutions, exhaustive n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& s : all_permutations(n)) {
            if (s.is_identity() || !(s * s).is_identity()) continue;
            int d = transposition_count(s);
            int expect = (d % 4 == 0 || d % 4 == 1) ? 2 : 4;
            CHECK(clifford_order(lift(s)) == expect);
        }
    }
}

TEST_CASE("condition i implies commuting lifts (cross-module)") {
    // decomposition subgroup of <(1,2)> x Alt(complement): every element
    // commutes with the lift of the inertia transposition in the cover
    std::vector<Permutation> gens = {Permutation::transposition(7, 1, 2),
                                     Permutation::from_cycles(7, {{3, 4, 5}}),
                                     Permutation::from_cycles(7, {{3, 4}, {5, 6}})};
    REQUIRE(check_condition_i(gens[0], gens));
    CliffordElement tlift = lift(gens[0]);
    for (const auto& e : closure(gens)) {
        CHECK(clifford_commutator(tlift, lift(e)).is_one());
    }
}

TEST_CASE("coefficient access exposes exact Q(sqrt 2) values") {
    CliffordElement g = CliffordElement::transposition_lift(4, 1, 2);
    QSqrt2 ca = g.coefficient(0b0001);
    QSqrt2 cb = g.coefficient(0b0010);
    CHECK(ca == QSqrt2{Rational(0), Rational(1, 2)});   // 1/sqrt2 = sqrt2/2
    CHECK(cb == QSqrt2{Rational(0), Rational(-1, 2)});
    CHECK(g.coefficient(0b1000) == QSqrt2{});
    // QSqrt2 ring arithmetic
    QSqrt2 s2{Rational(0), Rational(1)};
    CHECK(s2 * s2 == QSqrt2{Rational(2), Rational(0)});
    QSqrt2 x{Rational(1), Rational(1)};
    CHECK(x * x == QSqrt2{Rational(3), Rational(2)});
}
