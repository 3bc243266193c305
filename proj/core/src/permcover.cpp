#include "unrx/permcover.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace unrx {

// ---------------------------------------------------------------------
// Permutation

Permutation::Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
            throw error("Permutation: images are not a bijection");
        seen[v - 1] = true;
    }
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw error("Permutation::transposition: bad points");
    Permutation s(n);
    std::swap(s.img_[a - 1], s.img_[b - 1]);
    return s;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > n) throw error("from_cycles: point out of range");
            img[from - 1] = to;
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) inv[img_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw error("Permutation product: size mismatch");
    // function composition: apply b first, then a
    std::vector<int> img(a.img_.size());
    for (size_t i = 0; i < img.size(); ++i) img[i] = a.img_[b.img_[i] - 1];
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int start = 1; start <= n(); ++start) {
        if (seen[start - 1]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            seen[x - 1] = true;
            cyc.push_back(x);
            x = img_[x - 1];
        } while (x != start);
        if (cyc.size() > 1) out.push_back(std::move(cyc));
    }
    return out;
}

std::string Permutation::str() const {
    auto cs = cycles();
    if (cs.empty()) return "id";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ",";
            os << c[i];
        }
        os << ")";
    }
    return os.str();
}

std::vector<int> cycle_type(const Permutation& s) {
    std::vector<int> type;
    int moved = 0;
    for (const auto& c : s.cycles()) {
        type.push_back(static_cast<int>(c.size()));
        moved += static_cast<int>(c.size());
    }
    for (int i = 0; i < s.n() - moved; ++i) type.push_back(1);
    std::sort(type.rbegin(), type.rend());
    return type;
}

Parity parity(const Permutation& s) {
    int odd_part = 0;
    for (const auto& c : s.cycles()) odd_part += static_cast<int>(c.size()) - 1;
    return odd_part % 2 == 0 ? Parity::Even : Parity::Odd;
}

int transposition_count(const Permutation& s) {
    int d = 0;
    for (const auto& c : s.cycles()) {
        if (c.size() != 2) throw error("transposition_count: not an involution");
        ++d;
    }
    return d;
}

std::vector<Permutation> closure(const std::vector<Permutation>& gens, size_t bound) {
    if (gens.empty()) throw error("closure: no generators");
    int n = gens[0].n();
    for (const auto& g : gens)
        if (g.n() != n) throw error("closure: mixed degrees");
    std::vector<Permutation> elements = {Permutation(n)};
    std::set<std::vector<int>> seen = {elements[0].images()};
    for (size_t i = 0; i < elements.size(); ++i) {
        for (const auto& g : gens) {
            Permutation next = elements[i] * g;
            if (seen.insert(next.images()).second) {
                if (elements.size() + 1 > bound)
                    throw closure_overflow("closure: more than " + std::to_string(bound) +
                                           " elements");
                elements.push_back(std::move(next));
            }
        }
    }
    return elements;
}

bool check_condition_i(const Permutation& inertia_gen, const std::vector<Permutation>& decomp_gens,
                       size_t bound) {
    auto cyc = inertia_gen.cycles();
    if (cyc.size() != 1 || cyc[0].size() != 2)
        throw not_transposition("check_condition_i: inertia generator is not a transposition");
    int a = cyc[0][0], b = cyc[0][1];
    for (const auto& e : closure(decomp_gens, bound)) {
        int ia = e.apply(a), ib = e.apply(b);
        bool fixes_setwise = (ia == a && ib == b) || (ia == b && ib == a);
        if (!fixes_setwise) return false;
        // parity of the restriction to the complement of {a,b}
        int odd_part = 0;
        for (const auto& c : e.cycles()) {
            bool touches = std::find(c.begin(), c.end(), a) != c.end() ||
                           std::find(c.begin(), c.end(), b) != c.end();
            if (!touches) odd_part += static_cast<int>(c.size()) - 1;
        }
        if (odd_part % 2 != 0) return false;
    }
    return true;
}

bool check_condition_ii(const Permutation& inertia_gen,
                        const std::vector<Permutation>& decomp_gens, size_t bound) {
    int d0 = transposition_count(inertia_gen);  // throws if not an involution
    if (d0 % 4 != 1) return false;
    for (const auto& e : closure(decomp_gens, bound)) {
        if (e.is_identity()) continue;
        if ((e * e).is_identity()) {
            // involutions may have fixed points; transposition_count only
            // accepts pure involutions, so count 2-cycles directly
            int d = 0;
            bool involution = true;
            for (const auto& c : e.cycles()) {
                if (c.size() == 2) ++d;
                else involution = false;
            }
            if (!involution) continue;  // not reachable: e^2 = id
            if (d % 4 != 0 && d % 4 != 1) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------
// QSqrt2 / CliffordElement

std::string QSqrt2::str() const {
    std::ostringstream os;
    os << a.get_str();
    if (b != 0) os << (b > 0 ? " + " : " - ") << Rational(abs(b)).get_str() << "*sqrt(2)";
    return os.str();
}

CliffordElement::CliffordElement(int n, int exp, std::vector<std::pair<std::uint32_t, int>> terms)
    : n_(n), sqrt2_exp_(exp), terms_(std::move(terms)) {
    if (n_ < 1 || n_ > 24) throw error("CliffordElement: n out of range");
}

CliffordElement CliffordElement::one(int n) { return CliffordElement(n, 0, {{0u, 1}}); }

CliffordElement CliffordElement::minus_one(int n) { return CliffordElement(n, 0, {{0u, -1}}); }

CliffordElement CliffordElement::transposition_lift(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw error("transposition_lift: bad points");
    std::uint32_t ea = 1u << (a - 1), eb = 1u << (b - 1);
    std::vector<std::pair<std::uint32_t, int>> terms = {{ea, 1}, {eb, -1}};
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        return x.first < y.first;
    });
    return CliffordElement(n, -1, std::move(terms));
}

bool CliffordElement::is_one() const {
    return sqrt2_exp_ == 0 && terms_.size() == 1 &&
           terms_[0] == std::pair<std::uint32_t, int>{0u, 1};
}

bool CliffordElement::is_minus_one() const {
    return sqrt2_exp_ == 0 && terms_.size() == 1 &&
           terms_[0] == std::pair<std::uint32_t, int>{0u, -1};
}

QSqrt2 CliffordElement::coefficient(std::uint32_t blade) const {
    for (const auto& [bl, s] : terms_) {
        if (bl != blade) continue;
        int e = sqrt2_exp_;
        Rational mag = 1;
        while (e >= 2) {
            mag *= 2;
            e -= 2;
        }
        while (e <= -2) {
            mag /= 2;
            e += 2;
        }
        Rational val = Rational(s) * mag;
        if (e == 0) return {val, Rational(0)};
        return {Rational(0), e == 1 ? val : Rational(val / 2)};  // sqrt2^-1 = sqrt2/2
    }
    return {};
}

namespace {

// Sign of e_S * e_T with e_i^2 = +1: parity of inversions between S and T.
int blade_product_sign(std::uint32_t s, std::uint32_t t) {
    int inversions = 0;
    while (t) {
        std::uint32_t j = t & ~(t - 1);  // lowest set bit
        inversions += std::popcount(s & ~(j | (j - 1)));
        t &= t - 1;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
    if (x.n_ != y.n_) throw error("CliffordElement product: size mismatch");
    std::vector<int> acc(std::size_t{1} << x.n_, 0);
    for (const auto& [bs, ss] : x.terms_)
        for (const auto& [bt, st] : y.terms_) acc[bs ^ bt] += ss * st * blade_product_sign(bs, bt);

    std::vector<std::pair<std::uint32_t, int>> terms;
    int common_pow2 = -1;
    for (std::uint32_t b = 0; b < acc.size(); ++b) {
        int c = acc[b];
        if (c == 0) continue;
        unsigned mag = static_cast<unsigned>(std::abs(c));
        if ((mag & (mag - 1)) != 0)
            throw not_group_element("product has non-uniform coefficients");
        int e = std::countr_zero(mag);
        if (common_pow2 < 0) common_pow2 = e;
        if (e != common_pow2) throw not_group_element("product has non-uniform coefficients");
        terms.emplace_back(b, c > 0 ? 1 : -1);
    }
    if (terms.empty()) throw not_group_element("product vanished");
    return CliffordElement(x.n_, x.sqrt2_exp_ + y.sqrt2_exp_ + 2 * common_pow2, std::move(terms));
}

CliffordElement CliffordElement::reversal() const {
    std::vector<std::pair<std::uint32_t, int>> terms = terms_;
    for (auto& [b, s] : terms) {
        int k = std::popcount(b);
        if ((k * (k - 1) / 2) % 2 != 0) s = -s;
    }
    return CliffordElement(n_, sqrt2_exp_, std::move(terms));
}

CliffordElement CliffordElement::grade_involution() const {
    std::vector<std::pair<std::uint32_t, int>> terms = terms_;
    for (auto& [b, s] : terms)
        if (std::popcount(b) % 2 != 0) s = -s;
    return CliffordElement(n_, sqrt2_exp_, std::move(terms));
}

std::string CliffordElement::str() const {
    std::ostringstream os;
    os << "(sqrt2)^" << sqrt2_exp_ << " * [";
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " ";
        os << (terms_[i].second > 0 ? "+" : "-") << "e{";
        std::uint32_t b = terms_[i].first;
        bool first = true;
        for (int pt = 1; pt <= n_; ++pt)
            if (b & (1u << (pt - 1))) {
                if (!first) os << ",";
                os << pt;
                first = false;
            }
        os << "}";
    }
    os << "]";
    return os.str();
}

CliffordElement lift(const Permutation& s) {
    int n = s.n();
    CliffordElement x = CliffordElement::one(n);
    for (const auto& cyc : s.cycles())
        for (size_t i = 0; i + 1 < cyc.size(); ++i)
            x = x * CliffordElement::transposition_lift(n, cyc[i], cyc[i + 1]);
    return x;
}

Permutation project(const CliffordElement& x) {
    int n = x.n();
    if (!(x * x.reversal()).is_one()) throw not_group_element("project: not a unit versor");
    CliffordElement alpha = x.grade_involution();
    CliffordElement xrev = x.reversal();
    std::vector<int> img(n, 0);
    for (int i = 1; i <= n; ++i) {
        CliffordElement ei(n, 0, {{1u << (i - 1), 1}});
        CliffordElement image = alpha * ei * xrev;
        // must be +- a single basis vector with coefficient exactly 1
        if (image.term_count() != 1 || image.sqrt2_exponent() != 0)
            throw not_group_element("project: action is not monomial");
        std::uint32_t blade = image.terms_[0].first;
        if (std::popcount(blade) != 1 || image.terms_[0].second != 1)
            throw not_group_element("project: action is not a plain permutation");
        img[i - 1] = std::countr_zero(blade) + 1;
    }
    return Permutation(std::move(img));
}

int clifford_order(const CliffordElement& x) {
    if (!(x * x.reversal()).is_one()) throw not_group_element("clifford_order: not a unit versor");
    long bound = 4;  // 4 * n!, capped; actual orders stay tiny
    for (int i = 2; i <= x.n() && bound < 1'000'000'000; ++i) bound *= i;
    CliffordElement acc = x;
    int k = 1;
    while (!acc.is_one()) {
        acc = acc * x;
        ++k;
        if (k > bound) throw not_group_element("clifford_order: order exceeds 4*n!");
    }
    return k;
}

CliffordElement clifford_commutator(const CliffordElement& x, const CliffordElement& y) {
    return x.inverse() * y.inverse() * x * y;
}

}  // namespace unrx
