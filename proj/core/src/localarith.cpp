#include "unrx/localarith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace unrx {

// ---------------------------------------------------------------------
// Newton polygon

namespace {

NewtonPolygon polygon_from_points(std::vector<std::pair<int, Rational>> pts, int x_power) {
    NewtonPolygon np;
    np.x_power = x_power;
    // Lower convex hull, left to right.
    std::vector<std::pair<int, Rational>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b only if it lies strictly below segment a-pt
            Rational lhs = (b.second - a.second) * Rational(pt.first - a.first);
            Rational rhs = (pt.second - a.second) * Rational(b.first - a.first);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    np.vertices = hull;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        Rational slope =
            (hull[i + 1].second - hull[i].second) / Rational(hull[i + 1].first - hull[i].first);
        np.segments.push_back({slope, hull[i + 1].first - hull[i].first});
    }
    return np;
}

}  // namespace

NewtonPolygon newton_polygon(const RatPoly& f, const BigInt& p) {
    if (f.is_zero()) throw error("newton_polygon: zero polynomial");
    int x_power = 0;
    while (f[x_power] == 0) ++x_power;
    std::vector<std::pair<int, Rational>> pts;
    for (int i = x_power; i <= f.degree(); ++i) {
        if (f[i] == 0) continue;
        pts.emplace_back(i - x_power, Rational(valuation(f[i], p)));
    }
    return polygon_from_points(std::move(pts), x_power);
}

NewtonPolygon newton_polygon(const IntPoly& f, const BigInt& p) {
    return newton_polygon(f.to_rational(), p);
}

std::string NewtonPolygon::str() const {
    std::ostringstream os;
    if (x_power) os << "X^" << x_power << " * ";
    os << "segments [";
    for (size_t i = 0; i < segments.size(); ++i) {
        if (i) os << ", ";
        os << "(slope " << segments[i].slope.get_str() << ", length " << segments[i].length << ")";
    }
    os << "]";
    return os.str();
}

std::string to_string(LocalVerdict v) {
    switch (v) {
        case LocalVerdict::UnramifiedCertified: return "unramified-certified";
        case LocalVerdict::RamifiedTame: return "ramified-tame";
        case LocalVerdict::Unknown: return "unknown";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::Refuted: return "refuted";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

// ---------------------------------------------------------------------
// certify_unramified

namespace {

constexpr long kRootScanLimit = 1 << 20;

struct PendingClump {
    IntPoly poly;  // transformed polynomial, content stripped
    int expected;  // finite root count = clump size
    int depth_left;
    int cum_strip;
    int level;
    std::string label;
};

struct Analysis {
    std::vector<PendingClump> pending;  // deferred clumps of size 2
    int tame_pairs = 0;                 // proven e=2 pairs (odd p only)
    int residual_other = 0;             // anything not certifiable
    std::vector<int> top_frobenius;     // simple-factor degrees at level 0
};

struct Certifier {
    BigInt p;
    LocalCertificate& cert;
    Analysis& state;

    void note(const std::string& s) { cert.transcript.push_back(s); }

    // Roots in F_p of a squarefree ModPoly, by scan. Every certification
    // flow has small p here; huge p never reaches the recursive case.
    std::vector<BigInt> roots_of(const ModPoly& f) {
        std::vector<BigInt> roots;
        if (p > kRootScanLimit) return roots;
        for (BigInt c = 0; c < p; ++c)
            if (f.eval(c) == 0) roots.push_back(c);
        return roots;
    }

    // Analyze one level. `expected` is the clump size this polynomial
    // refines (-1 at the top, where no degree drop is allowed). `level`
    // counts substitutions from the top.
    void analyze(const IntPoly& g, int expected, int depth_left, int cum_strip, int level,
                 const std::string& label) {
        cert.max_strip = std::max(cert.max_strip, cum_strip);
        if (level == 1) cert.first_level_strip = std::max(cert.first_level_strip, cum_strip);
        ModPoly red = ModPoly::reduce(g, p);
        if (red.is_zero()) {
            state.residual_other++;
            note(label + ": reduction vanished");
            return;
        }
        int d = red.degree();
        FactorPattern pat = factor_pattern(red);
        cert.level_patterns.push_back(pat);
        note(label + ": pattern " + pat.str());

        if (expected >= 0 && d < expected) analyze_escape(g, expected, d, label);

        for (const auto& [part, mult] : squarefree_decomposition(red)) {
            if (mult == 1) {
                if (level == 0) {
                    for (const auto& [prod, dd] : distinct_degree_factor(part)) {
                        int count = prod.degree() / dd;
                        for (int i = 0; i < count; ++i) state.top_frobenius.push_back(dd);
                    }
                }
                continue;  // simple factors lift to unramified factors (Hensel)
            }
            std::vector<BigInt> roots = roots_of(part);
            int nonlinear_deg = part.degree() - static_cast<int>(roots.size());
            if (nonlinear_deg > 0) {
                state.residual_other++;
                note(label + ": repeated non-linear block of degree " +
                     std::to_string(nonlinear_deg) + " multiplicity " + std::to_string(mult) +
                     " left unresolved");
            }
            for (const BigInt& c : roots)
                recurse_clump(g, c, mult, depth_left, cum_strip, level, label);
        }
    }

    void recurse_clump(const IntPoly& g, const BigInt& c, int mult, int depth_left, int cum_strip,
                       int level, const std::string& label) {
        IntPoly shifted = g.compose_affine(p, c);
        BigInt content = shifted.content();
        int strip = valuation(content, p);
        IntPoly stripped =
            shifted.div_exact(IntPoly::constant(pow(p, static_cast<unsigned long>(strip))));
        int total_strip = cum_strip + strip;
        std::string sub_label = label + " | X=" + p.get_str() + "Y+" + c.get_str() + ", strip " +
                                p.get_str() + "^" + std::to_string(strip);

        if (mult == 2) {
            // Defer pairs: a lone surviving pair is discharged by disc
            // parity at odd p without burning depth.
            state.pending.push_back({stripped, mult, depth_left, total_strip, level + 1, sub_label});
            return;
        }
        if (depth_left <= 0) {
            state.residual_other++;
            note(sub_label + ": depth exhausted on clump of size " + std::to_string(mult));
            return;
        }
        analyze(stripped, mult, depth_left - 1, total_strip, level + 1, sub_label);
    }

    void analyze_escape(const IntPoly& g, int expected, int reduced_degree,
                        const std::string& label) {
        NewtonPolygon np = newton_polygon(g, p);
        // Slopes strictly between 0 and 1 are clump roots of fractional
        // valuation: ramified.
        int escaped = expected - reduced_degree;
        bool single_half_pair = false;
        for (const auto& seg : np.segments) {
            if (seg.slope == Rational(1, 2) && seg.length == 2 && escaped == 2)
                single_half_pair = true;
        }
        if (single_half_pair && p != 2) {
            state.tame_pairs++;
            note(label + ": two roots of half-integral valuation (tame e=2 pair)");
        } else {
            state.residual_other++;
            note(label + ": " + std::to_string(escaped) +
                 " roots escaped to fractional valuation; ramified, unclassified");
        }
    }
};

}  // namespace

LocalCertificate certify_unramified(const IntPoly& f_in, const BigInt& p, int depth) {
    LocalCertificate cert;
    cert.p = p;

    IntPoly f = f_in.primitive_part();
    if (f.degree() < 1) throw error("certify_unramified: constant polynomial");

    BigInt disc = discriminant(f);
    if (disc == 0) {
        cert.transcript.push_back("disc = 0: not squarefree over Q");
        return cert;
    }
    cert.disc_valuation = valuation(disc, p);
    cert.transcript.push_back("v_" + p.get_str() + "(disc) = " +
                              std::to_string(cert.disc_valuation) +
                              (cert.disc_valuation % 2 == 0 ? " (even)" : " (odd)"));

    if (mpz_divisible_p(f.lc().get_mpz_t(), p.get_mpz_t())) {
        if (mpz_divisible_p(f[0].get_mpz_t(), p.get_mpz_t())) {
            cert.transcript.push_back("p divides both leading and constant coefficient: unknown");
            return cert;
        }
        f = f.reversed();
        cert.transcript.push_back("p divides lc: analyzing the reversed polynomial");
    }

    Analysis state;
    Certifier certifier{p, cert, state};
    certifier.analyze(f, -1, depth, 0, 0, "level 0");

    // Work the deferred pairs; the parity argument goes first.
    while (true) {
        bool lone_pair =
            state.pending.size() == 1 && state.tame_pairs == 0 && state.residual_other == 0;
        if (lone_pair && p != 2 && cert.disc_valuation % 2 == 0) {
            // Inertia is trivial or a transposition on this pair; at odd p
            // a transposition forces odd disc valuation.
            cert.transcript.push_back(
                "single unresolved pair + even disc valuation: inertia trivial");
            cert.verdict = LocalVerdict::UnramifiedCertified;
            cert.frobenius_pattern = state.top_frobenius;
            return cert;
        }
        if (state.pending.empty()) break;
        std::vector<PendingClump> work;
        work.swap(state.pending);
        bool progressed = false;
        for (auto& clump : work) {
            if (clump.depth_left <= 0) {
                state.residual_other++;
                cert.transcript.push_back(clump.label + ": depth exhausted on pair");
                continue;
            }
            certifier.analyze(clump.poly, clump.expected, clump.depth_left - 1, clump.cum_strip,
                              clump.level, clump.label);
            progressed = true;
        }
        if (!progressed) break;
    }

    if (state.residual_other == 0 && state.pending.empty()) {
        if (state.tame_pairs == 0) {
            if (cert.disc_valuation % 2 != 0) {
                // Soundness guard: full resolution with odd disc valuation
                // means the analysis is inconsistent; never certify.
                cert.transcript.push_back("guard: odd disc valuation contradicts resolution");
                return cert;
            }
            cert.verdict = LocalVerdict::UnramifiedCertified;
            cert.frobenius_pattern = state.top_frobenius;
            return cert;
        }
        if (state.tame_pairs == 1 && p != 2) {
            cert.verdict = LocalVerdict::RamifiedTame;
            cert.inertia_orbits = {2};
            cert.frobenius_pattern = state.top_frobenius;
            return cert;
        }
    }
    return cert;
}

// ---------------------------------------------------------------------
// tame_inertia_cycle_type

LocalCertificate tame_inertia_cycle_type(const IntPoly& f_in, const BigInt& q) {
    if (mpz_even_p(q.get_mpz_t())) throw error("tame_inertia_cycle_type: q must be odd");
    LocalCertificate cert;
    cert.p = q;

    IntPoly f = f_in.primitive_part();
    if (mpz_divisible_p(f.lc().get_mpz_t(), q.get_mpz_t()))
        throw leading_drop("tame_inertia_cycle_type: q divides the leading coefficient");

    BigInt disc = discriminant(f);
    if (disc == 0) return cert;
    cert.disc_valuation = valuation(disc, q);

    ModPoly red = ModPoly::reduce(f, q);
    FactorPattern pat = factor_pattern(red);
    cert.level_patterns.push_back(pat);
    cert.transcript.push_back("mod " + q.get_str() + ": pattern " + pat.str());

    if (pat.separable) {
        cert.verdict = LocalVerdict::UnramifiedCertified;
        for (auto [d, m] : pat.parts) {
            (void)m;
            cert.frobenius_pattern.push_back(d);
        }
        return cert;
    }

    // Exactly one double linear factor, everything else simple, disc
    // valuation exactly 1: tame transposition inertia; the simple
    // cofactor degrees are the Frobenius data on the complement.
    int doubles = 0, bad = 0;
    for (auto [d, m] : pat.parts) {
        if (m == 1) continue;
        if (m == 2 && d == 1) ++doubles;
        else ++bad;
    }
    if (doubles == 1 && bad == 0 && cert.disc_valuation == 1) {
        cert.verdict = LocalVerdict::RamifiedTame;
        cert.inertia_orbits = {2};
        for (auto [d, m] : pat.parts)
            if (m == 1) cert.frobenius_pattern.push_back(d);
        cert.transcript.push_back(
            "double linear factor with v_q(disc) = 1: transposition inertia");
        return cert;
    }
    cert.transcript.push_back("no tame transposition certificate (v_q(disc) = " +
                              std::to_string(cert.disc_valuation) + ")");
    return cert;
}

bool residue_degree_odd_at_n(const BigInt& p) {
    if (mod(p, BigInt(4)) != 3)
        throw precondition_unmet("residue_degree_odd_at_n: p must be 3 mod 4");
    unsigned long pl = mpz_get_ui(p.get_mpz_t());
    // X^(p-1) - 2^((p+1)/2) over F_p.
    BigInt c = powmod(BigInt(2), (p + 1) / 2, p);
    std::vector<BigInt> v(pl, BigInt(0));
    v[0] = -c;
    v[pl - 1] = 1;
    ModPoly f(p, std::move(v));
    long l = 1;
    for (const auto& [prod, d] : distinct_degree_factor(f)) {
        (void)prod;
        l = std::lcm(l, static_cast<long>(d));
    }
    return l % 2 == 1;
}

int frobenius_parity(const BigInt& delta, const BigInt& q) {
    if (q == 2 || !is_prime(q)) throw error("frobenius_parity: q must be an odd prime");
    return jacobi(delta, q);
}

}  // namespace unrx
