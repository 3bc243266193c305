#include "unrx/ratcrit.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace unrx {

RationalFunctionQ make_rational_function(IntPoly g, IntPoly h) {
    if (g.is_zero() || h.is_zero()) throw error("rational function: zero numerator/denominator");
    RatPoly common = gcd(g.to_rational(), h.to_rational());
    if (common.degree() > 0) throw error("rational function: g and h share a factor");
    RationalFunctionQ f;
    f.degree = std::max(g.degree(), h.degree());
    if (f.degree < 1) throw error("rational function: constant");
    f.num = std::move(g);
    f.den = std::move(h);
    return f;
}

ProjectivePoint ProjectivePoint::from_rational(const Rational& q) {
    return {BigInt(q.get_num()), BigInt(q.get_den())};
}

Rational ProjectivePoint::to_rational() const {
    if (is_infinity()) throw error("ProjectivePoint: infinity has no rational value");
    return make_rational(alpha, beta);
}

bool ProjectivePoint::operator<(const ProjectivePoint& o) const {
    if (is_infinity() != o.is_infinity()) return !is_infinity();
    if (is_infinity()) return false;
    return alpha * o.beta < o.alpha * beta;
}

std::string ProjectivePoint::str() const {
    if (is_infinity()) return "inf";
    if (beta == 1) return alpha.get_str();
    return alpha.get_str() + "/" + beta.get_str();
}

// ---------------------------------------------------------------------
// critical data

namespace {

// beta*g - alpha*h, primitive.
IntPoly fiber_polynomial(const RationalFunctionQ& f, const ProjectivePoint& gamma) {
    IntPoly F = gamma.beta * f.num - gamma.alpha * f.den;
    return F.primitive_part();
}

}  // namespace

std::vector<CriticalPoint> critical_data(const RationalFunctionQ& f, const FactorConfig& cfg) {
    int n = f.degree;
    IntPoly wronskian = f.num.derivative() * f.den - f.num * f.den.derivative();
    if (wronskian.is_zero()) throw not_generic("critical_data: constant function");
    IntPoly w = wronskian.primitive_part();

    // finite critical points: all roots of w must be rational and simple
    std::vector<Rational> etas = rational_roots(w, cfg);
    if (static_cast<int>(etas.size()) != w.degree())
        throw not_generic("critical_data: irrational or repeated critical points (" +
                          std::to_string(etas.size()) + " rational roots of a degree-" +
                          std::to_string(w.degree()) + " wronskian)");

    // critical points grouped by critical value
    std::map<ProjectivePoint, std::vector<ProjectivePoint>> by_value;
    for (const auto& eta : etas) {
        Rational hv = f.den.eval(eta);
        ProjectivePoint gamma;
        if (hv == 0) gamma = ProjectivePoint::infinity();
        else gamma = ProjectivePoint::from_rational(f.num.eval(eta) / hv);
        by_value[gamma].push_back(ProjectivePoint::from_rational(eta));
    }

    // the point at infinity ramifies iff |deg g - deg h| >= 2 or the
    // top-degree fiber degenerates by >= 2
    {
        ProjectivePoint gamma_inf;
        int e_inf = 0;
        if (f.num.degree() > f.den.degree()) {
            gamma_inf = ProjectivePoint::infinity();
            e_inf = f.num.degree() - f.den.degree();
        } else if (f.num.degree() < f.den.degree()) {
            gamma_inf = ProjectivePoint{0, 1};
            e_inf = f.den.degree() - f.num.degree();
        } else {
            gamma_inf = ProjectivePoint::from_rational(Rational(f.num.lc()) / Rational(f.den.lc()));
            IntPoly top = fiber_polynomial(f, gamma_inf);
            e_inf = n - top.degree();
        }
        if (e_inf >= 2) {
            if (e_inf > 2)
                throw not_generic("critical_data: ramification index " + std::to_string(e_inf) +
                                  " at infinity");
            by_value[gamma_inf].push_back(ProjectivePoint::infinity());
        }
    }

    if (by_value.size() != static_cast<size_t>(2 * n - 2))
        throw not_generic("critical_data: " + std::to_string(by_value.size()) +
                          " distinct critical values, need " + std::to_string(2 * n - 2));

    std::vector<CriticalPoint> out;
    for (const auto& [gamma, preimages] : by_value) {
        if (preimages.size() != 1)
            throw not_generic("critical_data: critical value " + gamma.str() +
                              " has " + std::to_string(preimages.size()) + " double preimages");
        CriticalPoint cp;
        cp.gamma = gamma;
        cp.eta = preimages[0];

        IntPoly fiber = fiber_polynomial(f, gamma);
        int inf_mult = n - fiber.degree();
        if (cp.eta.is_infinity()) {
            if (inf_mult != 2)
                throw not_generic("critical_data: infinity preimage of multiplicity " +
                                  std::to_string(inf_mult) + " at " + gamma.str());
            cp.q = fiber;
        } else {
            if (inf_mult > 1)
                throw not_generic("critical_data: extra ramification at infinity over " +
                                  gamma.str());
            IntPoly lin({-cp.eta.alpha, cp.eta.beta});
            IntPoly sq = lin * lin;
            if (!fiber.divisible_by(sq))
                throw not_generic("critical_data: preimage is not a double root at " +
                                  gamma.str());
            IntPoly q = fiber.div_exact(sq);
            if (q.divisible_by(lin))
                throw not_generic("critical_data: triple preimage at " + gamma.str());
            cp.q = q.primitive_part();
        }
        cp.q_disc = discriminant(cp.q);
        if (cp.q_disc == 0) throw not_generic("critical_data: residue cofactor not separable");
        cp.delta = squarefree_part(cp.q_disc, cfg);
        out.push_back(std::move(cp));
    }
    std::sort(out.begin(), out.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) { return a.gamma < b.gamma; });
    return out;
}

// ---------------------------------------------------------------------
// homogenized discriminant

std::string AffineForm::str() const {
    std::ostringstream os;
    os << u.get_str() << "*T";
    if (v != 0) os << (v > 0 ? " + " : " - ") << BigInt(abs(v)).get_str() << "*S";
    if (w != 0) os << (w > 0 ? " + " : " - ") << BigInt(abs(w)).get_str();
    return os.str();
}

HomogenizedDisc homogenized_discriminant(const RationalFunctionQ& f,
                                         const std::vector<CriticalPoint>& crit) {
    HomogenizedDisc hd;
    for (const auto& cp : crit) hd.forms.push_back({cp.gamma.beta, -cp.gamma.alpha, 0, 1});

    // content from samples: disc(s*g - t*h) / prod(forms), constant
    // across the lattice where the fiber has full degree
    int n = f.degree;
    bool have = false;
    long samples = 0;
    for (long t = 1; samples < 25 && t < 500; ++t) {
        for (long s = 1; samples < 25 && s <= 3; ++s) {
            if (gcd(BigInt(t), BigInt(s)) != 1) continue;
            IntPoly fiber = BigInt(s) * f.num - BigInt(t) * f.den;
            if (fiber.degree() != n) continue;
            BigInt prod = 1;
            for (const auto& form : hd.forms) prod *= form.eval(t, s);
            if (prod == 0) continue;
            BigInt disc = discriminant(fiber);
            BigInt c;
            if (!mpz_divisible_p(disc.get_mpz_t(), prod.get_mpz_t()))
                throw error("homogenized_discriminant: form product does not divide a sample");
            mpz_divexact(c.get_mpz_t(), disc.get_mpz_t(), prod.get_mpz_t());
            if (!have) {
                hd.content = c;
                have = true;
            } else if (hd.content != c) {
                throw error("homogenized_discriminant: content is not constant across samples");
            }
            ++samples;
        }
    }
    if (!have) throw error("homogenized_discriminant: no usable samples");
    return hd;
}

std::vector<BigInt> fixed_prime_divisors(const BigInt& content,
                                         const std::vector<AffineForm>& forms) {
    if (forms.empty()) throw error("fixed_prime_divisors: no forms");
    std::vector<BigInt> candidates;
    // divisors of the content
    for (const auto& [p, e] : factorize(content).factors) {
        (void)e;
        candidates.push_back(p);
    }
    // small primes that could cover the plane by lines
    BigInt p = 1;
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p > static_cast<long>(2 * forms.size() + 1)) break;
        candidates.push_back(p);
    }
    // pairwise cross determinants
    for (size_t i = 0; i < forms.size(); ++i)
        for (size_t j = i + 1; j < forms.size(); ++j) {
            BigInt det = forms[i].u * forms[j].v - forms[j].u * forms[i].v;
            if (det == 0) continue;
            for (const auto& [q, e] : factorize(det).factors) {
                (void)e;
                candidates.push_back(q);
            }
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<BigInt> fixed;
    for (const auto& cand : candidates) {
        if (mpz_divisible_p(content.get_mpz_t(), cand.get_mpz_t())) {
            fixed.push_back(cand);
            continue;
        }
        bool divides_all = true;
        for (BigInt t = 0; t < cand && divides_all; ++t)
            for (BigInt s = 0; s < cand && divides_all; ++s) {
                BigInt value = mod(content, cand);
                for (const auto& form : forms) value = mod(value * form.eval(t, s), cand);
                if (value != 0) divides_all = false;
            }
        if (divides_all) fixed.push_back(cand);
    }
    return fixed;
}

// ---------------------------------------------------------------------
// seed search

SeedProgression unramified_seed_search(const RationalFunctionQ& f,
                                       const std::vector<BigInt>& fixed_primes,
                                       const std::vector<CriticalPoint>& crit,
                                       const SeedSearchOptions& opts) {
    SeedProgression prog;
    if (fixed_primes.empty()) return prog;  // t0 = 0, N = 1

    for (long t = 0; t <= opts.t_bound; ++t) {
        // skip critical values of the form t/1
        bool critical = false;
        for (const auto& cp : crit)
            if (cp.gamma.beta * t == cp.gamma.alpha) critical = true;
        if (critical) continue;

        IntPoly fiber = (f.num - BigInt(t) * f.den).primitive_part();
        std::vector<PerPrimeSeed> seeds;
        bool all_ok = true;
        for (const auto& p : fixed_primes) {
            LocalCertificate cert = certify_unramified(fiber, p, opts.depth);
            if (!cert.certified_unramified()) {
                all_ok = false;
                break;
            }
            PerPrimeSeed seed;
            seed.p = p;
            seed.cert = std::move(cert);
            seeds.push_back(std::move(seed));
        }
        if (!all_ok) continue;

        // stabilization exponents: the first-substitution pattern depth и
        // the valuation-constancy bound for the linear forms
        prog.t0 = t;
        prog.s0 = 1;
        prog.N = 1;
        for (auto& seed : seeds) {
            int lambda_bound = 0;
            for (const auto& cp : crit) {
                BigInt lam = cp.gamma.beta * t - cp.gamma.alpha;
                lambda_bound = std::max(lambda_bound, valuation(lam, seed.p));
            }
            seed.lambda_bound = lambda_bound;
            seed.exponent = 1 + std::max(seed.cert.first_level_strip, lambda_bound);
            BigInt pk = pow(seed.p, static_cast<unsigned long>(seed.exponent));
            seed.residue = mod(BigInt(t), pk);
            prog.N *= pk;
        }
        prog.t0 = mod(BigInt(t), prog.N);
        prog.per_prime = std::move(seeds);
        return prog;
    }
    throw search_exhausted("unramified_seed_search: no certified seed below t = " +
                           std::to_string(opts.t_bound));
}

std::vector<AffineForm> transformed_forms(const std::vector<AffineForm>& forms, const BigInt& N,
                                          const BigInt& t0, const BigInt& s0) {
    if (N == 0) throw error("transformed_forms: N must be nonzero");
    std::vector<AffineForm> out;
    for (const auto& form : forms) {
        AffineForm tf;
        tf.u = form.u * N;
        tf.v = form.v * N;
        tf.w = form.u * t0 + form.v * s0 + form.w;
        BigInt nu = gcd(gcd(abs(tf.u), abs(tf.v)), abs(tf.w));
        if (nu == 0) throw error("transformed_forms: form vanishes at the base seed");
        tf.nu = nu;
        mpz_divexact(tf.u.get_mpz_t(), tf.u.get_mpz_t(), nu.get_mpz_t());
        mpz_divexact(tf.v.get_mpz_t(), tf.v.get_mpz_t(), nu.get_mpz_t());
        mpz_divexact(tf.w.get_mpz_t(), tf.w.get_mpz_t(), nu.get_mpz_t());
        out.push_back(std::move(tf));
    }
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (out[i].u * out[j].v == out[j].u * out[i].v)
                throw dependent_forms("transformed_forms: forms " + std::to_string(i) + " and " +
                                      std::to_string(j) + " are affinely dependent");
    return out;
}

// ---------------------------------------------------------------------
// parity

std::vector<ParityRecord> parity_check(const std::vector<AffineForm>& tforms,
                                       const std::vector<CriticalPoint>& crit, const BigInt& t,
                                       const BigInt& s, const std::vector<BigInt>& fixed_primes,
                                       const FactorConfig& cfg) {
    if (tforms.size() != crit.size()) throw error("parity_check: form/critical size mismatch");
    BigInt two_prod = 2;
    for (const auto& cp : crit) two_prod *= abs(cp.delta);

    std::vector<ParityRecord> out;
    for (size_t i = 0; i < tforms.size(); ++i) {
        ParityRecord rec;
        rec.index = i;
        rec.form = tforms[i];
        rec.value = tforms[i].eval(t, s);
        rec.sign = rec.value > 0 ? 1 : (rec.value < 0 ? -1 : 0);
        if (rec.value == 0) throw error("parity_check: seed lies on a form");
        rec.delta = crit[i].delta;

        BigInt d = abs(rec.value);
        for (const auto& p : fixed_primes) d = remove_factor(d, p);
        rec.d = d;

        BigInt g = gcd(d, two_prod);
        if (g != 1)
            throw not_coprime("parity_check: D_" + std::to_string(i) +
                              " shares the factor " + g.get_str() + " with 2*prod(delta)");

        // (delta / d) with d treated as a prime: sign part, 2 part, and
        // odd prime factors flipped by reciprocity
        int total = 1;
        int flips = 1;
        BigInt delta_abs = abs(rec.delta);
        if (rec.delta < 0 && mod(d, BigInt(4)) == 3) flips = -flips;
        if (mpz_even_p(delta_abs.get_mpz_t())) {
            BigInt m8 = mod(d, BigInt(8));
            if (m8 == 3 || m8 == 5) flips = -flips;  // (2/d)
            delta_abs /= 2;
        }
        for (const auto& [p, e] : factorize(delta_abs, cfg).factors) {
            (void)e;  // delta squarefree
            int sym = jacobi(d, p);
            rec.legendre.emplace_back(p, sym);
            total *= sym;
            if (mod(p, BigInt(4)) == 3 && mod(d, BigInt(4)) == 3) flips = -flips;
        }
        rec.reciprocity_sign = flips;
        rec.product = total * flips;
        // cross-check against the Jacobi symbol computed directly
        if (rec.product != jacobi(rec.delta, d))
            throw error("parity_check: reciprocity bookkeeping disagrees with jacobi");
        rec.ok = rec.product == 1;
        out.push_back(std::move(rec));
    }
    return out;
}

std::optional<BigInt> prime_witness_search(const BigInt& residue, const BigInt& modulus,
                                           const BigInt& delta, const BigInt& two_prod_delta,
                                           const BigInt& bound) {
    BigInt a = mod(residue, modulus);
    if (gcd(a, modulus) != 1)
        throw error("prime_witness_search: class not coprime to the modulus");
    for (BigInt ell = a; ell <= bound; ell += modulus) {
        if (ell < 2) continue;
        if (gcd(ell, two_prod_delta) != 1) continue;
        if (!is_prime(ell)) continue;
        if (jacobi(delta, ell) != 1) continue;
        return ell;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------
// orchestration

SeedReport verify_seed(const RationalFunctionQ& f, const BigInt& t, const BigInt& s,
                       const SeedOptions& opts) {
    SeedReport rep;
    rep.t = t;
    rep.s = s;

    std::vector<CriticalPoint> crit = critical_data(f, opts.factor);
    HomogenizedDisc hd = homogenized_discriminant(f, crit);
    rep.fixed_primes = fixed_prime_divisors(hd.content, hd.forms);

    try {
        rep.progression = unramified_seed_search(f, rep.fixed_primes, crit, opts.search);
        rep.unramified_at_fixed = true;
    } catch (const search_exhausted& e) {
        rep.notes.push_back(e.what());
        rep.verdict = Verdict::Unknown;
        return rep;
    }

    rep.composite_t = rep.progression.N * t + rep.progression.t0;
    rep.composite_s = rep.progression.N * s + rep.progression.s0;
    if (gcd(rep.composite_t, rep.composite_s) != 1) {
        rep.notes.push_back("composite seed not coprime: gcd(" + rep.composite_t.get_str() + ", " +
                            rep.composite_s.get_str() + ") > 1");
        rep.verdict = Verdict::Refuted;
        return rep;
    }
    for (const auto& cp : crit) {
        if (cp.gamma.beta * rep.composite_t == cp.gamma.alpha * rep.composite_s) {
            rep.notes.push_back("seed specializes to the critical value " + cp.gamma.str());
            rep.verdict = Verdict::Refuted;
            return rep;
        }
    }

    rep.transformed =
        transformed_forms(hd.forms, rep.progression.N, rep.progression.t0, rep.progression.s0);

    // twisting precondition: some transformed form is constant 3 mod 4
    for (const auto& tf : rep.transformed) {
        if (mod(tf.u, BigInt(4)) == 0 && mod(tf.v, BigInt(4)) == 0 && mod(tf.w, BigInt(4)) == 3)
            rep.twisting_precondition = true;
    }

    try {
        rep.parity = parity_check(rep.transformed, crit, t, s, rep.fixed_primes, opts.factor);
    } catch (const not_coprime& e) {
        rep.notes.push_back(e.what());
        rep.verdict = Verdict::Refuted;
        return rep;
    }

    rep.parity_ok = true;
    for (const auto& rec : rep.parity)
        if (!rec.ok) rep.parity_ok = false;

    if (opts.find_witnesses) {
        BigInt two_prod = 2;
        for (const auto& cp : crit) two_prod *= abs(cp.delta);
        for (const auto& rec : rep.parity) {
            BigInt modulus = 4 * abs(rec.delta);
            rep.witnesses.push_back(
                prime_witness_search(rec.d, modulus, rec.delta, two_prod, opts.witness_bound));
        }
    }

    rep.verdict = rep.unramified_at_fixed && rep.parity_ok ? Verdict::Certified : Verdict::Refuted;
    return rep;
}

}  // namespace unrx
