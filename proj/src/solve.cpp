#include "ore/solve.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "modp_poly.hpp"

namespace ore {

RationalFunction apply_operator(const OreOperator& l, const RationalFunction& f) {
    return l.apply(f);
}

std::vector<Polynomial> polynomial_coefficients(const OreOperator& l) {
    if (l.is_zero()) throw error("zero operator has no coefficient normalization");
    Polynomial den(Rational(1));
    for (const auto& c : l.coeffs()) den = poly_lcm(den, c.den());
    std::vector<Polynomial> ps(l.coeffs().size());
    for (size_t i = 0; i < ps.size(); ++i)
        ps[i] = l.coeffs()[i].num() * poly_divexact(den, l.coeffs()[i].den());
    // joint integer-primitive normalization
    Rational content = 0;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        IntegerSplit s = integer_split(p);
        if (content == 0)
            content = s.content;
        else {
            // gcd of rationals: gcd of numerators / lcm of denominators
            Integer gn, ld;
            mpz_gcd(gn.get_mpz_t(), content.get_num().get_mpz_t(), s.content.get_num().get_mpz_t());
            mpz_lcm(ld.get_mpz_t(), content.get_den().get_mpz_t(), s.content.get_den().get_mpz_t());
            content = Rational(gn, ld);
            content.canonicalize();
        }
    }
    if (content != 0 && content != 1) {
        Rational inv = 1 / content;
        for (auto& p : ps) p *= inv;
    }
    return ps;
}

namespace {

// Binomial coefficient C(d, j) as a polynomial in d.
Polynomial binomial_poly(int j) {
    Polynomial r(Rational(1));
    Polynomial d = Polynomial::x();
    for (int i = 0; i < j; ++i) r = r * (d - Polynomial(Rational(i))) * Rational(1, i + 1);
    return r;
}

// Degree bound for polynomial solutions of sum p_i(x) u(x+i) = rhs,
// rhs_deg < 0 meaning homogeneous. Returns -1 when no degree is possible.
int poly_solution_degree_bound(const std::vector<Polynomial>& ps, int rhs_deg) {
    int n = static_cast<int>(ps.size()) - 1;
    int b = -1;
    for (const auto& p : ps) b = std::max(b, p.degree());
    if (b < 0) throw error("zero operator in degree bound");
    // P_j(x) = sum_i i^j p_i(x); alpha_k(d) = sum_j C(d,j) [x^(b-k+j)] P_j
    std::vector<Polynomial> pj;
    int kmax = b + n + 2;
    for (int j = 0; j <= kmax; ++j) {
        Polynomial s;
        for (int i = 0; i <= n; ++i) {
            if (ps[i].is_zero()) continue;
            Rational w = (j == 0) ? Rational(1) : rat_pow(Rational(i), j);
            s += ps[i] * w;
        }
        pj.push_back(s);
    }
    Polynomial alpha;
    int kstar = -1;
    for (int k = 0; k <= kmax; ++k) {
        Polynomial a;
        for (int j = 0; j <= k; ++j) {
            Rational c = pj[j].coeff(b - k + j);
            if (c != 0) a += binomial_poly(j) * c;
        }
        if (!a.is_zero()) {
            alpha = a;
            kstar = k;
            break;
        }
    }
    if (kstar < 0) throw error("internal: indicial polynomial vanished identically");
    int bound = -1;
    for (const Integer& root : int_roots(alpha))
        if (root >= 0) bound = std::max(bound, static_cast<int>(to_long(root)));
    if (rhs_deg >= 0) bound = std::max(bound, rhs_deg - b + kstar);
    return bound;
}

// u(x + i) for u = x^m as a polynomial table.
std::vector<std::vector<Polynomial>> shifted_monomials(int n, int maxdeg) {
    std::vector<std::vector<Polynomial>> t(n + 1);
    for (int i = 0; i <= n; ++i) {
        t[i].resize(maxdeg + 1);
        Polynomial base = Polynomial::x() + Polynomial(Rational(i));
        Polynomial cur(Rational(1));
        for (int m = 0; m <= maxdeg; ++m) {
            t[i][m] = cur;
            cur *= base;
        }
    }
    return t;
}

std::vector<Polynomial> poly_solutions_cleared(const std::vector<Polynomial>& ps) {
    int n = static_cast<int>(ps.size()) - 1;
    int bound = poly_solution_degree_bound(ps, -1);
    if (bound < 0) return {};
    auto mono = shifted_monomials(n, bound);
    int b = 0;
    for (const auto& p : ps) b = std::max(b, p.degree());
    int nrows = bound + b + 1;
    Mat<Rational> m(nrows, Vec<Rational>(bound + 1, Rational(0)));
    for (int col = 0; col <= bound; ++col) {
        Polynomial img;
        for (int i = 0; i <= n; ++i)
            if (!ps[i].is_zero()) img += ps[i] * mono[i][col];
        for (int row = 0; row < nrows; ++row) m[row][col] = img.coeff(row);
    }
    Mat<Rational> basis = nullspace(std::move(m), bound + 1);
    std::vector<Polynomial> out;
    for (auto& v : basis) {
        Polynomial p(std::move(v));
        IntegerSplit s = integer_split(p);
        out.push_back(from_integer_coeffs(s.primitive));
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.to_string() < b.to_string();
    });
    return out;
}

}  // namespace

std::vector<Polynomial> poly_solutions(const OreOperator& l) {
    if (!l.is_full()) throw error("poly_solutions requires a full operator (a_0, a_n != 0)");
    return poly_solutions_cleared(polynomial_coefficients(l));
}

namespace {

Integer cauchy_root_bound(const Polynomial& p) {
    IntegerSplit s = integer_split(p);
    Integer lead = abs(s.primitive.back());
    Integer best = 0;
    for (size_t i = 0; i + 1 < s.primitive.size(); ++i) {
        Integer q = abs(s.primitive[i]) / lead + 1;
        best = std::max(best, q);
    }
    return best + 1;
}

// Nonnegative integer gaps h with gcd(A(x), B(x-h)) != 1, found by matching
// irreducible factors of A and B modulo one large prime: a shared shifted
// factor over Q forces a mod-p factor pair g(x) = f(x+h), and h is read off
// the subleading coefficients. False positives die in the exact gcd below.
std::set<long> dispersion_gaps(const Polynomial& a, const Polynomial& b) {
    std::set<long> gaps;
    // Gaps at or beyond 2^59 would force universal denominators of the same
    // degree, far outside anything computable; the root bound caps the rest.
    Integer bound = cauchy_root_bound(a) + cauchy_root_bound(b);
    Integer pz;
    mpz_ui_pow_ui(pz.get_mpz_t(), 2, 60);
    modp::Fp f{};
    IntegerSplit sa = integer_split(a), sb = integer_split(b);
    while (true) {
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
        if (sa.primitive.back() % pz == 0 || sb.primitive.back() % pz == 0) continue;
        f.p = pz.get_ui();
        break;
    }
    auto prep = [&](const std::vector<Integer>& w) {
        modp::ModPoly m = modp::reduce_integer_poly(w, f);
        modp::ModPoly g = modp::gcd(f, m, modp::deriv(f, m));
        if (modp::deg(g) > 0) m = modp::divmod(f, m, g).first;
        return modp::factor_squarefree(f, modp::monic(f, m));
    };
    std::vector<modp::ModPoly> fa = prep(sa.primitive);
    std::vector<modp::ModPoly> fb = prep(sb.primitive);
    for (const auto& pf : fa) {
        int d = modp::deg(pf);
        for (const auto& pg : fb) {
            if (modp::deg(pg) != d) continue;
            // g(x) = f(x+h): compare x^(d-1) coefficients
            modp::u64 diff = f.sub(pg[d - 1], pf[d - 1]);
            modp::u64 h = f.mul(diff, f.inv(d % f.p));
            Integer hz(static_cast<unsigned long>(h));
            if (2 * hz > Integer(static_cast<unsigned long>(f.p))) continue;  // negative gap
            if (hz > bound) continue;
            gaps.insert(to_long(hz));
        }
    }
    return gaps;
}

}  // namespace

Polynomial universal_denominator(const OreOperator& l) {
    std::vector<Polynomial> ps = polynomial_coefficients(l);
    int n = static_cast<int>(ps.size()) - 1;
    Polynomial a = ps[0];                    // roots bound maximal poles
    Polynomial b = ps[n].shifted(Rational(-n));  // roots bound minimal poles
    if (a.degree() == 0 || b.degree() == 0) return Polynomial(Rational(1));

    std::set<long> gaps = dispersion_gaps(a, b);

    // Abramov's loop, largest gap first: d collects the top-of-chain poles,
    // the chain d(x), d(x+1), ..., d(x+h) enters the denominator.
    Polynomial u(Rational(1));
    for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) {
        long h = *it;
        Polynomial d = poly_gcd(a, b.shifted(Rational(-h)));
        if (d.degree() == 0) continue;
        a = poly_divexact(a, d);
        b = poly_divexact(b, d.shifted(Rational(h)));
        for (long j = 0; j <= h; ++j) u *= d.shifted(Rational(j));
    }
    return u;
}

namespace {

// tau^v factored out on the right: L = L' tau^v, so L(g) = L'(g(x+v)).
std::pair<OreOperator, int> strip_trailing_tau(const OreOperator& l) {
    int v = 0;
    while (v <= l.order() && l.coeff(v).is_zero()) ++v;
    if (v == 0) return {l, 0};
    std::vector<RationalFunction> c;
    for (int i = v; i <= l.order(); ++i) c.push_back(l.coeff(i));
    return {OreOperator(std::move(c)), v};
}

std::vector<RationalFunction> rational_solutions_impl(const OreOperator& l_in) {
    auto [l, v] = strip_trailing_tau(l_in);
    if (l.order() == 0) return {};
    if (getenv("ORE_DEBUG_HOM")) {
        long md = 0;
        for (const auto& c : l.coeffs()) md = std::max(md, (long)c.total_degree());
        fprintf(stderr, "ratsols: ord %d maxdeg %ld\n", l.order(), md);
    }
    Polynomial u = universal_denominator(l);
    if (getenv("ORE_DEBUG_HOM")) fprintf(stderr, "  univ den deg %d\n", u.degree());
    std::vector<Polynomial> ps = polynomial_coefficients(l);
    int n = static_cast<int>(ps.size()) - 1;
    std::vector<Polynomial> shifted_u(n + 1);
    Polynomial big(Rational(1));
    for (int i = 0; i <= n; ++i) {
        shifted_u[i] = u.shifted(Rational(i));
        big = poly_lcm(big, shifted_u[i]);
    }
    std::vector<Polynomial> qs(n + 1);
    for (int i = 0; i <= n; ++i) qs[i] = ps[i] * poly_divexact(big, shifted_u[i]);
    std::vector<RationalFunction> out;
    for (const Polynomial& z : poly_solutions_cleared(qs)) {
        RationalFunction y(z, u);
        out.push_back(v == 0 ? y : y.shifted(Rational(-v)));
    }
    return out;
}

}  // namespace

std::vector<RationalFunction> rational_solutions(const OreOperator& l) {
    if (l.is_zero()) throw error("rational solutions of the zero operator");
    return rational_solutions_impl(l);
}

std::vector<ParamSolution> rational_solutions_param(const OreOperator& l_in,
                                                    const std::vector<RationalFunction>& rhs) {
    if (l_in.is_zero()) throw error("parameterized solve with zero operator");
    size_t s = rhs.size();
    auto [l, v] = strip_trailing_tau(l_in);
    std::vector<RationalFunction> rr(rhs);
    // L(g) = rho with L = L' tau^v: substitute g~ = g(x+v), solve L'(g~) = rho.
    std::vector<ParamSolution> out;

    if (l.order() == 0) {
        const RationalFunction c = l.coeff(0);
        for (size_t i = 0; i < s; ++i) {
            ParamSolution p;
            p.g = (rr[i] / c).shifted(Rational(-v));
            p.lambda.assign(s, Rational(0));
            p.lambda[i] = 1;
            out.push_back(std::move(p));
        }
        return out;
    }

    // Annihilator of the right-hand sides: first order per basis element of
    // their Q-span; homogenize and solve, then match coefficients over Q.
    std::vector<RationalFunction> span;
    for (const auto& r : rr) {
        if (r.is_zero()) continue;
        bool dep = false;
        // cheap span filter: exact duplicates and scalar multiples
        for (const auto& b : span)
            if ((b * r.num().lc() - r * b.num().lc()).is_zero()) { dep = true; break; }
        if (!dep) span.push_back(r);
    }
    OreOperator ann = OreOperator::one();
    for (const auto& r : span) {
        OreOperator a(std::vector<RationalFunction>{-(r.shifted(Rational(1)) / r), RationalFunction(1)});
        ann = (ann == OreOperator::one()) ? a : lclm(ann, a);
    }
    OreOperator big = (ann == OreOperator::one()) ? l : ann * l;
    std::vector<RationalFunction> w = rational_solutions_impl(big);

    // Match: sum mu_k L(w_k) = sum lambda_i rho_i, a Q-linear system on the
    // polynomial coefficients after clearing a common denominator.
    std::vector<RationalFunction> lw(w.size());
    for (size_t k = 0; k < w.size(); ++k) lw[k] = l.apply(w[k]);
    Polynomial den(Rational(1));
    for (const auto& f : lw) den = poly_lcm(den, f.den());
    for (const auto& f : rr) den = poly_lcm(den, f.den());
    std::vector<Polynomial> cols;
    for (const auto& f : lw) cols.push_back(f.num() * poly_divexact(den, f.den()));
    for (const auto& f : rr) cols.push_back(-(f.num() * poly_divexact(den, f.den())));
    int maxdeg = -1;
    for (const auto& p : cols) maxdeg = std::max(maxdeg, p.degree());
    Mat<Rational> m(maxdeg + 1, Vec<Rational>(cols.size(), Rational(0)));
    for (size_t c = 0; c < cols.size(); ++c)
        for (int rix = 0; rix <= maxdeg; ++rix) m[rix][c] = cols[c].coeff(rix);
    Mat<Rational> null = nullspace(std::move(m), cols.size());

    for (const auto& vsol : null) {
        ParamSolution p;
        RationalFunction g;
        for (size_t k = 0; k < w.size(); ++k)
            if (vsol[k] != 0) g += RationalFunction(vsol[k]) * w[k];
        p.g = g.shifted(Rational(-v));
        p.lambda.assign(s, Rational(0));
        for (size_t i = 0; i < s; ++i) p.lambda[i] = vsol[w.size() + i];
        out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hypergeometric right factors (Petkovsek candidate enumeration).
// ---------------------------------------------------------------------------

std::vector<HypergeometricFactor> hypergeometric_right_factors(const OreOperator& l) {
    if (!l.is_full()) throw error("hypergeometric factor search requires a full operator");
    int n = l.order();
    std::vector<HypergeometricFactor> found;
    if (n < 1) return found;
    std::vector<Polynomial> ps = polynomial_coefficients(l);

    std::vector<Polynomial> adivs = monic_divisors(ps[0]);
    std::vector<Polynomial> bdivs = monic_divisors(ps[n].shifted(Rational(n - 1)));
    std::set<std::string> seen;

    for (const Polynomial& a : adivs) {
        for (const Polynomial& b : bdivs) {
            // Degree/leading-coefficient screen for the constant z: candidates
            // are the nonzero rational roots of the top-degree compatibility
            // polynomial, computable without expanding the products.
            int da = a.degree(), db = b.degree();
            int m = -1;
            for (int i = 0; i <= n; ++i) {
                if (ps[i].is_zero()) continue;
                m = std::max(m, ps[i].degree() + i * da + (n - i) * db);
            }
            Polynomial zpoly;
            for (int i = 0; i <= n; ++i) {
                if (ps[i].is_zero()) continue;
                if (ps[i].degree() + i * da + (n - i) * db == m)
                    zpoly += Polynomial::monomial(ps[i].lc(), i);
            }
            if (zpoly.degree() < 1) continue;
            std::vector<Rational> zs;
            for (const Rational& z : rational_roots(zpoly))
                if (z != 0) zs.push_back(z);
            if (zs.empty()) continue;

            std::vector<Polynomial> pfull(n + 1);
            for (int i = 0; i <= n; ++i) {
                Polynomial t = ps[i];
                for (int j = 0; j < i; ++j) t *= a.shifted(Rational(j));
                for (int j = i; j < n; ++j) t *= b.shifted(Rational(j));
                pfull[i] = t;
            }
            for (const Rational& z : zs) {
                std::vector<Polynomial> pi(n + 1);
                Rational zp = 1;
                for (int i = 0; i <= n; ++i) {
                    pi[i] = pfull[i] * zp;
                    zp *= z;
                }
                for (const Polynomial& c : poly_solutions_cleared(pi)) {
                    if (c.is_zero()) continue;
                    RationalFunction r = RationalFunction(z) * RationalFunction(a, b) *
                                         RationalFunction(c.shifted(Rational(1)), c);
                    if (r.is_zero()) continue;
                    OreOperator fac(std::vector<RationalFunction>{-r, RationalFunction(1)});
                    if (!rem(l, fac).is_zero()) continue;
                    std::string key = r.to_string();
                    if (seen.insert(key).second) found.push_back(HypergeometricFactor{r});
                }
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        return x.r.to_string() < y.r.to_string();
    });
    return found;
}

// ---------------------------------------------------------------------------
// Hom spaces by uncoupling the linear functional system over D.
// ---------------------------------------------------------------------------

namespace {

struct HomRow {
    std::vector<OreOperator> entry;  // one operator per unknown g_j
};

// Left-scale a row to polynomial coefficients with the common content
// stripped; row operations are only needed up to left unit scaling.
void normalize_row(HomRow& row) {
    Polynomial den(Rational(1));
    for (const auto& e : row.entry)
        for (const auto& c : e.coeffs()) den = poly_lcm(den, c.den());
    Polynomial content;
    std::vector<std::vector<Polynomial>> nums(row.entry.size());
    for (size_t j = 0; j < row.entry.size(); ++j) {
        for (int i = 0; i <= row.entry[j].order(); ++i) {
            Polynomial n = row.entry[j].coeff(i).num() * poly_divexact(den, row.entry[j].coeff(i).den());
            if (!n.is_zero()) content = content.is_zero() ? n : poly_gcd(content, n);
            nums[j].push_back(n);
        }
    }
    if (content.is_zero()) return;
    for (size_t j = 0; j < row.entry.size(); ++j) {
        std::vector<RationalFunction> c(nums[j].size());
        for (size_t i = 0; i < nums[j].size(); ++i)
            c[i] = RationalFunction(content.degree() > 0 ? poly_divexact(nums[j][i], content)
                                                         : nums[j][i]);
        row.entry[j] = OreOperator(std::move(c));
    }
}

long row_weight(const HomRow& row, int col) {
    long w = 0;
    for (const auto& e : row.entry)
        for (const auto& c : e.coeffs()) w += pivot_complexity(c);
    return w + 64L * row.entry[col].order();
}

// Echelonize rows over D by repeated right division in the pivot column.
// Returns pivot_rows[j] = row index owning column j, or -1.
std::vector<int> d_echelon(std::vector<HomRow>& rows, int ncols) {
    std::vector<int> owner(ncols, -1);
    std::vector<bool> used(rows.size(), false);
    for (auto& r : rows) normalize_row(r);
    for (int col = 0; col < ncols; ++col) {
        while (true) {
            int best = -1;
            long best_w = 0;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (used[i] || rows[i].entry[col].is_zero()) continue;
                long w = row_weight(rows[i], col);
                if (best < 0 || rows[i].entry[col].order() < rows[best].entry[col].order() ||
                    (rows[i].entry[col].order() == rows[best].entry[col].order() && w < best_w)) {
                    best = static_cast<int>(i);
                    best_w = w;
                }
            }
            if (best < 0) break;
            bool reduced_any = false;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (used[i] || static_cast<int>(i) == best || rows[i].entry[col].is_zero()) continue;
                auto [q, r] = rdivide(rows[i].entry[col], rows[best].entry[col]);
                for (int j = 0; j < ncols; ++j)
                    rows[i].entry[j] -= q * rows[best].entry[j];
                rows[i].entry[col] = r;  // identical, but avoids re-deriving
                normalize_row(rows[i]);
                reduced_any = true;
            }
            if (!reduced_any) {
                owner[col] = best;
                used[best] = true;
                break;
            }
        }
    }
    return owner;
}

}  // namespace

HomBasis hom_space(const OreOperator& l1, const OreOperator& l2) {
    if (l1.is_zero() || l2.is_zero()) throw error("hom space of zero operator");
    HomBasis result;
    result.source = l1;
    result.target = l2;
    int n2 = l2.order();
    if (n2 == 0) return result;
    int n1 = l1.order();

    Mat<RationalFunction> red = tau_powers_mod(l2, n1 + n2);
    // Equation k (coefficient of tau^k in L1*G mod L2):
    //   sum_j sum_a (alpha_a * red[a+j][k]) sigma^a(g_j) = 0
    std::vector<HomRow> rows(n2);
    for (int k = 0; k < n2; ++k) {
        rows[k].entry.resize(n2);
        for (int j = 0; j < n2; ++j) {
            std::vector<RationalFunction> c(n1 + 1, RationalFunction(0));
            for (int aix = 0; aix <= n1; ++aix) {
                RationalFunction alpha = l1.coeff(aix);
                if (alpha.is_zero()) continue;
                const RationalFunction& rk = red[aix + j][k];
                if (rk.is_zero()) continue;
                c[aix] = alpha * rk;
            }
            rows[k].entry[j] = OreOperator(std::move(c));
        }
    }

    std::vector<int> owner = d_echelon(rows, n2);
    for (int j = 0; j < n2; ++j)
        if (owner[j] < 0) throw error("internal: hom system is rank deficient");
    if (getenv("ORE_DEBUG_HOM")) {
        for (int j = 0; j < n2; ++j) {
            const auto& e = rows[owner[j]].entry;
            fprintf(stderr, "pivot col %d: ", j);
            for (int jp = 0; jp < n2; ++jp) {
                long md = 0;
                for (const auto& c : e[jp].coeffs()) md = std::max(md, (long)c.total_degree());
                fprintf(stderr, "[ord %d deg %ld] ", e[jp].order(), md);
            }
            fprintf(stderr, "\n");
        }
    }

    // Back-substitution, bottom column first. Solutions of already-processed
    // unknowns are linear in the current parameter vector.
    std::map<int, std::vector<RationalFunction>> sol;  // unknown -> per-parameter value
    size_t nparams = 0;
    bool started = false;
    for (int j = n2 - 1; j >= 0; --j) {
        const HomRow& row = rows[owner[j]];
        std::vector<RationalFunction> rhs(started ? nparams : 0, RationalFunction(0));
        for (int jp = j + 1; jp < n2; ++jp) {
            if (row.entry[jp].is_zero()) continue;
            const auto& sp = sol[jp];
            for (size_t p = 0; p < rhs.size(); ++p)
                if (!sp[p].is_zero()) rhs[p] -= row.entry[jp].apply(sp[p]);
        }
        std::vector<ParamSolution> step = rational_solutions_param(row.entry[j], rhs);
        if (!started) {
            // seed parameters with the homogeneous basis of the last pivot
            started = true;
            nparams = step.size();
            std::vector<RationalFunction> v(nparams);
            for (size_t q = 0; q < nparams; ++q) v[q] = step[q].g;
            sol[j] = std::move(v);
            continue;
        }
        size_t nq = step.size();
        std::map<int, std::vector<RationalFunction>> next;
        for (auto& [jp, sp] : sol) {
            std::vector<RationalFunction> v(nq, RationalFunction(0));
            for (size_t q = 0; q < nq; ++q)
                for (size_t p = 0; p < nparams; ++p)
                    if (step[q].lambda[p] != 0 && !sp[p].is_zero())
                        v[q] += RationalFunction(step[q].lambda[p]) * sp[p];
            next[jp] = std::move(v);
        }
        std::vector<RationalFunction> v(nq);
        for (size_t q = 0; q < nq; ++q) v[q] = step[q].g;
        next[j] = std::move(v);
        sol = std::move(next);
        nparams = nq;
    }

    // Assemble operators and reduce to a Q-linearly independent set.
    std::vector<OreOperator> cand;
    for (size_t p = 0; p < nparams; ++p) {
        std::vector<RationalFunction> c(n2, RationalFunction(0));
        for (auto& [j, sp] : sol) c[j] = sp[p];
        OreOperator g(std::move(c));
        if (!g.is_zero()) cand.push_back(std::move(g));
    }
    if (!cand.empty()) {
        // flatten over common denominator for exact Q-independence filtering
        Polynomial den(Rational(1));
        for (const auto& g : cand)
            for (const auto& c : g.coeffs()) den = poly_lcm(den, c.den());
        int maxdeg = 0;
        std::vector<std::vector<Polynomial>> nums(cand.size());
        for (size_t i = 0; i < cand.size(); ++i) {
            for (int j = 0; j < n2; ++j) {
                Polynomial nj = cand[i].coeff(j).num() * poly_divexact(den, cand[i].coeff(j).den());
                maxdeg = std::max(maxdeg, nj.degree());
                nums[i].push_back(nj);
            }
        }
        DependenceFinder<Rational> finder(static_cast<size_t>(n2) * (maxdeg + 1));
        size_t idx = 0;
        for (size_t i = 0; i < cand.size(); ++i) {
            Vec<Rational> flat(static_cast<size_t>(n2) * (maxdeg + 1), Rational(0));
            for (int j = 0; j < n2; ++j)
                for (int dgr = 0; dgr <= maxdeg; ++dgr)
                    flat[static_cast<size_t>(j) * (maxdeg + 1) + dgr] = nums[i][j].coeff(dgr);
            if (!finder.insert(std::move(flat), idx++)) result.elements.push_back(cand[i]);
        }
    }
    for (const auto& g : result.elements)
        if (!rem(l1 * g, l2).is_zero()) throw error("internal: hom certificate failed");
    std::sort(result.elements.begin(), result.elements.end(),
              [](const OreOperator& x, const OreOperator& y) {
                  if (x.order() != y.order()) return x.order() < y.order();
                  return x.to_string() < y.to_string();
              });
    return result;
}

// ---------------------------------------------------------------------------
// Eigenring splitting.
// ---------------------------------------------------------------------------

EigenringSplit eigenring_split(const OreOperator& l) {
    if (!l.is_full()) throw error("eigenring split requires a full operator");
    EigenringSplit result;
    int n = l.order();
    if (n == 0) return result;
    HomBasis endo = hom_space(l, l);
    std::set<std::string> seen;
    for (const OreOperator& e : endo.elements) {
        if (e.order() == 0 && e.coeff(0).is_constant()) continue;  // scalar
        // minimal polynomial of E over Q via powers reduced mod L
        int bound = n * n + 1;
        std::vector<OreOperator> powers = {OreOperator::one()};
        for (int k = 1; k <= bound; ++k) powers.push_back(rem(powers.back() * e, l));
        Polynomial den(Rational(1));
        for (const auto& pw : powers)
            for (const auto& c : pw.coeffs()) den = poly_lcm(den, c.den());
        int maxdeg = 0;
        std::vector<std::vector<Polynomial>> nums(powers.size());
        for (size_t i = 0; i < powers.size(); ++i) {
            for (int j = 0; j < n; ++j) {
                Polynomial nj = powers[i].coeff(j).num() * poly_divexact(den, powers[i].coeff(j).den());
                maxdeg = std::max(maxdeg, nj.degree());
                nums[i].push_back(nj);
            }
        }
        DependenceFinder<Rational> finder(static_cast<size_t>(n) * (maxdeg + 1));
        Polynomial minpoly;
        for (size_t k = 0; k < powers.size(); ++k) {
            Vec<Rational> flat(static_cast<size_t>(n) * (maxdeg + 1), Rational(0));
            for (int j = 0; j < n; ++j)
                for (int dgr = 0; dgr <= maxdeg; ++dgr)
                    flat[static_cast<size_t>(j) * (maxdeg + 1) + dgr] = nums[k][j].coeff(dgr);
            if (auto dep = finder.insert(std::move(flat), k)) {
                minpoly = Polynomial(std::move(*dep));
                break;
            }
        }
        if (minpoly.is_zero()) throw error("internal: endomorphism has no minimal polynomial");
        auto fac = poly_factor(minpoly);
        int linear = 0;
        for (const auto& [f, mult] : fac.factors) {
            if (f.degree() == 1) {
                ++linear;
                Rational lambda = -f.coeff(0);
                OreOperator shifted = e - OreOperator(RationalFunction(lambda));
                if (shifted.is_zero()) continue;
                OreOperator g = gcrd(l, shifted);
                if (g.order() > 0 && g.order() < n) {
                    if (seen.insert(g.to_string()).second) result.factors.push_back(g);
                }
            }
        }
        if (linear < static_cast<int>(fac.factors.size())) result.extension_needed = true;
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const OreOperator& x, const OreOperator& y) {
                  if (x.order() != y.order()) return x.order() < y.order();
                  return x.to_string() < y.to_string();
              });
    return result;
}

}  // namespace ore
