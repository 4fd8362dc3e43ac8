#include "ore/conic.hpp"

#include <algorithm>
#include <functional>

#include "ore/numberfield.hpp"
#include "ore/numtheory.hpp"
#include "ore/poly_factor.hpp"

namespace ore {

ConicForm ConicForm::zero() {
    ConicForm c;
    for (auto& row : c.m)
        for (auto& e : row) e = RationalFunction(0);
    return c;
}

bool ConicForm::is_zero() const {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

RationalFunction ConicForm::eval(const Point3& b) const {
    RationalFunction r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!m[i][j].is_zero()) r += m[i][j] * b[i] * b[j];
    return r;
}

namespace {

Mat3 mat3_identity() {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = RationalFunction(i == j ? 1 : 0);
    return t;
}

Point3 mat3_apply(const Mat3& t, const Point3& v) {
    Point3 r{RationalFunction(0), RationalFunction(0), RationalFunction(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!t[i][j].is_zero() && !v[j].is_zero()) r[i] += t[i][j] * v[j];
    return r;
}

// Square root of a rational function that is an exact square.
std::optional<RationalFunction> rf_sqrt(const RationalFunction& f) {
    if (f.is_zero()) return RationalFunction(0);
    auto nsplit = squarefree_split(f.num());
    auto dsplit = squarefree_split(f.den());
    if (nsplit.first.degree() != 0 || dsplit.first.degree() != 0) return std::nullopt;
    Rational c = nsplit.first.coeff(0) / dsplit.first.coeff(0);
    auto cs = rat_sqrt_exact(c);
    if (!cs) return std::nullopt;
    return RationalFunction(nsplit.second * *cs, dsplit.second);
}

}  // namespace

DiagonalConic diagonalize_conic(const ConicForm& conic) {
    if (conic.is_zero()) throw error("diagonalization of the zero conic");
    Mat3 m = conic.m;
    Mat3 t = mat3_identity();

    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < 3; ++r) std::swap(m[r][i], m[r][j]);
        for (int r = 0; r < 3; ++r) std::swap(m[i][r], m[j][r]);
        for (int r = 0; r < 3; ++r) std::swap(t[r][i], t[r][j]);
    };
    // congruence op: col_j += f * col_i (and the symmetric row op)
    auto add_col = [&](int j, int i, const RationalFunction& f) {
        for (int r = 0; r < 3; ++r) m[r][j] += f * m[r][i];
        for (int r = 0; r < 3; ++r) m[j][r] += f * m[i][r];
        for (int r = 0; r < 3; ++r) t[r][j] += f * t[r][i];
    };

    for (int i = 0; i < 3; ++i) {
        if (m[i][i].is_zero()) {
            int sel = -1;
            for (int j = i + 1; j < 3; ++j)
                if (!m[j][j].is_zero()) {
                    sel = j;
                    break;
                }
            if (sel >= 0) {
                swap_cols(i, sel);
            } else {
                // all remaining diagonal entries vanish; use an off-diagonal
                int pj = -1, pk = -1;
                for (int j = i; j < 3 && pj < 0; ++j)
                    for (int k = j + 1; k < 3; ++k)
                        if (!m[j][k].is_zero()) {
                            pj = j;
                            pk = k;
                            break;
                        }
                if (pj < 0) break;  // zero block
                add_col(pj, pk, RationalFunction(1));  // makes m[pj][pj] = 2 m[pj][pk]
                if (pj != i) swap_cols(i, pj);
            }
        }
        if (m[i][i].is_zero()) continue;
        for (int j = i + 1; j < 3; ++j) {
            if (m[i][j].is_zero()) continue;
            add_col(j, i, -(m[i][j] / m[i][i]));
        }
    }

    DiagonalConic out;
    out.t = t;
    for (int i = 0; i < 3; ++i) {
        RationalFunction d = m[i][i];
        if (d.is_zero()) {
            out.c[i] = Polynomial();
            continue;
        }
        ++out.rank;
        // d * s^2 = c with c a squarefree-content squarefree polynomial
        Polynomial w = d.num() * d.den();
        IntegerSplit ws = integer_split(w);
        auto [sfp, sqp] = squarefree_split(from_integer_coeffs(ws.primitive));
        Polynomial raw = sfp * ws.content;
        IntegerSplit rs = integer_split(raw);
        auto [sfi, sqi] = squarefree_part(rs.content.get_num() * rs.content.get_den());
        Polynomial c = from_integer_coeffs(rs.primitive) * Rational(sfi);
        auto s = rf_sqrt(RationalFunction(c) / d);
        if (!s) throw error("internal: conic scale is not a perfect square");
        for (int r = 0; r < 3; ++r) out.t[r][i] = out.t[r][i] * *s;
        out.c[i] = c;
        (void)sqp;
        (void)sqi;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer Legendre descent.
// ---------------------------------------------------------------------------

namespace {

using IPoint = std::array<Integer, 3>;
using IUntransform = std::function<IPoint(const IPoint&)>;

IntConicSolution int_no_point(const std::string& cert) {
    IntConicSolution s;
    s.certificate = cert;
    return s;
}

IntConicSolution int_with_point(IPoint p) {
    Integer g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : p) c /= g;
    IntConicSolution s;
    s.has_point = true;
    s.point = p;
    return s;
}

// Exhaustive search within the Holzer bounds |x| <= sqrt|bc|, |y| <= sqrt|ac|.
// By Holzer's theorem a solvable form has a solution in this box, so an empty
// search certifies NoPoint.
IntConicSolution holzer_search(const Integer& a, const Integer& b, const Integer& c) {
    Integer xb, yb;
    Integer bc = abs(b * c), ac = abs(a * c);
    mpz_sqrt(xb.get_mpz_t(), bc.get_mpz_t());
    mpz_sqrt(yb.get_mpz_t(), ac.get_mpz_t());
    if (xb * yb > 4000000) throw error("conic descent stalled on large coefficients");
    for (Integer x = 0; x <= xb; x += 1) {
        for (Integer y = (x == 0 ? 1 : 0); y <= yb; y += 1) {
            Integer rhs = -(a * x * x + b * y * y);
            if (rhs % c != 0) continue;
            Integer zz = rhs / c;
            if (zz < 0) continue;
            if (auto z = int_sqrt_exact(zz)) return int_with_point({x, y, *z});
        }
    }
    return int_no_point("no solution within the Holzer bound");
}

}  // namespace

IntConicSolution solve_conic_integers(const Integer& a0, const Integer& b0, const Integer& c0) {
    std::array<Integer, 3> co{a0, b0, c0};
    std::vector<IUntransform> undo;

    for (int i = 0; i < 3; ++i)
        if (co[i] == 0) {
            IPoint p{0, 0, 0};
            p[i] = 1;
            return int_with_point(p);
        }

    // normalize: squarefree coefficients, pairwise coprime
    bool changed = true;
    int guard = 0;
    while (changed) {
        if (++guard > 64) throw error("conic normalization did not settle");
        changed = false;
        for (int i = 0; i < 3; ++i) {
            auto [sf, sq] = squarefree_part(co[i]);
            if (sq != 1) {
                co[i] = sf;
                int j = (i + 1) % 3, k = (i + 2) % 3;
                undo.push_back([i, j, k, sq = sq](const IPoint& p) {
                    IPoint q;
                    q[i] = p[i];
                    q[j] = p[j] * sq;
                    q[k] = p[k] * sq;
                    return q;
                });
                changed = true;
            }
        }
        for (int i = 0; i < 3 && !changed; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            Integer g;
            mpz_gcd(g.get_mpz_t(), co[i].get_mpz_t(), co[j].get_mpz_t());
            if (g > 1) {
                co[i] /= g;
                co[j] /= g;
                co[k] *= g;
                undo.push_back([k, g](const IPoint& p) {
                    IPoint q = p;
                    q[k] = p[k] * g;
                    return q;
                });
                changed = true;
            }
        }
    }

    auto unwind = [&](IntConicSolution s) {
        if (!s.has_point) return s;
        IPoint p = s.point;
        for (auto it = undo.rbegin(); it != undo.rend(); ++it) p = (*it)(p);
        return int_with_point(p);
    };

    std::function<IntConicSolution(Integer, Integer, Integer, int)> descend =
        [&](Integer a, Integer b, Integer c, int depth) -> IntConicSolution {
        // order |a| <= |b| <= |c|, remembering the permutation
        std::array<int, 3> perm{0, 1, 2};
        std::array<Integer, 3> v{a, b, c};
        std::sort(perm.begin(), perm.end(),
                  [&](int i, int j) { return abs(v[i]) < abs(v[j]); });
        Integer A = v[perm[0]], B = v[perm[1]], C = v[perm[2]];
        auto unperm = [perm](IPoint p) {
            IPoint q;
            for (int i = 0; i < 3; ++i) q[perm[i]] = p[i];
            return q;
        };
        if ((A > 0 && B > 0 && C > 0) || (A < 0 && B < 0 && C < 0))
            return int_no_point("definite form: no real point");
        if (abs(C) == 1) {
            for (long x = 0; x <= 1; ++x)
                for (long y = 0; y <= 1; ++y)
                    for (long z = 0; z <= 1; ++z) {
                        if (x + y + z == 0) continue;
                        if (A * x * x + B * y * y + C * z * z == 0)
                            return int_with_point(unperm({Integer(x), Integer(y), Integer(z)}));
                    }
            return int_no_point("unit coefficients admit no point");
        }
        if (depth > 300) {
            IntConicSolution s = holzer_search(A, B, C);
            if (!s.has_point) return s;
            return int_with_point(unperm(s.point));
        }
        Integer cm = abs(C);
        auto fac = factor_integer(cm);
        auto s = sqrt_mod_squarefree(((-A * B) % cm + cm) % cm, fac, cm);
        if (!s) {
            // name one obstructing prime for the certificate
            for (const auto& [p, e] : fac)
                if (!sqrt_mod_prime(-A * B, p))
                    return int_no_point("-ab is not a square modulo " + p.get_str());
            return int_no_point("-ab is not a square modulo |c|");
        }
        Integer sv = *s;
        if (2 * sv > cm) sv = sv - cm;
        Integer e = (sv * sv + A * B) / C;
        if (e == 0) return int_with_point(unperm({sv, A, 0}));
        // strip square part of e before recursing
        auto [esf, esq] = squarefree_part(e);
        IntConicSolution sub = descend(A, B, esf, depth + 1);
        if (!sub.has_point) return sub;
        // lift a point of (A,B,esf) to (A,B,e) with e = esf*esq^2
        Integer X = sub.point[0] * esq, Y = sub.point[1] * esq, Z = sub.point[2];
        // transport (A,B,e) -> (A,B,C): (sX - BY, sY + AX, eZ)
        IPoint q{sv * X - B * Y, sv * Y + A * X, e * Z};
        if (q[0] == 0 && q[1] == 0 && q[2] == 0) throw error("internal: trivial transport");
        return int_with_point(unperm(q));
    };

    return unwind(descend(co[0], co[1], co[2], 0));
}

// ---------------------------------------------------------------------------
// Conics over Q(x): degree descent to an integer conic.
// ---------------------------------------------------------------------------

namespace {

using Untransform = std::function<Point3(const Point3&)>;

ConicSolution no_point(const std::string& cert) {
    ConicSolution s;
    s.certificate = cert;
    return s;
}

// Bezout over Q[x]: u f + v g = 1 for coprime f, g.
std::pair<Polynomial, Polynomial> poly_bezout(const Polynomial& f, const Polynomial& g) {
    Polynomial r0 = f, r1 = g;
    Polynomial u0(Rational(1)), u1, v0, v1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        Polynomial u2 = u0 - q * u1;
        Polynomial v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.degree() != 0) throw error("bezout of non-coprime polynomials");
    Rational inv = 1 / r0.coeff(0);
    return {u0 * inv, v0 * inv};
}

// s with s = s_i mod m_i (pairwise coprime moduli).
Polynomial poly_crt(const std::vector<std::pair<Polynomial, Polynomial>>& parts) {
    Polynomial x, m(Rational(1));
    for (const auto& [r, mi] : parts) {
        if (mi.degree() == 0) continue;
        if (m.degree() == 0) {
            x = poly_rem(r, mi);
            m = mi;
            continue;
        }
        auto [u, v] = poly_bezout(m, mi);
        // x' = x + m*u*(r - x) mod m*mi
        Polynomial nm = m * mi;
        x = poly_rem(x + m * u * (r - x), nm);
        m = nm;
    }
    return x;
}

// Square root of -c1 c2 modulo the squarefree polynomial c3.
std::optional<Polynomial> sqrt_mod_poly(const Polynomial& c1, const Polynomial& c2,
                                        const Polynomial& c3, std::string* obstruction) {
    Polynomial target = poly_rem(-(c1 * c2), c3);
    auto fac = poly_factor(c3);
    std::vector<std::pair<Polynomial, Polynomial>> parts;
    for (const auto& [f, mult] : fac.factors) {
        if (mult != 1) throw error("internal: c3 not squarefree in conic descent");
        if (f.degree() == 1) {
            Rational theta = -f.coeff(0);
            Rational val = RationalFunction(target)(theta);
            auto r = rat_sqrt_exact(val);
            if (!r) {
                if (obstruction) *obstruction = "local obstruction at " + f.to_string();
                return std::nullopt;
            }
            parts.push_back({Polynomial(*r), f});
        } else {
            NumberField k(f);
            auto r = k.sqrt(poly_rem(target, f));
            if (!r) {
                if (obstruction) *obstruction = "local obstruction at " + f.to_string();
                return std::nullopt;
            }
            parts.push_back({*r, f});
        }
    }
    return poly_crt(parts);
}

}  // namespace

ConicSolution solve_conic(const Polynomial& c1_in, const Polynomial& c2_in,
                          const Polynomial& c3_in) {
    std::array<Polynomial, 3> co{c1_in, c2_in, c3_in};
    std::vector<Untransform> undo;

    for (int i = 0; i < 3; ++i)
        if (co[i].is_zero()) {
            ConicSolution s;
            s.has_point = true;
            s.point = {RationalFunction(0), RationalFunction(0), RationalFunction(0)};
            s.point[i] = RationalFunction(1);
            return s;
        }

    auto normalize = [&]() {
        bool changed = true;
        int guard = 0;
        while (changed) {
            if (++guard > 200) throw error("conic normalization did not settle");
            changed = false;
            for (int i = 0; i < 3; ++i) {
                // polynomial square part
                auto [sf, sq] = squarefree_split(co[i]);
                if (sq.degree() > 0) {
                    co[i] = sf;
                    int j = (i + 1) % 3, k = (i + 2) % 3;
                    undo.push_back([i, j, k, sq](const Point3& p) {
                        Point3 q;
                        RationalFunction s(sq);
                        q[i] = p[i];
                        q[j] = p[j] * s;
                        q[k] = p[k] * s;
                        return q;
                    });
                    changed = true;
                }
                // rational content modulo squares
                IntegerSplit is = integer_split(co[i]);
                auto [sfi, sqi] = squarefree_part(is.content.get_num() * is.content.get_den());
                Polynomial want = from_integer_coeffs(is.primitive) * Rational(sfi);
                if (want != co[i]) {
                    RationalFunction scale = *rf_sqrt(RationalFunction(want) / RationalFunction(co[i]));
                    co[i] = want;
                    int j = (i + 1) % 3, k = (i + 2) % 3;
                    undo.push_back([i, j, k, scale](const Point3& p) {
                        Point3 q;
                        q[i] = p[i];
                        q[j] = p[j] * scale;
                        q[k] = p[k] * scale;
                        return q;
                    });
                    changed = true;
                }
            }
            for (int i = 0; i < 3 && !changed; ++i) {
                int j = (i + 1) % 3, k = (i + 2) % 3;
                Polynomial g = poly_gcd(co[i], co[j]);
                if (g.degree() > 0) {
                    co[i] = poly_divexact(co[i], g);
                    co[j] = poly_divexact(co[j], g);
                    co[k] = co[k] * g;
                    undo.push_back([k, g](const Point3& p) {
                        Point3 q = p;
                        q[k] = p[k] * RationalFunction(g);
                        return q;
                    });
                    changed = true;
                }
            }
        }
    };

    int guard = 0;
    while (true) {
        if (++guard > 200) throw error("conic descent did not terminate");
        normalize();
        int d0 = co[0].degree(), d1 = co[1].degree(), d2 = co[2].degree();
        if (d0 == 0 && d1 == 0 && d2 == 0) break;
        // bring the largest degree to slot 3 (ties keep slot 3 in place)
        int big = 2;
        for (int i = 0; i < 2; ++i)
            if (co[i].degree() > co[big].degree()) big = i;
        if (big != 2) {
            std::swap(co[big], co[2]);
            undo.push_back([big](const Point3& p) {
                Point3 q = p;
                std::swap(q[big], q[2]);
            return q;
            });
            continue;
        }
        if (d0 == d1 && d1 == d2) {
            // three-way degree tie: multiply through by c3 and absorb squares
            Polynomial c3 = co[2];
            co[0] = co[0] * c3;
            co[1] = co[1] * c3;
            co[2] = Polynomial(Rational(1));
            undo.push_back([c3](const Point3& p) {
                Point3 q;
                RationalFunction s(c3);
                q[0] = p[0] * s;
                q[1] = p[1] * s;
                q[2] = p[2];
                return q;
            });
            continue;
        }
        std::string obstruction;
        auto s = sqrt_mod_poly(co[0], co[1], co[2], &obstruction);
        if (!s) return no_point(obstruction);
        Polynomial e = poly_divexact(*s * *s + co[0] * co[1], co[2]);
        if (e.is_zero()) {
            // a s^2 + b a^2 = a (s^2 + ab) = 0 directly
            Point3 p{RationalFunction(*s), RationalFunction(co[0]), RationalFunction(0)};
            for (auto it = undo.rbegin(); it != undo.rend(); ++it) p = (*it)(p);
            ConicSolution sol;
            sol.has_point = true;
            sol.point = p;
            return sol;
        }
        Polynomial a = co[0], b = co[1], c3 = co[2], sv = *s;
        co[2] = e;
        undo.push_back([a, b, sv, e](const Point3& p) {
            Point3 q;
            RationalFunction S(sv), A(a), B(b), E(e);
            q[0] = S * p[0] - B * p[1];
            q[1] = S * p[1] + A * p[0];
            q[2] = E * p[2];
            return q;
        });
        (void)c3;
    }

    // base: integer conic from the remaining constants
    Integer ia = co[0].coeff(0).get_num() * co[0].coeff(0).get_den();
    Integer ib = co[1].coeff(0).get_num() * co[1].coeff(0).get_den();
    Integer ic = co[2].coeff(0).get_num() * co[2].coeff(0).get_den();
    // rational constant = (num*den)/den^2: square factors are harmless
    IntConicSolution base = solve_conic_integers(ia, ib, ic);
    if (!base.has_point) return no_point(base.certificate);
    Point3 p{RationalFunction(Rational(base.point[0]) / co[0].coeff(0).get_den()),
             RationalFunction(Rational(base.point[1]) / co[1].coeff(0).get_den()),
             RationalFunction(Rational(base.point[2]) / co[2].coeff(0).get_den())};
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) p = (*it)(p);
    ConicSolution sol;
    sol.has_point = true;
    sol.point = p;
    return sol;
}

ConicSolution solve_conic_form(const ConicForm& conic) {
    DiagonalConic d = diagonalize_conic(conic);
    ConicSolution inner;
    if (d.rank < 3) {
        inner.has_point = true;
        inner.point = {RationalFunction(0), RationalFunction(0), RationalFunction(0)};
        for (int i = 0; i < 3; ++i)
            if (d.c[i].is_zero()) {
                inner.point[i] = RationalFunction(1);
                break;
            }
    } else {
        inner = solve_conic(d.c[0], d.c[1], d.c[2]);
        if (!inner.has_point) return inner;
    }
    ConicSolution out;
    out.has_point = true;
    out.point = mat3_apply(d.t, inner.point);
    if (conic.eval(out.point) != RationalFunction(0) ||
        (out.point[0].is_zero() && out.point[1].is_zero() && out.point[2].is_zero()))
        throw error("internal: conic point verification failed");
    return out;
}

}  // namespace ore
