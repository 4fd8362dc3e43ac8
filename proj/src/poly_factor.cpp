#include "ore/poly_factor.hpp"

#include <algorithm>
#include <cstdint>

#include "modp_poly.hpp"
#include <map>
#include <random>

namespace ore {

namespace {

// Mod-p arithmetic lives in modp_poly.hpp; below: Cantor-Zassenhaus splitting.

using modp::Fp;
using modp::ModPoly;
using u64 = modp::u64;

// ---------------------------------------------------------------------------
// Z/p^k arithmetic for Hensel lifting (coefficients as Integers in [0, m)).
// ---------------------------------------------------------------------------

using ZkPoly = std::vector<Integer>;

Integer zmod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void zk_trim(ZkPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZkPoly zk_reduce(ZkPoly a, const Integer& m) {
    for (auto& c : a) c = zmod(c, m);
    zk_trim(a);
    return a;
}

ZkPoly zk_mul(const ZkPoly& a, const ZkPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZkPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return zk_reduce(std::move(r), m);
}

ZkPoly zk_add(ZkPoly a, const ZkPoly& b, const Integer& m) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return zk_reduce(std::move(a), m);
}

ZkPoly zk_sub(ZkPoly a, const ZkPoly& b, const Integer& m) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return zk_reduce(std::move(a), m);
}

// Division by a monic polynomial mod m.
std::pair<ZkPoly, ZkPoly> zk_divmod_monic(ZkPoly a, const ZkPoly& b, const Integer& m) {
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
    ZkPoly q(a.size() - b.size() + 1, Integer(0));
    for (int k = static_cast<int>(a.size()) - 1 - db; k >= 0; --k) {
        Integer f = zmod(a[k + db], m);
        if (f == 0) { continue; }
        q[k] = f;
        for (int i = 0; i <= db; ++i) a[k + i] = zmod(a[k + i] - f * b[i], m);
    }
    a.resize(db > 0 ? db : 0);
    zk_trim(a);
    zk_trim(q);
    return {q, a};
}

struct HenselPair {
    ZkPoly g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m); h monic
};

// One quadratic Hensel step: from modulus m to m^2 (von zur Gathen 15.10).
HenselPair hensel_step(const ZkPoly& f, const HenselPair& in, const Integer& m) {
    Integer m2 = m * m;
    ZkPoly e = zk_sub(zk_reduce(f, m2), zk_mul(in.g, in.h, m2), m2);
    auto [q, r] = zk_divmod_monic(zk_mul(in.s, e, m2), in.h, m2);
    HenselPair out;
    out.g = zk_add(in.g, zk_add(zk_mul(in.t, e, m2), zk_mul(q, in.g, m2), m2), m2);
    out.h = zk_add(in.h, r, m2);
    ZkPoly b = zk_sub(zk_add(zk_mul(in.s, out.g, m2), zk_mul(in.t, out.h, m2), m2), ZkPoly{Integer(1)}, m2);
    auto [c, d] = zk_divmod_monic(zk_mul(in.s, b, m2), out.h, m2);
    out.s = zk_sub(in.s, d, m2);
    out.t = zk_sub(in.t, zk_add(zk_mul(in.t, b, m2), zk_mul(c, out.g, m2), m2), m2);
    return out;
}

ZkPoly zk_from_mod(const ModPoly& a) {
    ZkPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<long>(a[i]));
    return r;
}

// Extended Euclid mod p on ModPoly, returning s,t with s*a + t*b = 1.
std::pair<ModPoly, ModPoly> mp_bezout(const Fp& F, const ModPoly& a, const ModPoly& b) {
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r2] = modp::divmod(F, r0, r1);
        ModPoly s2 = modp::sub(F, s0, modp::mul(F, q, s1));
        ModPoly t2 = modp::sub(F, t0, modp::mul(F, q, t1));
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (modp::deg(r0) != 0) throw error("mod-p Bezout of non-coprime polynomials");
    u64 inv = F.inv(r0[0]);
    for (auto& c : s0) c = F.mul(c, inv);
    for (auto& c : t0) c = F.mul(c, inv);
    return {s0, t0};
}

// Lift the monic factorization f = prod(factors) from mod p to mod p^K >= bound,
// recursively splitting the list in two. Returns the lifted factors and p^K.
void hensel_tree(const Fp& F, const ZkPoly& f, const std::vector<ModPoly>& factors,
                 const Integer& target, std::vector<ZkPoly>& out, Integer& modulus_out) {
    if (factors.size() == 1) {
        Integer m(static_cast<long>(F.p));
        while (m < target) m = m * m;
        out.push_back(zk_reduce(f, m));
        modulus_out = m;
        return;
    }
    size_t half = factors.size() / 2;
    ModPoly gp = {1}, hp = {1};
    for (size_t i = 0; i < half; ++i) gp = modp::mul(F, gp, factors[i]);
    for (size_t i = half; i < factors.size(); ++i) hp = modp::mul(F, hp, factors[i]);
    auto [sp, tp] = mp_bezout(F, gp, hp);
    HenselPair pr{zk_from_mod(gp), zk_from_mod(hp), zk_from_mod(sp), zk_from_mod(tp)};
    Integer m(static_cast<long>(F.p));
    while (m < target) {
        pr = hensel_step(zk_reduce(f, m * m), pr, m);
        m = m * m;
    }
    std::vector<ModPoly> left(factors.begin(), factors.begin() + half);
    std::vector<ModPoly> right(factors.begin() + half, factors.end());
    Integer dummy;
    hensel_tree(F, pr.g, left, target, out, dummy);
    hensel_tree(F, pr.h, right, target, out, dummy);
    modulus_out = m;
}

Integer zk_symmetric(const Integer& a, const Integer& m) {
    return (a * 2 > m) ? Integer(a - m) : a;
}

// ---------------------------------------------------------------------------
// Zassenhaus over Z for a squarefree primitive polynomial.
// ---------------------------------------------------------------------------

std::vector<Polynomial> factor_squarefree_z(std::vector<Integer> w) {
    std::vector<Polynomial> out;
    int n = static_cast<int>(w.size()) - 1;
    if (n <= 0) return out;
    if (n == 1) {
        out.push_back(from_integer_coeffs(w).monic());
        return out;
    }

    // Prime selection: p must not divide lc and f must stay squarefree mod p.
    Integer pz(1 << 29);
    Fp F{};
    ModPoly fm;
    while (true) {
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
        F.p = static_cast<u64>(pz.get_ui());
        if (w.back() % pz == 0) continue;
        fm.assign(w.size(), 0);
        for (size_t i = 0; i < w.size(); ++i) fm[i] = static_cast<u64>(zmod(w[i], pz).get_ui());
        modp::trim(fm);
        if (modp::deg(fm) != n) continue;
        if (modp::deg(modp::gcd(F, fm, modp::deriv(F, fm))) == 0) break;
    }

    std::vector<ModPoly> mod_factors = modp::factor_squarefree(F, modp::monic(F, fm));
    if (mod_factors.size() == 1) {
        out.push_back(from_integer_coeffs(w).monic());
        return out;
    }
    std::sort(mod_factors.begin(), mod_factors.end());

    // Landau-Mignotte style bound on factor coefficients (times lc).
    Integer norm2 = 0;
    for (const auto& c : w) norm2 += c * c;
    Integer bound = (int_sqrt_exact(norm2).value_or(Integer(1)) + 1) * int_pow(Integer(2), n + 1);
    bound *= abs(w.back());
    bound = 2 * bound + 1;

    std::vector<ZkPoly> lifted;
    Integer m;
    hensel_tree(F, zk_from_mod(modp::monic(F, fm)), mod_factors, bound, lifted, m);
    // hensel_tree lifted the monic image; reduce target polynomial mod m too.

    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);

    std::vector<Integer> rest_z = w;
    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        ZkPoly prod = {zmod(rest_z.back(), m)};
        for (int idx : subset) prod = zk_mul(prod, lifted[idx], m);
        std::vector<Integer> cand(prod.size());
        for (size_t i = 0; i < prod.size(); ++i) cand[i] = zk_symmetric(prod[i], m);
        while (!cand.empty() && cand.back() == 0) cand.pop_back();
        if (cand.empty()) return false;
        cand = z_primitive(cand);
        if (cand.size() < 2) return false;
        // quick trailing-coefficient screen
        if (rest_z[0] != 0 && cand[0] != 0 && rest_z[0] % cand[0] != 0) return false;
        auto q = z_divexact(rest_z, cand);
        if (!q) return false;
        out.push_back(from_integer_coeffs(cand).monic());
        rest_z = z_primitive(*q);
        std::vector<int> next;
        for (int a : alive)
            if (std::find(subset.begin(), subset.end(), a) == subset.end()) next.push_back(a);
        alive = next;
        return true;
    };

    size_t card = 1;
    while (2 * card <= alive.size()) {
        // enumerate subsets of `alive` of size `card`
        std::vector<int> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = static_cast<int>(i);
        bool found = false;
        while (true) {
            std::vector<int> subset(card);
            for (size_t i = 0; i < card; ++i) subset[i] = alive[idx[i]];
            if (try_subset(subset)) {
                found = true;
                break;
            }
            // next combination
            int i = static_cast<int>(card) - 1;
            while (i >= 0 && idx[i] == static_cast<int>(alive.size() - card + i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (size_t j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++card;
    }
    if (rest_z.size() >= 2) out.push_back(from_integer_coeffs(rest_z).monic());
    return out;
}

}  // namespace

PolyFactorization poly_factor(const Polynomial& p) {
    if (p.is_zero()) throw error("factorization of the zero polynomial");
    PolyFactorization result;
    if (p.degree() == 0) {
        result.content = p.coeff(0);
        return result;
    }
    IntegerSplit sp = integer_split(p);
    result.content = sp.content;
    Polynomial prim = from_integer_coeffs(sp.primitive);

    // Yun squarefree decomposition, then factor each squarefree part.
    std::map<std::string, std::pair<Polynomial, int>> acc;
    Polynomial f = prim.monic();
    result.content *= prim.lc();
    Polynomial df = f.derivative();
    Polynomial a = poly_gcd(f, df);
    Polynomial b = poly_divexact(f, a);
    Polynomial c = poly_divexact(df, a);
    Polynomial d = c - b.derivative();
    int mult = 0;
    while (b.degree() > 0) {
        ++mult;
        Polynomial fi = poly_gcd(b, d);
        if (fi.degree() > 0) {
            auto zi = integer_split(fi);
            for (const auto& irr : factor_squarefree_z(zi.primitive)) {
                auto key = irr.to_string();
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(key, std::make_pair(irr, mult));
                else
                    it->second.second += mult;
            }
        }
        b = poly_divexact(b, fi);
        c = poly_divexact(d, fi);
        d = c - b.derivative();
    }
    for (auto& [k, v] : acc) result.factors.push_back(v);
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& x, const auto& y) {
                  if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
                  return x.first.to_string() < y.first.to_string();
              });
    return result;
}

std::vector<Integer> int_roots(const Polynomial& p) {
    if (p.is_zero()) throw error("integer roots of the zero polynomial");
    std::vector<Integer> roots;
    auto fac = poly_factor(p);
    for (const auto& [f, mult] : fac.factors) {
        if (f.degree() != 1) continue;
        Rational r = -f.coeff(0);
        if (!is_integer(r)) continue;
        for (int i = 0; i < mult; ++i) roots.push_back(r.get_num());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rational> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw error("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    auto fac = poly_factor(p);
    for (const auto& [f, mult] : fac.factors) {
        if (f.degree() != 1) continue;
        for (int i = 0; i < mult; ++i) roots.push_back(-f.coeff(0));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Polynomial> monic_divisors(const Polynomial& p, size_t limit) {
    auto fac = poly_factor(p);
    std::vector<Polynomial> divs = {Polynomial(Rational(1))};
    for (const auto& [f, mult] : fac.factors) {
        size_t base = divs.size();
        if (base * (mult + 1) > limit) throw error("divisor enumeration limit exceeded");
        Polynomial pw = f;
        for (int e = 1; e <= mult; ++e) {
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
            if (e < mult) pw *= f;
        }
    }
    return divs;
}

}  // namespace ore
