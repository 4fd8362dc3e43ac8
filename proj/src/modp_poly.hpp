#ifndef ORE_SRC_MODP_POLY_HPP
#define ORE_SRC_MODP_POLY_HPP

// Internal helpers: dense polynomial arithmetic over F_p for a machine-word
// prime (p < 2^30). Shared by the factorizer and the modular gcd.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ore/rational.hpp"

namespace ore::modp {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

inline void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

inline ModPoly mul(const Fp& f, const ModPoly& a, const ModPoly& b) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j]) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return r;
}

inline ModPoly sub(const Fp& f, ModPoly a, const ModPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    trim(a);
    return a;
}

inline std::pair<ModPoly, ModPoly> divmod(const Fp& f, ModPoly a, const ModPoly& b) {
    if (b.empty()) throw error("mod-p division by zero");
    int db = deg(b);
    if (deg(a) < db) return {{}, a};
    u64 lbi = f.inv(b.back());
    ModPoly q(a.size() - b.size() + 1, 0);
    for (int k = static_cast<int>(a.size()) - 1 - db; k >= 0; --k) {
        u64 w = f.mul(a[k + db], lbi);
        if (!w) continue;
        q[k] = w;
        for (int i = 0; i <= db; ++i) a[k + i] = f.sub(a[k + i], f.mul(w, b[i]));
    }
    a.resize(db > 0 ? db : 0);
    trim(a);
    trim(q);
    return {q, a};
}

inline ModPoly rem(const Fp& f, const ModPoly& a, const ModPoly& b) { return divmod(f, a, b).second; }

inline ModPoly monic(const Fp& f, ModPoly a) {
    if (a.empty()) return a;
    u64 s = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, s);
    return a;
}

inline ModPoly gcd(const Fp& f, ModPoly a, ModPoly b) {
    while (!b.empty()) {
        ModPoly r = rem(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, a);
}

inline ModPoly deriv(const Fp& f, const ModPoly& a) {
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(a[i], i % f.p);
    trim(r);
    return r;
}

inline ModPoly powmod(const Fp& f, ModPoly base, const Integer& e, const ModPoly& mod) {
    ModPoly r = {1};
    base = rem(f, base, mod);
    if (e == 0) return r;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = rem(f, mul(f, r, r), mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(f, mul(f, r, base), mod);
    }
    return r;
}

inline ModPoly reduce_integer_poly(const std::vector<Integer>& w, const Fp& f) {
    Integer pz(static_cast<long>(f.p));
    ModPoly m(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), w[i].get_mpz_t(), pz.get_mpz_t());
        m[i] = r.get_ui();
    }
    trim(m);
    return m;
}

// Cantor-Zassenhaus equal-degree splitting: f squarefree, all factors degree d.
inline void equal_degree(const Fp& F, const ModPoly& f, int d, std::mt19937_64& rng,
                         std::vector<ModPoly>& out) {
    int n = deg(f);
    if (n == d) {
        out.push_back(monic(F, f));
        return;
    }
    Integer q = int_pow(Integer(static_cast<long>(F.p)), d);
    Integer e = (q - 1) / 2;
    while (true) {
        ModPoly a(n);
        for (auto& c : a) c = rng() % F.p;
        trim(a);
        if (deg(a) < 1) continue;
        ModPoly g = gcd(F, a, f);
        if (deg(g) > 0 && deg(g) < n) {
            equal_degree(F, g, d, rng, out);
            equal_degree(F, divmod(F, f, g).first, d, rng, out);
            return;
        }
        ModPoly b = powmod(F, a, e, f);
        if (b.empty()) continue;
        b[0] = F.sub(b[0], 1);
        trim(b);
        g = gcd(F, b, f);
        if (deg(g) > 0 && deg(g) < n) {
            equal_degree(F, g, d, rng, out);
            equal_degree(F, divmod(F, f, g).first, d, rng, out);
            return;
        }
    }
}

// Full factorization of a squarefree monic polynomial mod p.
inline std::vector<ModPoly> factor_squarefree(const Fp& F, ModPoly f) {
    std::vector<ModPoly> out;
    std::mt19937_64 rng(0x5eedu ^ F.p);
    ModPoly h = {0, 1};  // x
    ModPoly x = h;
    int d = 0;
    while (deg(f) > 0) {
        ++d;
        if (2 * d > deg(f)) {
            out.push_back(monic(F, f));
            break;
        }
        h = powmod(F, h, Integer(static_cast<long>(F.p)), f);
        ModPoly g = gcd(F, sub(F, h, x), f);
        if (deg(g) > 0) {
            equal_degree(F, g, d, rng, out);
            f = divmod(F, f, g).first;
            h = rem(F, h, f);
        }
    }
    return out;
}

}  // namespace ore::modp

#endif
