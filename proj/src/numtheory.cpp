#include "ore/numtheory.hpp"

namespace ore {

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return 2;
    Integer c = 1;
    while (true) {
        Integer x = 2, y = 2, d = 1;
        auto step = [&](const Integer& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Integer diff = x > y ? Integer(x - y) : Integer(y - x);
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
        c += 1;  // new polynomial on cycle failure
    }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
    if (n <= 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<Integer, int> factor_integer(Integer n) {
    std::map<Integer, int> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            out[Integer(p)] += 1;
            n /= p;
        }
    }
    Integer p = 41;
    while (p * p <= n && p < 100000) {
        while (n % p == 0) {
            out[p] += 1;
            n /= p;
        }
        p += 2;
    }
    factor_into(n, out);
    return out;
}

std::pair<Integer, Integer> squarefree_part(const Integer& n) {
    if (n == 0) return {0, 1};
    Integer sf = n < 0 ? Integer(-1) : Integer(1);
    Integer sq = 1;
    for (const auto& [p, e] : factor_integer(n)) {
        if (e % 2 == 1) sf *= p;
        sq *= int_pow(p, e / 2);
    }
    return {sf, sq};
}

std::optional<Integer> sqrt_mod_prime(Integer a, const Integer& p) {
    a = ((a % p) + p) % p;
    if (p == 2 || a == 0) return a;
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
    auto powm = [&](Integer b, Integer e) {
        Integer r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    if (p % 4 == 3) return powm(a, (p + 1) / 4);
    // Tonelli-Shanks
    Integer q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) z += 1;
    Integer m = s, c = powm(z, q), t = powm(a, q), r = powm(a, (q + 1) / 2);
    while (t != 1) {
        Integer tt = t;
        int i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
            if (Integer(i) >= m) return std::nullopt;  // not a residue (defensive)
        }
        Integer b = c;
        for (Integer j = 0; j < m - i - 1; j += 1) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

std::optional<Integer> sqrt_mod_squarefree(const Integer& a, const std::map<Integer, int>& fac,
                                           const Integer& m) {
    Integer x = 0, mod = 1;
    for (const auto& [p, e] : fac) {
        if (e != 1) throw error("modulus not squarefree");
        auto r = sqrt_mod_prime(a, p);
        if (!r) return std::nullopt;
        // CRT combine x (mod mod) with r (mod p)
        Integer g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t(), p.get_mpz_t());
        Integer newmod = mod * p;
        Integer diff = *r - x;
        Integer t = (diff * u) % p;
        x = ((x + mod * t) % newmod + newmod) % newmod;
        mod = newmod;
    }
    if (mod != m && mod != -m) {
        // modulus 1 case and sign conventions
        if (m == 1 || m == -1) return Integer(0);
    }
    return x;
}

}  // namespace ore
