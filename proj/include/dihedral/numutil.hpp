#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dihedral {

using i64 = long long;
using i128 = __int128;

inline i64 mod_reduce(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>((static_cast<i128>(a) * b) % m);
}

inline i64 powmod(i64 a, i64 e, i64 m) {
    a = mod_reduce(a, m);
    i64 r = 1 % m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// g = gcd(a,b) and x,y with a*x + b*y = g
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    i64 x1, y1;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline i64 inv_mod(i64 a, i64 m) {
    i64 x, y;
    i64 g = ext_gcd(mod_reduce(a, m), m, x, y);
    if (g != 1) throw std::domain_error("inv_mod: not invertible");
    return mod_reduce(x, m);
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic Miller-Rabin base set for 64-bit range
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline i64 isqrt_floor(i64 n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt_floor(n);
    return r * r == n;
}

// smallest prime factor sieve, index 0..limit
inline std::vector<int> spf_sieve(int limit) {
    std::vector<int> spf(limit + 1, 0);
    for (int i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (long long j = i; j <= limit; j += i) {
                if (spf[j] == 0) spf[j] = i;
            }
        }
    }
    return spf;
}

inline std::vector<i64> primes_up_to(i64 limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<i64> out;
    for (i64 i = 2; i <= limit; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (i64 j = i * i; j <= limit; j += i) comp[j] = true;
        }
    }
    return out;
}

inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> fs;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            fs.push_back({p, e});
        }
    }
    if (n > 1) fs.push_back({n, 1});
    return fs;
}

// square root of a modulo odd prime p, or -1 if a is a non-residue
inline i64 sqrt_mod(i64 a, i64 p) {
    a = mod_reduce(a, p);
    if (p == 2) return a;
    if (a == 0) return 0;
    if (powmod(a, (p - 1) / 2, p) != 1) return -1;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    i64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    i64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    i64 m = s;
    i64 c = powmod(z, q, p);
    i64 t = powmod(a, q, p);
    i64 r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        i64 t2 = t;
        i64 i = 0;
        while (t2 != 1) { t2 = mulmod(t2, t2, p); ++i; }
        i64 b = c;
        for (i64 j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

} // namespace dihedral
