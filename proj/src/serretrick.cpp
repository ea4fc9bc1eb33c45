#include "dihedral/serretrick.hpp"

namespace dihedral {

i64 quad_norm(const FundamentalDiscriminant& D, const QuadElement& lam) {
    i128 u = lam.u, v = lam.v;
    i128 n;
    if (mod_reduce(D.D, 4) == 1)
        n = u * u + u * v - v * v * ((D.D - 1) / 4);
    else
        n = u * u - v * v * (D.D / 4);
    if (n > static_cast<i128>(INT64_MAX) || n < -static_cast<i128>(INT64_MAX))
        throw std::overflow_error("quad_norm overflow");
    return static_cast<i64>(n);
}

namespace {

// reduction of u + v*omega in the degree-1 residue field at (q, root)
i64 reduce_deg1(const FundamentalDiscriminant& D, const QuadElement& lam, i64 q,
                i64 root) {
    i64 r = mod_reduce(root, q); // sqrt(D) mod q
    i64 w;                       // omega mod q
    if (mod_reduce(D.D, 4) == 1)
        w = mulmod(1 + r, inv_mod(2, q), q);
    else
        w = mulmod(r, inv_mod(2, q), q);
    return mod_reduce(lam.u + mulmod(mod_reduce(lam.v, q), w, q), q);
}

// Euler criterion in F_{q^2} = F_q[t]/(t^2 - D) for inert q
int symbol_inert(const FundamentalDiscriminant& D, const QuadElement& lam,
                 i64 q) {
    i64 d = mod_reduce(D.D, q);
    // lam = u + v*omega; omega = (1 + t)/2 or t/2 with t = sqrt(D)
    i64 half = inv_mod(2, q);
    i64 a, b; // lam = a + b t
    if (mod_reduce(D.D, 4) == 1) {
        a = mod_reduce(lam.u + mulmod(mod_reduce(lam.v, q), half, q), q);
        b = mulmod(mod_reduce(lam.v, q), half, q);
    } else {
        a = mod_reduce(lam.u, q);
        b = mulmod(mod_reduce(lam.v, q), half, q);
    }
    // (a + b t)^e by square and multiply, e = (q^2 - 1) / 2
    i64 e = (q * q - 1) / 2;
    i64 ra = 1, rb = 0;
    i64 xa = a, xb = b;
    while (e > 0) {
        if (e & 1) {
            i64 na = mod_reduce(mulmod(ra, xa, q) + mulmod(mulmod(rb, xb, q), d, q), q);
            i64 nb = mod_reduce(mulmod(ra, xb, q) + mulmod(rb, xa, q), q);
            ra = na;
            rb = nb;
        }
        i64 na = mod_reduce(mulmod(xa, xa, q) + mulmod(mulmod(xb, xb, q), d, q), q);
        i64 nb = mod_reduce(2 * mulmod(xa, xb, q), q);
        xa = na;
        xb = nb;
        e >>= 1;
    }
    if (rb != 0) throw std::logic_error("symbol_inert: nonscalar power");
    if (ra == 1) return +1;
    if (ra == q - 1) return -1;
    throw std::logic_error("symbol_inert: unexpected value");
}

int symbol_at(const FundamentalDiscriminant& D, const QuadElement& lam, i64 q,
              SplittingType type, i64 root) {
    if (type == SplittingType::Inert) return symbol_inert(D, lam, q);
    i64 t = reduce_deg1(D, lam, q, root);
    if (t == 0) throw BadPrime();
    return powmod(t, (q - 1) / 2, q) == 1 ? +1 : -1;
}

// square class of lam in the completion at a prime over 2. A unit of a
// 2-adic field with e <= 2 is a square iff x^2 = lam is solvable mod 8
// (Hensel: any solution mod 8 lifts since v(x^2 - lam) >= 3e > 2 v(2)).
int symbol_at_two(const FundamentalDiscriminant& D, const QuadElement& lam,
                  SplittingType type, i64 root) {
    if (type == SplittingType::Split) {
        // completion is Q_2; send sqrt(D) to the 2-adic root r = root mod 4.
        // r mod 16 is pinned by r^2 = D mod 32 together with r mod 4.
        i64 r = -1;
        for (i64 s = 1; s < 32; s += 2)
            if (mod_reduce(s * s - D.D, 32) == 0 && mod_reduce(s - root, 4) == 0)
                r = mod_reduce(s, 16);
        if (r < 0) throw std::logic_error("symbol_at_two: no 2-adic root");
        i64 w = mod_reduce((1 + r) / 2, 8); // omega = (1 + sqrt(D))/2
        i64 val = mod_reduce(lam.u + lam.v * w, 8);
        return val == 1 ? +1 : -1; // units of Z_2 are squares iff 1 mod 8
    }
    // inert or ramified: one prime over 2, test squares in O_K / 8 directly
    i64 wsq_const, wsq_omega; // omega^2 = wsq_const + wsq_omega * omega
    if (mod_reduce(D.D, 4) == 1) {
        wsq_const = (D.D - 1) / 4;
        wsq_omega = 1;
    } else {
        wsq_const = D.D / 4;
        wsq_omega = 0;
    }
    i64 lu = mod_reduce(lam.u, 8), lv = mod_reduce(lam.v, 8);
    for (i64 x0 = 0; x0 < 8; ++x0) {
        for (i64 x1 = 0; x1 < 8; ++x1) {
            i64 c = mod_reduce(x0 * x0 + x1 * x1 * wsq_const, 8);
            i64 w = mod_reduce(2 * x0 * x1 + x1 * x1 * wsq_omega, 8);
            if (c == lu && w == lv) return +1;
        }
    }
    return -1;
}

} // namespace

AuxiliaryPrime find_auxiliary(const FundamentalDiscriminant& D,
                              i64 chi_conductor_norm, i64 height_bound) {
    if (!D.real()) throw ImaginaryField();
    i64 M = 4 * D.D * chi_conductor_norm;
    for (i64 h = 1; h <= height_bound; ++h) {
        for (i64 x = -h; x <= h; ++x) {
            for (i64 y = -h; y <= h; ++y) {
                if (std::max(x < 0 ? -x : x, y < 0 ? -y : y) != h) continue;
                QuadElement lam{1 + M * x, M * y};
                i64 n = quad_norm(D, lam);
                if (n >= 0) continue;
                i64 l = -n;
                if (l % 2 == 0 || M % l == 0 || !is_prime(l)) continue;
                // locate the prime (lambda): the root of x^2 = D killing lambda
                BinaryQuadraticForm pf = prime_form(D, l);
                i64 root = -1;
                for (i64 b : {pf.b, mod_reduce(-pf.b, 2 * l)}) {
                    if (reduce_deg1(D, lam, l, b) == 0) root = b;
                }
                if (root < 0) throw std::logic_error("aux prime: no root kills lambda");
                return {D, lam, l, M, root};
            }
        }
    }
    throw SearchExhausted();
}

int residue_symbol(const FundamentalDiscriminant& D, const QuadElement& lambda,
                   i64 aux_l, i64 q, SplittingType type, i64 root) {
    if (q == 2 || q == aux_l || D.D % q == 0) throw BadPrime();
    return symbol_at(D, lambda, q, type, root);
}

IdealCharacter twisted_character(const ClassCharacter& chi,
                                 const AuxiliaryPrime& aux) {
    if (chi.order() <= 2) throw NotDihedral();
    FundamentalDiscriminant D = aux.D;
    QuadElement lam = aux.lambda;
    i64 aux_l = aux.l;
    TwistFn twist = [D, lam, aux_l](i64 q, SplittingType type, i64 root) -> int {
        if (q == aux_l) {
            // the conjugate of (lambda): evaluate at the other root
            return symbol_at(D, lam, q, type, root);
        }
        if (q == 2) return symbol_at_two(D, lam, type, root);
        return symbol_at(D, lam, q, type, root);
    };
    return IdealCharacter(D, chi, std::move(twist), aux.l, aux.lambda_root);
}

QuadElement simple_negative_norm(const FundamentalDiscriminant& D) {
    if (!D.real()) throw ImaginaryField();
    for (i64 h = 1;; ++h) {
        // v > 0 without loss of generality (lambda and -lambda have equal norm)
        for (i64 ua = 0; ua <= h; ++ua) {
            for (i64 u : {ua, -ua}) {
                if (ua == 0 && u != 0) break;
                for (i64 v = 1; v <= h; ++v) {
                    if (std::max(ua, v) != h) continue;
                    QuadElement lam{u, v};
                    if (quad_norm(D, lam) < 0) return lam;
                }
                if (ua == 0) break;
            }
        }
    }
}

} // namespace dihedral
