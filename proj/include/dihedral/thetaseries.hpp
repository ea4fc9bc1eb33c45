#pragma once

#include <functional>
#include <string>

#include "dihedral/galoisrep.hpp"
#include "dihedral/qexp.hpp"

namespace dihedral {

struct UnsupportedSignature : std::domain_error {
    UnsupportedSignature()
        : std::domain_error(
              "untwisted real-quadratic character has no holomorphic theta") {}
};
struct SmallDiscriminant : std::domain_error {
    SmallDiscriminant() : std::domain_error("D in {-3, -4} not supported") {}
};

/// One prime-ideal factor of an integral ideal. For split and ramified
/// primes, root is the b of the form (l, b, c), 0 <= b < 2l; b mod l is the
/// image of sqrt(D) in the residue field of this prime.
struct PrimeIdealChoice {
    i64 l;
    SplittingType type;
    i64 root; // unused for inert primes
    i64 exponent;
};

struct IdealDesc {
    std::vector<PrimeIdealChoice> factors;
    i64 class_index; // in the ambient class group
};

std::vector<IdealDesc> ideals_of_norm(const FundamentalDiscriminant& D,
                                      const FormClassGroupPtr& group, i64 n);

// sign of the quadratic twist at a prime ideal, or +1 when untwisted
using TwistFn = std::function<int(i64 l, SplittingType, i64 root)>;

/// Multiplicative character on ideals coprime to the conductor: a class
/// character, optionally twisted by the quadratic symbol of K(sqrt(lambda)).
class IdealCharacter {
public:
    IdealCharacter(FundamentalDiscriminant D, ClassCharacter base);
    IdealCharacter(FundamentalDiscriminant D, ClassCharacter base,
                   TwistFn twist, i64 aux_prime, i64 aux_root);

    const FundamentalDiscriminant& disc() const { return D_; }
    const ClassCharacter& base() const { return base_; }
    bool twisted() const { return static_cast<bool>(twist_); }
    i64 conductor_norm() const { return twisted() ? aux_prime_ : 1; }
    i64 aux_prime() const { return aux_prime_; }

    // value at one prime ideal; zero at the prime dividing the conductor
    CycElt value_prime(i64 l, SplittingType type, i64 root) const;

private:
    FundamentalDiscriminant D_;
    ClassCharacter base_;
    TwistFn twist_;
    i64 aux_prime_ = 0;
    i64 aux_root_ = 0;
};

// Artin conductor of the induced representation: |D| times the norm of the
// character conductor (1 untwisted, the auxiliary prime l twisted)
inline i64 induced_conductor(const IdealCharacter& chr) {
    i64 aD = chr.disc().D < 0 ? -chr.disc().D : chr.disc().D;
    return aD * chr.conductor_norm();
}

// a_n = sum of char values over integral ideals of norm n, exact
QExpansion<CycElt> theta_coeffs(const IdealCharacter& chr, i64 B);

QExpansion<ResElt> reduce_qexp(const QExpansion<CycElt>& f,
                               const ResidueFieldPtr& F);

struct HeckeViolation {
    std::string kind; // "a1", "mult", "power"
    i64 m = 0, n = 0;
};

/// Eigenform recursion check: multiplicativity on coprime pairs with product
/// <= B, and a_{l^{r+1}} = a_l a_{l^r} - eps(l) l^{k-1} a_{l^{r-1}} for
/// primes l <= prime_bound not dividing N (no eps term when l | N).
template <class S>
std::vector<HeckeViolation> hecke_consistency(
    const QExpansion<S>& f, const std::function<S(i64)>& epsilon, int k, i64 N,
    i64 prime_bound, i64 B) {
    std::vector<HeckeViolation> out;
    if (B > f.bound()) throw InsufficientPrecision();
    // a_1 must act as the ring identity
    for (i64 n = 1; n <= B; ++n) {
        if (!(f.at(1) * f.at(n) == f.at(n))) {
            out.push_back({"a1", 1, n});
            break;
        }
    }
    for (i64 m = 2; m * 2 <= B; ++m) {
        for (i64 n = m + 1; m * n <= B; ++n) {
            if (std::gcd(m, n) != 1) continue;
            if (!(f.at(m * n) == f.at(m) * f.at(n)))
                out.push_back({"mult", m, n});
        }
    }
    for (i64 l : primes_up_to(prime_bound)) {
        if (l > B) break;
        i64 lk = 1;
        for (int i = 0; i + 1 < k; ++i) lk *= l;
        for (i64 lr = l; lr * l <= B; lr *= l) {
            S rhs = f.at(l) * f.at(lr);
            if (N % l != 0) rhs = rhs - epsilon(l) * lk * f.at(lr / l);
            if (!(f.at(lr * l) == rhs)) out.push_back({"power", l, lr * l});
        }
    }
    return out;
}

} // namespace dihedral
