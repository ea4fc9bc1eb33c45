#pragma once

#include "dihedral/galoisrep.hpp"
#include "dihedral/thetaseries.hpp"

namespace dihedral {

struct SearchExhausted : std::domain_error {
    SearchExhausted() : std::domain_error("no auxiliary prime within bound") {}
};
struct BadPrime : std::domain_error {
    BadPrime() : std::domain_error("residue symbol undefined at this prime") {}
};

// element u + v*omega of O_K, omega = (1+sqrt(D))/2 or sqrt(D/4)
struct QuadElement {
    i64 u = 0, v = 0;
};

i64 quad_norm(const FundamentalDiscriminant& D, const QuadElement& lam);

/// lambda = 1 mod 4Df with Norm(lambda) = -l, l an odd prime splitting in K.
struct AuxiliaryPrime {
    FundamentalDiscriminant D;
    QuadElement lambda;
    i64 l;
    i64 congruence_modulus; // 4 |D| f
    i64 lambda_root;        // root in [0, 2l) picking the prime (lambda)
};

// scan lambda = 1 + 4Df(x + y omega) by increasing height max(|x|, |y|)
AuxiliaryPrime find_auxiliary(const FundamentalDiscriminant& D,
                              i64 chi_conductor_norm, i64 height_bound);

// quadratic residue symbol of lambda at a prime ideal over q, via Euler's
// criterion in the residue field (F_q for degree 1, F_{q^2} for inert)
int residue_symbol(const FundamentalDiscriminant& D, const QuadElement& lambda,
                   i64 aux_l, i64 q, SplittingType type, i64 root);

// chi * xi as an ideal character of conductor norm l
IdealCharacter twisted_character(const ClassCharacter& chi,
                                 const AuxiliaryPrime& aux);

// smallest-height element of O_K - Z with negative norm
QuadElement simple_negative_norm(const FundamentalDiscriminant& D);

} // namespace dihedral
