#pragma once

#include <functional>
#include <stdexcept>

#include "dihedral/cyclotomic.hpp"
#include "dihedral/quadfield.hpp"

namespace dihedral {

struct NotDihedral : std::domain_error {
    NotDihedral() : std::domain_error("character squares to 1; induction reducible") {}
};
struct RamifiedPrime : std::domain_error {
    RamifiedPrime() : std::domain_error("prime ramifies in the quadratic field") {}
};
struct RamifiedAtP : std::domain_error {
    RamifiedAtP() : std::domain_error("representation is ramified at p") {}
};

/// A character of the (narrow) form class group with values in the m-th
/// roots of unity, m = order of the character.
class ClassCharacter {
public:
    ClassCharacter(FormClassGroupPtr group, std::vector<i64> exponents);

    const FormClassGroupPtr& group() const { return group_; }
    const std::vector<i64>& exponents() const { return exponents_; }
    i64 order() const { return m_; }
    const CycModulusPtr& value_ring() const { return ring_; }

    i64 value_exponent(i64 class_index) const; // chi(class) = zeta_m^k
    CycElt value(i64 class_index) const;
    CycElt value_at(const BinaryQuadraticForm& f) const; // reduces first

    ClassCharacter inverse() const;
    bool trivial_on(const BinaryQuadraticForm& f) const;

private:
    FormClassGroupPtr group_;
    std::vector<i64> exponents_;
    i64 m_;
    CycModulusPtr ring_;
};

// rejects chi with chi^2 = 1
ClassCharacter make_character(FormClassGroupPtr group, std::vector<i64> exponents);

// chi^sigma = chi^{-1}: conjugation by sigma inverts every ideal class
ClassCharacter sigma_conjugate(const ClassCharacter& chi);

enum class WeightReport { MinimalWeightOne, UnsupportedRamifiedAtP };

class DihedralRep;

struct SerreInvariants {
    i64 conductor = 0; // prime-to-p part
    WeightReport weight_report = WeightReport::MinimalWeightOne;
    bool exceptional = false;
    std::function<ResElt(i64)> epsilon; // l coprime to conductor * p
};

/// The representation induced from chi, together with a residue prime above
/// p fixing the reduction.
class DihedralRep {
public:
    DihedralRep(FundamentalDiscriminant D, ClassCharacter chi, i64 p);

    const FundamentalDiscriminant& disc() const { return D_; }
    const ClassCharacter& chi() const { return chi_; }
    i64 p() const { return p_; }
    const ResidueFieldPtr& residue() const { return residue_; }

private:
    FundamentalDiscriminant D_;
    ClassCharacter chi_;
    i64 p_;
    ResidueFieldPtr residue_;
};

// trace of rho(Frob_l), exact; l must not divide D
CycElt frob_trace(const DihedralRep& rep, i64 l);

// det of rho(Frob_l) = eps_K(l) * chi([(l) O_K]); l must not divide D
CycElt frob_det(const DihedralRep& rep, i64 l);

// conductor of the untwisted induced representation: |D|
i64 conductor(const DihedralRep& rep);

SerreInvariants serre_invariants(const DihedralRep& rep);

// equal Frobenius eigenvalues at p after reduction; requires p unramified
bool exceptionality(const DihedralRep& rep);

enum class LiftCase { CaseA, CaseB };

// CaseB: the naive characteristic-zero induction is even (p = 2, K real,
// chi trivial on the sign structure of the narrow class group)
LiftCase lift_case(const DihedralRep& rep);

// the obstruction of the introduction: no odd characteristic-zero lift with
// conductor dividing N exists
bool no_char0_lift_same_level(const DihedralRep& rep);

} // namespace dihedral
