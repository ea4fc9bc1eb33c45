#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "dihedral/numutil.hpp"

namespace dihedral {

struct ModulusMismatch : std::invalid_argument {
    ModulusMismatch() : std::invalid_argument("cyclotomic modulus mismatch") {}
};
struct NonCoprimeModulus : std::domain_error {
    NonCoprimeModulus() : std::domain_error("gcd(m, p) != 1") {}
};

// integer polynomials, little-endian coefficient order
using IntPoly = std::vector<i64>;

// Phi_m, the m-th cyclotomic polynomial
IntPoly cyclotomic_poly(i64 m);

/// Z[zeta_m] presented in the power basis 1, zeta, ..., zeta^{phi(m)-1},
/// with reduction modulo Phi_m.
class CycModulus {
public:
    explicit CycModulus(i64 m);

    i64 m() const { return m_; }
    i64 degree() const { return phi_; }
    const IntPoly& min_poly() const { return min_poly_; }

    bool operator==(const CycModulus& o) const { return m_ == o.m_; }

private:
    i64 m_;
    i64 phi_;
    IntPoly min_poly_;
};

using CycModulusPtr = std::shared_ptr<const CycModulus>;

CycModulusPtr cyc_modulus(i64 m); // cached, one instance per m

class CycElt {
public:
    CycElt() = default;
    CycElt(CycModulusPtr mod, IntPoly coeffs); // reduces mod Phi_m

    static CycElt from_int(CycModulusPtr mod, i64 n);
    static CycElt zeta_power(CycModulusPtr mod, i64 k); // zeta_m^k

    const CycModulusPtr& modulus() const { return mod_; }
    const IntPoly& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_int(i64 n) const;

    CycElt operator+(const CycElt& o) const;
    CycElt operator-(const CycElt& o) const;
    CycElt operator*(const CycElt& o) const;
    CycElt operator-() const;
    CycElt operator*(i64 n) const;

    bool operator==(const CycElt& o) const;
    bool operator!=(const CycElt& o) const { return !(*this == o); }

private:
    void check_same(const CycElt& o) const;

    CycModulusPtr mod_;
    IntPoly coeffs_; // length phi(m), canonical
};

/// F_p[x]/(factor), for a chosen monic irreducible factor of Phi_m mod p.
/// The factor is the smallest one in the coefficient order (compared from
/// the top degree down), which fixes the prime above p deterministically.
class ResidueField {
public:
    ResidueField(i64 m, i64 p); // throws NonCoprimeModulus if gcd(m,p) != 1

    i64 p() const { return p_; }
    i64 m() const { return mod_->m(); }
    const CycModulusPtr& modulus() const { return mod_; }
    const std::vector<i64>& factor() const { return factor_; } // monic, mod p
    i64 degree() const { return static_cast<i64>(factor_.size()) - 1; }

    bool operator==(const ResidueField& o) const {
        return p_ == o.p_ && m() == o.m();
    }

private:
    CycModulusPtr mod_;
    i64 p_;
    std::vector<i64> factor_;
};

using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

ResidueFieldPtr residue_field(i64 m, i64 p); // cached

class ResElt {
public:
    ResElt() = default;
    ResElt(ResidueFieldPtr field, std::vector<i64> coeffs);

    static ResElt from_int(ResidueFieldPtr field, i64 n);

    const ResidueFieldPtr& field() const { return field_; }
    const std::vector<i64>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;

    ResElt operator+(const ResElt& o) const;
    ResElt operator-(const ResElt& o) const;
    ResElt operator*(const ResElt& o) const;
    ResElt operator*(i64 n) const;
    ResElt operator-() const;
    ResElt pow(i64 e) const; // e >= 0
    ResElt inverse() const;

    bool operator==(const ResElt& o) const;
    bool operator!=(const ResElt& o) const { return !(*this == o); }

    i64 mult_order() const; // order in the unit group; element must be nonzero

private:
    void check_same(const ResElt& o) const;

    ResidueFieldPtr field_;
    std::vector<i64> coeffs_; // length degree, entries in [0, p)
};

// the ring homomorphism Z[zeta_m] -> F_p[x]/(factor)
ResElt reduce_mod_P(const CycElt& a, const ResidueFieldPtr& F);

} // namespace dihedral
