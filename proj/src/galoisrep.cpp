#include "dihedral/galoisrep.hpp"

namespace dihedral {

ClassCharacter::ClassCharacter(FormClassGroupPtr group, std::vector<i64> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto& cyc = group_->cyclic_decomposition();
    if (exponents_.size() != cyc.size())
        throw std::invalid_argument("exponent count != number of cyclic factors");
    m_ = 1;
    for (size_t i = 0; i < cyc.size(); ++i) {
        i64 n = cyc[i].second;
        exponents_[i] = mod_reduce(exponents_[i], n);
        i64 image_order = n / std::gcd(n, exponents_[i]);
        m_ = std::lcm(m_, image_order);
    }
    ring_ = cyc_modulus(m_);
}

i64 ClassCharacter::value_exponent(i64 class_index) const {
    const auto& cyc = group_->cyclic_decomposition();
    const auto& c = group_->coords(class_index);
    i64 k = 0;
    for (size_t i = 0; i < cyc.size(); ++i) {
        if (exponents_[i] == 0) continue;
        i64 n = cyc[i].second;
        // chi(g_i) = zeta_n^{e_i} = zeta_o^{e_i/g} with g = gcd(e_i, n),
        // o = n/g the image order (a divisor of m)
        i64 g = std::gcd(exponents_[i], n);
        i64 o = n / g;
        k = mod_reduce(k + c[i] % o * (exponents_[i] / g) % o * (m_ / o), m_);
    }
    return k;
}

CycElt ClassCharacter::value(i64 class_index) const {
    return CycElt::zeta_power(ring_, value_exponent(class_index));
}

CycElt ClassCharacter::value_at(const BinaryQuadraticForm& f) const {
    return value(group_->class_of(f));
}

ClassCharacter ClassCharacter::inverse() const {
    std::vector<i64> e = exponents_;
    for (size_t i = 0; i < e.size(); ++i)
        e[i] = mod_reduce(-e[i], group_->cyclic_decomposition()[i].second);
    return ClassCharacter(group_, std::move(e));
}

bool ClassCharacter::trivial_on(const BinaryQuadraticForm& f) const {
    return value_exponent(group_->class_of(f)) == 0;
}

ClassCharacter make_character(FormClassGroupPtr group, std::vector<i64> exponents) {
    ClassCharacter chi(std::move(group), std::move(exponents));
    if (chi.order() <= 2) throw NotDihedral();
    return chi;
}

ClassCharacter sigma_conjugate(const ClassCharacter& chi) { return chi.inverse(); }

DihedralRep::DihedralRep(FundamentalDiscriminant D, ClassCharacter chi, i64 p)
    : D_(D), chi_(std::move(chi)), p_(p) {
    if (chi_.order() <= 2) throw NotDihedral();
    residue_ = residue_field(chi_.order(), p); // enforces gcd(m, p) = 1
}

CycElt frob_trace(const DihedralRep& rep, i64 l) {
    switch (splitting_type(rep.disc(), l)) {
        case SplittingType::Ramified:
            throw RamifiedPrime();
        case SplittingType::Inert:
            return CycElt::from_int(rep.chi().value_ring(), 0);
        case SplittingType::Split: {
            i64 k = rep.chi().value_exponent(
                rep.chi().group()->class_of(prime_to_class(rep.disc(), l)));
            return CycElt::zeta_power(rep.chi().value_ring(), k) +
                   CycElt::zeta_power(rep.chi().value_ring(), -k);
        }
    }
    throw std::logic_error("unreachable");
}

CycElt frob_det(const DihedralRep& rep, i64 l) {
    auto st = splitting_type(rep.disc(), l);
    if (st == SplittingType::Ramified) throw RamifiedPrime();
    // (l) O_K is principal with totally positive generator, so chi([(l)]) = 1
    CycElt chi_l = rep.chi().value(0);
    int eps_K = kronecker_symbol(rep.disc().D, l);
    return chi_l * eps_K;
}

i64 conductor(const DihedralRep& rep) {
    return rep.disc().D < 0 ? -rep.disc().D : rep.disc().D;
}

bool exceptionality(const DihedralRep& rep) {
    i64 p = rep.p();
    switch (splitting_type(rep.disc(), p)) {
        case SplittingType::Ramified:
            throw RamifiedAtP();
        case SplittingType::Inert:
            // eigenvalues are the two square roots of a root of unity;
            // they coincide exactly in characteristic 2
            return p == 2;
        case SplittingType::Split: {
            ResElt x = reduce_mod_P(
                rep.chi().value_at(prime_to_class(rep.disc(), p)), rep.residue());
            return x == x.inverse();
        }
    }
    throw std::logic_error("unreachable");
}

SerreInvariants serre_invariants(const DihedralRep& rep) {
    SerreInvariants inv;
    i64 N = conductor(rep);
    while (N % rep.p() == 0) N /= rep.p();
    inv.conductor = N;
    inv.weight_report = (conductor(rep) % rep.p() == 0)
                            ? WeightReport::UnsupportedRamifiedAtP
                            : WeightReport::MinimalWeightOne;
    inv.exceptional = (inv.weight_report == WeightReport::MinimalWeightOne)
                          ? exceptionality(rep)
                          : false;
    DihedralRep r = rep;
    inv.epsilon = [r](i64 l) { return reduce_mod_P(frob_det(r, l), r.residue()); };
    return inv;
}

LiftCase lift_case(const DihedralRep& rep) {
    if (rep.p() == 2 && rep.disc().real() &&
        rep.chi().trivial_on(sign_class(rep.disc())))
        return LiftCase::CaseB;
    return LiftCase::CaseA;
}

bool no_char0_lift_same_level(const DihedralRep& rep) {
    return rep.p() == 2 && rep.disc().real() && conductor(rep) % 2 == 1 &&
           fundamental_unit_norm(rep.disc()) == -1;
}

} // namespace dihedral
