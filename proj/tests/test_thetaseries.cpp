#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dihedral/thetaseries.hpp"

using namespace dihedral;

namespace {

// lattice-point representation counts: ideals of norm n in the class of the
// (conjugate) reduced form f correspond to proper representations scaled by
// the unit count; summing over all classes counts all ideals of norm n
i64 form_representations(const BinaryQuadraticForm& f, i64 n) {
    i64 count = 0;
    for (i64 x = -80; x <= 80; ++x)
        for (i64 y = -80; y <= 80; ++y)
            if (f.a * x * x + f.b * x * y + f.c * y * y == n) ++count;
    return count;
}

} // namespace

TEST_CASE("ideal counts match lattice-point counts, n <= 300") {
    for (i64 Dv : {-23, -31, -47}) {
        FundamentalDiscriminant D(Dv);
        auto G = class_group(D);
        for (i64 n = 1; n <= 300; ++n) {
            i64 lattice = 0;
            for (const auto& f : G->classes()) lattice += form_representations(f, n);
            CHECK(lattice % 2 == 0);
            i64 ideals = static_cast<i64>(ideals_of_norm(D, G, n).size());
            CHECK(ideals == lattice / 2); // two units +-1
        }
    }
}

TEST_CASE("ideal factorization descriptors are consistent") {
    FundamentalDiscriminant D(-23);
    auto G = class_group(D);
    for (i64 n = 1; n <= 200; ++n) {
        for (const auto& id : ideals_of_norm(D, G, n)) {
            i64 norm = 1;
            i64 cls = 0;
            for (const auto& pf : id.factors) {
                i64 local = 1;
                for (i64 e = 0; e < pf.exponent; ++e)
                    local *= (pf.type == SplittingType::Inert ? pf.l * pf.l : pf.l);
                norm *= local;
                if (pf.type != SplittingType::Inert) {
                    i64 c = G->class_of({pf.l, pf.root,
                                         (pf.root * pf.root - D.D) / (4 * pf.l)});
                    for (i64 e = 0; e < pf.exponent; ++e) cls = G->mul(cls, c);
                }
            }
            CHECK(norm == n);
            CHECK(cls == id.class_index);
        }
    }
}

TEST_CASE("inert norms: D = 229, n = 4 is the inert prime (2)") {
    FundamentalDiscriminant D(229);
    auto G = class_group(D);
    auto ids = ideals_of_norm(D, G, 4);
    REQUIRE(ids.size() == 1);
    CHECK(ids[0].class_index == 0);
    REQUIRE(ids[0].factors.size() == 1);
    CHECK(ids[0].factors[0].type == SplittingType::Inert);
    CHECK(ids[0].factors[0].l == 2);
    CHECK(ids[0].factors[0].exponent == 1);
    CHECK(ideals_of_norm(D, G, 2).empty());
    CHECK(ideals_of_norm(D, G, 8).empty());
}

TEST_CASE("theta expansion of D = -23: leading coefficients") {
    FundamentalDiscriminant D(-23);
    auto chi = make_character(class_group(D), {1});
    auto th = theta_coeffs(IdealCharacter(D, chi), 64);
    // eta(q) eta(q^23) = q - q^2 - q^3 + q^6 + q^8 - q^13 - q^16 + q^23 - q^24 ...
    std::vector<i64> expect{1,  -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1,
                            0,  0,  -1, 0, 0, 0, 0, 0, 0, 1, -1, 1, 1,
                            1,  0,  -1, 0, -1, 0};
    for (size_t i = 0; i < expect.size(); ++i)
        CHECK(th.at(static_cast<i64>(i + 1)).is_int(expect[i]));
}

TEST_CASE("theta coefficients from the ideal sum directly") {
    for (i64 Dv : {-23, -31}) {
        FundamentalDiscriminant D(Dv);
        auto G = class_group(D);
        auto chi = make_character(G, {1});
        IdealCharacter ic(D, chi);
        auto th = theta_coeffs(ic, 300);
        for (i64 n = 1; n <= 300; ++n) {
            CycElt sum = CycElt::from_int(chi.value_ring(), 0);
            for (const auto& id : ideals_of_norm(D, G, n))
                sum = sum + chi.value(id.class_index);
            CHECK(th.at(n) == sum);
        }
    }
}

TEST_CASE("conjugate character gives the same expansion") {
    FundamentalDiscriminant D(-23);
    auto G = class_group(D);
    auto th1 = theta_coeffs(IdealCharacter(D, make_character(G, {1})), 500);
    auto th2 = theta_coeffs(IdealCharacter(D, make_character(G, {2})), 500);
    for (i64 n = 1; n <= 500; ++n) CHECK(th1.at(n) == th2.at(n));
}

TEST_CASE("eigenform recursions hold; injected faults are caught") {
    for (i64 Dv : {-23, -31, -87}) {
        FundamentalDiscriminant D(Dv);
        auto G = class_group(D);
        std::vector<i64> exps(G->cyclic_decomposition().size(), 1);
        auto chi = make_character(G, exps);
        DihedralRep rep(D, chi, 5); // p only matters for reduction, unused here
        auto th = theta_coeffs(IdealCharacter(D, chi), 2000);
        std::function<CycElt(i64)> eps = [&](i64 l) { return frob_det(rep, l); };
        auto viol = hecke_consistency<CycElt>(th, eps, 1, -Dv, 60, 2000);
        CHECK(viol.empty());

        auto bad = th;
        bad.a[7 - 1] = bad.a[7 - 1] + CycElt::from_int(chi.value_ring(), 1);
        auto viol2 = hecke_consistency<CycElt>(bad, eps, 1, -Dv, 60, 2000);
        CHECK(!viol2.empty());
        bool touches7 = false;
        for (const auto& v : viol2) touches7 = touches7 || v.m % 7 == 0 || v.n % 7 == 0;
        CHECK(touches7);
    }
}

TEST_CASE("order-6 character class group sanity (D = -87)") {
    auto G = class_group(FundamentalDiscriminant(-87));
    CHECK(G->order() == 6);
    REQUIRE(G->cyclic_decomposition().size() == 2); // C2 x C3
    auto chi = make_character(G, {1, 1});
    CHECK(chi.order() == 6);
    CHECK(chi.value_ring()->m() == 6);
}

TEST_CASE("unsupported signatures fail loudly") {
    FundamentalDiscriminant D229(229);
    auto chi = make_character(class_group(D229), {1});
    CHECK_THROWS_AS(theta_coeffs(IdealCharacter(D229, chi), 10),
                    UnsupportedSignature);
    FundamentalDiscriminant D3(-3);
    ClassCharacter trivial(class_group(D3), {}); // bypasses the order check
    CHECK_THROWS_AS(theta_coeffs(IdealCharacter(D3, trivial), 10),
                    SmallDiscriminant);
}

TEST_CASE("insufficient precision is an error") {
    FundamentalDiscriminant D(-23);
    auto chi = make_character(class_group(D), {1});
    auto th = theta_coeffs(IdealCharacter(D, chi), 50);
    std::function<CycElt(i64)> eps = [&](i64 l) {
        return CycElt::from_int(chi.value_ring(), kronecker_symbol(-23, l));
    };
    CHECK_THROWS_AS(hecke_consistency<CycElt>(th, eps, 1, 23, 10, 100),
                    InsufficientPrecision);
    CHECK_THROWS_AS(th.at(51), InsufficientPrecision);
}
