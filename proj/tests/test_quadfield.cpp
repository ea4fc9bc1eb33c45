#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dihedral/quadfield.hpp"

using namespace dihedral;

namespace {

// independent enumeration of reduced definite forms: |b| <= a <= c, b >= 0
// whenever |b| = a or a = c
std::set<BinaryQuadraticForm> definite_reduced_oracle(i64 D) {
    std::set<BinaryQuadraticForm> out;
    for (i64 a = 1; 3 * a * a <= -D; ++a) {
        for (i64 b = -a; b <= a; ++b) {
            if ((b * b - D) % (4 * a) != 0) continue;
            i64 c = (b * b - D) / (4 * a);
            if (c < a) continue;
            if ((b == -a || a == c) && b < 0) continue;
            BinaryQuadraticForm f{a, b, c};
            if (f.primitive()) out.insert(f);
        }
    }
    return out;
}

} // namespace

TEST_CASE("fundamental discriminant recognition") {
    for (i64 D : {-23, -4, -3, -7, -8, 5, 8, 12, 13, 229, 2089})
        CHECK(is_fundamental_discriminant(D));
    for (i64 D : {0, 1, -1, 2, 3, -9, 25, 45, -12, -16, 100})
        CHECK(!is_fundamental_discriminant(D));
    CHECK_THROWS_AS(FundamentalDiscriminant(-9), NotFundamental);
}

TEST_CASE("kronecker symbol basics") {
    CHECK(kronecker_symbol(2089, 2) == 1);  // 2089 = 1 mod 8
    CHECK(kronecker_symbol(229, 2) == -1);  // 229 = 5 mod 8
    CHECK(kronecker_symbol(-23, 2) == 1);
    CHECK(kronecker_symbol(-23, 23) == 0);
    // multiplicativity in the bottom argument
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> pick(1, 400);
    for (int i = 0; i < 200; ++i) {
        i64 m = pick(rng), n = pick(rng);
        CHECK(kronecker_symbol(229, m * n) ==
              kronecker_symbol(229, m) * kronecker_symbol(229, n));
        CHECK(kronecker_symbol(-23, m * n) ==
              kronecker_symbol(-23, m) * kronecker_symbol(-23, n));
    }
}

TEST_CASE("splitting type matches the symbol") {
    FundamentalDiscriminant D(-23);
    CHECK(splitting_type(D, 2) == SplittingType::Split);
    CHECK(splitting_type(D, 5) == SplittingType::Inert);
    CHECK(splitting_type(D, 23) == SplittingType::Ramified);
    CHECK(splitting_type(FundamentalDiscriminant(2089), 2) == SplittingType::Split);
    CHECK(splitting_type(FundamentalDiscriminant(229), 2) == SplittingType::Inert);
}

TEST_CASE("class number h(-23) = 3 against the exhaustive oracle") {
    auto G = class_group(FundamentalDiscriminant(-23));
    CHECK(G->order() == 3);
    auto oracle = definite_reduced_oracle(-23);
    CHECK(oracle.size() == 3);
    for (const auto& f : G->classes()) CHECK(oracle.count(f) == 1);
}

TEST_CASE("imaginary class numbers against the oracle up to 500") {
    for (i64 D = -3; D >= -500; --D) {
        if (!is_fundamental_discriminant(D)) continue;
        auto G = class_group(FundamentalDiscriminant(D));
        CHECK(G->order() == i64(definite_reduced_oracle(D).size()));
    }
}

TEST_CASE("group axioms and table consistency") {
    for (i64 Dv : {-23, -47, -71, -231, -479, 229, 2089}) {
        auto G = class_group(FundamentalDiscriminant(Dv));
        i64 h = G->order();
        for (i64 i = 0; i < h; ++i) {
            CHECK(G->mul(0, i) == i); // identity
            CHECK(G->mul(i, G->inverse(i)) == 0);
            for (i64 j = 0; j < h; ++j) {
                CHECK(G->mul(i, j) == G->mul(j, i)); // abelian
                for (i64 k = 0; k < h; ++k)
                    CHECK(G->mul(G->mul(i, j), k) == G->mul(i, G->mul(j, k)));
            }
        }
        // cyclic decomposition covers the group exactly once
        i64 prod = 1;
        for (auto [gen, ord] : G->cyclic_decomposition()) prod *= ord;
        CHECK(prod == h);
    }
}

TEST_CASE("composition respects the discriminant and reduction is idempotent") {
    std::mt19937_64 rng(99);
    for (i64 Dv : {-23, -404, 229, 2089}) {
        auto G = class_group(FundamentalDiscriminant(Dv));
        for (const auto& f : G->classes()) {
            CHECK(f.discriminant() == Dv);
            CHECK(reduce_form(f) == f);
            for (const auto& g : G->classes())
                CHECK(compose(f, g).discriminant() == Dv);
        }
    }
}

TEST_CASE("prime forms: random split primes land in the group") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<i64> pick(3, 2000);
    for (i64 Dv : {-23, -231, 229}) {
        FundamentalDiscriminant D(Dv);
        auto G = class_group(D);
        int found = 0;
        while (found < 100) {
            i64 l = pick(rng);
            if (!is_prime(l) || splitting_type(D, l) != SplittingType::Split)
                continue;
            ++found;
            BinaryQuadraticForm pf = prime_form(D, l);
            CHECK(pf.a == l);
            CHECK(pf.b >= 0);
            CHECK(pf.b < 2 * l);
            CHECK(mod_reduce(pf.b * pf.b - Dv, 4 * l) == 0);
            CHECK(pf.discriminant() == Dv);
            G->class_of(pf); // must resolve without throwing
            // conjugate prime multiplies to the principal class
            i64 bc = mod_reduce(-pf.b, 2 * l);
            i64 c1 = G->class_of(pf);
            i64 c2 = G->class_of({l, bc, (bc * bc - Dv) / (4 * l)});
            CHECK(G->mul(c1, c2) == 0);
        }
    }
}

TEST_CASE("worked composition values for D = -23") {
    auto G = class_group(FundamentalDiscriminant(-23));
    BinaryQuadraticForm A{2, 1, 3}, B{2, -1, 3}, P{1, 1, 6};
    CHECK(compose(A, A) == B);
    CHECK(compose(A, B) == P);
    CHECK(compose(B, B) == A);
    CHECK(G->classes()[0] == P);
}

TEST_CASE("narrow class groups of real fields") {
    CHECK(class_group(FundamentalDiscriminant(229))->order() == 3);
    CHECK(class_group(FundamentalDiscriminant(2089))->order() == 3);
    CHECK(class_group(FundamentalDiscriminant(5))->order() == 1);
    CHECK(class_group(FundamentalDiscriminant(8))->order() == 1);
    CHECK(class_group(FundamentalDiscriminant(12))->order() == 2); // norm +1 unit
}

TEST_CASE("fundamental unit norms via continued fractions") {
    CHECK(fundamental_unit_norm(FundamentalDiscriminant(5)) == -1);
    CHECK(fundamental_unit_norm(FundamentalDiscriminant(8)) == -1);
    CHECK(fundamental_unit_norm(FundamentalDiscriminant(12)) == 1);
    CHECK(fundamental_unit_norm(FundamentalDiscriminant(13)) == -1);
    CHECK(fundamental_unit_norm(FundamentalDiscriminant(21)) == 1);
    CHECK(fundamental_unit_norm(FundamentalDiscriminant(229)) == -1);
    CHECK(fundamental_unit_norm(FundamentalDiscriminant(2089)) == -1);
    CHECK_THROWS_AS(fundamental_unit_norm(FundamentalDiscriminant(-23)),
                    ImaginaryField);
}

TEST_CASE("narrow equals wide exactly when the unit norm is -1") {
    // oracle: the narrow group collapses negation-equivalent classes; the
    // sign class (-1, ...) is trivial iff some unit has norm -1
    for (i64 Dv = 5; Dv <= 500; ++Dv) {
        if (!is_fundamental_discriminant(Dv)) continue;
        FundamentalDiscriminant D(Dv);
        auto G = class_group(D);
        bool sign_trivial = G->class_of(sign_class(D)) == 0;
        CHECK(sign_trivial == (fundamental_unit_norm(D) == -1));
    }
}

TEST_CASE("inert primes have no prime form") {
    CHECK_THROWS_AS(prime_form(FundamentalDiscriminant(-23), 5), InertPrime);
    CHECK_THROWS_AS(prime_form(FundamentalDiscriminant(229), 2), InertPrime);
}
