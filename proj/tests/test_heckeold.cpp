#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "dihedral/heckeold.hpp"
#include "dihedral/thetaseries.hpp"

using namespace dihedral;

#include "bipoly.hpp"

namespace {

QExpansion<CycElt> scale(const QExpansion<CycElt>& f, i64 n) {
    std::vector<CycElt> a;
    a.reserve(f.a.size());
    for (const auto& c : f.a) a.push_back(c * n);
    return QExpansion<CycElt>(std::move(a));
}

// T_l for prime l at p-free level, weight 1: a_m -> a_{ml} + eps(l) a_{m/l}
QExpansion<CycElt> tl_action(const QExpansion<CycElt>& f, i64 l, const CycElt& eps_l,
                             i64 B) {
    if (B * l > f.bound()) throw InsufficientPrecision();
    std::vector<CycElt> a;
    a.reserve(B);
    for (i64 m = 1; m <= B; ++m) {
        CycElt v = f.at(m * l);
        if (m % l == 0) v = v + eps_l * f.at(m / l);
        a.push_back(v);
    }
    return QExpansion<CycElt>(std::move(a));
}

} // namespace

TEST_CASE("tp_matrix layout") {
    auto Z = cyc_modulus(1);
    auto mk = [&](i64 n) { return CycElt::from_int(Z, n); };
    auto blk = tp_matrix(mk(7), mk(-1), 3, 1, 2, 3);
    REQUIRE(blk.matrix.size() == 4);
    CHECK(blk.beta.is_int(-4)); // eps * p^{k-1} = -1 * 4
    CHECK(blk.matrix[0][0].is_int(7));
    CHECK(blk.matrix[1][0].is_int(4));
    for (int i = 0; i < 3; ++i) CHECK(blk.matrix[i][i + 1].is_int(1));
    for (int j = 0; j < 4; ++j) CHECK(blk.matrix[3][j].is_zero());
    // delta = 0 kills beta
    CHECK(tp_matrix(mk(7), mk(-1), 3, 0, 2, 3).beta.is_zero());
}

TEST_CASE("characteristic polynomial x^{r-1}(x^2 - a x + b), symbolically") {
    using bivar::BiPoly;
    BiPoly a = BiPoly::var_a(), b = BiPoly::var_b();
    for (i64 r = 1; r <= 5; ++r) {
        // p = 1, k = 2 makes beta = eps = b exactly
        auto blk = tp_matrix(a, b, 2, 1, 1, r);
        auto cp = char_poly(blk);
        REQUIRE(cp.size() == size_t(r + 2));
        for (i64 i = 0; i < r - 1; ++i) CHECK(cp[i] == BiPoly{});
        CHECK(cp[r - 1] == b);
        CHECK(cp[r] == BiPoly{} - a);
        CHECK(cp[r + 1] == bivar::ring_one(a));
    }
}

TEST_CASE("characteristic polynomial, integer instance") {
    auto Z = cyc_modulus(1);
    auto mk = [&](i64 n) { return CycElt::from_int(Z, n); };
    auto cp = char_poly(tp_matrix(mk(3), mk(1), 2, 1, 5, 2)); // beta = 5
    REQUIRE(cp.size() == 4);
    CHECK(cp[0].is_int(0));
    CHECK(cp[1].is_int(5));
    CHECK(cp[2].is_int(-3));
    CHECK(cp[3].is_int(1));
}

TEST_CASE("matrix action matches U_p on embedded oldforms") {
    FundamentalDiscriminant D(-23);
    auto chi = make_character(class_group(D), {1});
    DihedralRep rep(D, chi, 2);
    i64 p = 2, r = 3, B = 200;
    auto f = theta_coeffs(IdealCharacter(D, chi), B * 16);
    CycElt a_p = f.at(p);
    CycElt eps_p = frob_det(rep, p);
    auto blk = tp_matrix(a_p, eps_p, 1, 1, p, r);

    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<i64> pick(-5, 5);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<i64> coords(r + 1);
        for (auto& c : coords) c = pick(rng);
        std::vector<QExpansion<CycElt>> fs;
        for (i64 i = 0; i <= r; ++i) fs.push_back(scale(f, coords[i]));
        auto emb = degeneracy_embed(fs, p, B * p);
        auto lhs = tp_action_level_divisible(emb, p, B);
        // M acts on coordinate columns
        std::vector<QExpansion<CycElt>> gs;
        for (i64 i = 0; i <= r; ++i) {
            // g_i = sum_j M[i][j] coords[j] f
            QExpansion<CycElt> g = scale(f, 0);
            for (i64 j = 0; j <= r; ++j)
                for (i64 n = 1; n <= g.bound(); ++n)
                    g.at(n) = g.at(n) + blk.matrix[i][j] * f.at(n) * coords[j];
            gs.push_back(std::move(g));
        }
        auto rhs = degeneracy_embed(gs, p, B);
        for (i64 n = 1; n <= B; ++n) CHECK(lhs.at(n) == rhs.at(n));
    }
}

TEST_CASE("stabilization kills a_p and keeps the other primes") {
    FundamentalDiscriminant D(-23);
    auto chi = make_character(class_group(D), {1});
    DihedralRep rep(D, chi, 2);
    i64 p = 2, B = 200;
    auto f = theta_coeffs(IdealCharacter(D, chi), B * p * p);
    CycElt a_p = f.at(p);
    CycElt eps_p = frob_det(rep, p);
    auto g = ap_zero_stabilize(f, a_p, eps_p, 1, p, B * p);
    CHECK(g.at(p).is_zero());
    for (i64 l : primes_up_to(B))
        if (l != p) CHECK(g.at(l) == f.at(l));
    // the stabilized form is in the kernel of U_p
    auto upg = tp_action_level_divisible(g, p, B);
    for (i64 n = 1; n <= B; ++n) CHECK(upg.at(n).is_zero());
}

TEST_CASE("degeneracy embedding commutes with T_l, l coprime to p") {
    FundamentalDiscriminant D(-23);
    auto chi = make_character(class_group(D), {1});
    i64 p = 2, B = 40;
    auto f = theta_coeffs(IdealCharacter(D, chi), 4000);
    std::vector<QExpansion<CycElt>> fs{f, scale(f, 2), scale(f, -1)};
    auto emb = degeneracy_embed(fs, p, 2000);
    for (i64 l : primes_up_to(50)) {
        if (l == p || l == 23) continue;
        CycElt eps_l = CycElt::from_int(chi.value_ring(), kronecker_symbol(-23, l));
        auto lhs = tl_action(emb, l, eps_l, B);
        std::vector<QExpansion<CycElt>> tfs;
        for (const auto& fi : fs) tfs.push_back(tl_action(fi, l, eps_l, B));
        auto rhs = degeneracy_embed(tfs, p, B);
        for (i64 n = 1; n <= B; ++n) CHECK(lhs.at(n) == rhs.at(n));
    }
}

TEST_CASE("embedded translates are linearly independent") {
    FundamentalDiscriminant D(-23);
    auto chi = make_character(class_group(D), {1});
    i64 p = 2, r = 4;
    auto f = theta_coeffs(IdealCharacter(D, chi), 1 << (r + 1));
    // coefficient matrix at q^{p^j} is triangular with unit diagonal
    for (i64 i = 0; i <= r; ++i) {
        std::vector<QExpansion<CycElt>> basis(r + 1, scale(f, 0));
        basis[i] = f;
        auto emb = degeneracy_embed(basis, p, 1 << (r + 1));
        for (i64 j = 0; j <= r; ++j) {
            i64 pj = 1;
            for (i64 t = 0; t < j; ++t) pj *= p;
            if (j < i)
                CHECK(emb.at(pj).is_zero());
            else if (j == i)
                CHECK(emb.at(pj).is_int(1));
        }
    }
}

TEST_CASE("precision violations fail loudly") {
    FundamentalDiscriminant D(-23);
    auto chi = make_character(class_group(D), {1});
    auto f = theta_coeffs(IdealCharacter(D, chi), 100);
    CHECK_THROWS_AS(tp_action_level_divisible(f, 2, 51), InsufficientPrecision);
    CHECK_THROWS_AS(ap_zero_stabilize(f, f.at(2), f.at(1), 1, 2, 101),
                    InsufficientPrecision);
    std::vector<QExpansion<CycElt>> fs{f, f};
    CHECK_THROWS_AS(degeneracy_embed(fs, 2, 300), InsufficientPrecision);
}
