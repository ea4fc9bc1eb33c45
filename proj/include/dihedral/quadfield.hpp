#pragma once

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "dihedral/numutil.hpp"

namespace dihedral {

struct NotFundamental : std::domain_error {
    NotFundamental() : std::domain_error("not a fundamental discriminant") {}
};
struct InertPrime : std::domain_error {
    InertPrime() : std::domain_error("prime is inert") {}
};
struct ImaginaryField : std::domain_error {
    ImaginaryField() : std::domain_error("operation needs a real field") {}
};
struct BoundExceeded : std::domain_error {
    BoundExceeded() : std::domain_error("discriminant bound exceeded") {}
};

bool is_fundamental_discriminant(i64 D);

struct FundamentalDiscriminant {
    i64 D;

    explicit FundamentalDiscriminant(i64 d) : D(d) {
        if (!is_fundamental_discriminant(d)) throw NotFundamental();
    }
    bool imaginary() const { return D < 0; }
    bool real() const { return D > 0; }
};

// Kronecker symbol (D/n), extended multiplicatively; n may be any integer
int kronecker_symbol(i64 D, i64 n);

enum class SplittingType { Split, Inert, Ramified };

SplittingType splitting_type(const FundamentalDiscriminant& D, i64 l);

struct BinaryQuadraticForm {
    i64 a = 0, b = 0, c = 0;

    i64 discriminant() const { return b * b - 4 * a * c; }
    bool primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }

    bool operator==(const BinaryQuadraticForm& o) const {
        return a == o.a && b == o.b && c == o.c;
    }
    bool operator<(const BinaryQuadraticForm& o) const {
        return std::array<i64, 3>{a, b, c} < std::array<i64, 3>{o.a, o.b, o.c};
    }
};

// canonical class representative; D<0: the unique reduced form, D>0: the
// lexicographically smallest form on the reduction cycle
BinaryQuadraticForm reduce_form(const BinaryQuadraticForm& f);

// Dirichlet composition followed by canonicalization
BinaryQuadraticForm compose(const BinaryQuadraticForm& f,
                            const BinaryQuadraticForm& g);

class FormClassGroup {
public:
    static constexpr i64 kDefaultBound = 10000000;

    explicit FormClassGroup(const FundamentalDiscriminant& D,
                            i64 bound = kDefaultBound);

    const FundamentalDiscriminant& disc() const { return D_; }
    i64 order() const { return static_cast<i64>(classes_.size()); }
    const std::vector<BinaryQuadraticForm>& classes() const { return classes_; }
    const BinaryQuadraticForm& principal() const { return classes_[0]; }

    // index into classes() of a canonical representative
    i64 index_of(const BinaryQuadraticForm& canonical) const;
    i64 class_of(const BinaryQuadraticForm& f) const; // reduces first
    i64 mul(i64 i, i64 j) const { return table_[i][j]; }
    i64 inverse(i64 i) const;
    i64 class_order(i64 i) const;

    // cyclic factors (generator index, order); their direct product is the
    // whole group, primary (Sylow-wise) decomposition
    const std::vector<std::pair<i64, i64>>& cyclic_decomposition() const {
        return cyclic_;
    }
    // coordinates of class i with respect to the cyclic factors
    const std::vector<i64>& coords(i64 i) const { return coords_[i]; }

private:
    void build_decomposition();

    FundamentalDiscriminant D_;
    std::vector<BinaryQuadraticForm> classes_; // classes_[0] principal
    std::vector<std::vector<i64>> table_;
    std::vector<std::pair<i64, i64>> cyclic_;
    std::vector<std::vector<i64>> coords_;
};

using FormClassGroupPtr = std::shared_ptr<const FormClassGroup>;

FormClassGroupPtr class_group(const FundamentalDiscriminant& D,
                              i64 bound = FormClassGroup::kDefaultBound);

// canonical class of a prime ideal above l (split or ramified l only)
BinaryQuadraticForm prime_to_class(const FundamentalDiscriminant& D, i64 l);

// the prime form (l, b, c) itself with 0 <= b < 2l, before canonicalization;
// b mod l is the root of x^2 = D attached to this choice of prime ideal
BinaryQuadraticForm prime_form(const FundamentalDiscriminant& D, i64 l);

// norm of the fundamental unit of the maximal order, D > 0
int fundamental_unit_norm(const FundamentalDiscriminant& D);

// continued-fraction period length of the maximal-order generator
i64 cf_period(const FundamentalDiscriminant& D);

// narrow class of the "negative principal" form (-1, b, c); trivial exactly
// when the fundamental unit has norm -1
BinaryQuadraticForm sign_class(const FundamentalDiscriminant& D);

} // namespace dihedral
