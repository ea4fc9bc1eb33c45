#pragma once

#include <stdexcept>
#include <vector>

#include "dihedral/numutil.hpp"

namespace dihedral {

struct InsufficientPrecision : std::invalid_argument {
    InsufficientPrecision() : std::invalid_argument("q-expansion too short") {}
};

/// Truncated q-expansion a_1 q + a_2 q^2 + ... + a_B q^B.
template <class S>
struct QExpansion {
    std::vector<S> a; // a[n-1] holds a_n

    QExpansion() = default;
    explicit QExpansion(std::vector<S> coeffs) : a(std::move(coeffs)) {}

    i64 bound() const { return static_cast<i64>(a.size()); }

    const S& at(i64 n) const {
        if (n < 1 || n > bound()) throw InsufficientPrecision();
        return a[n - 1];
    }
    S& at(i64 n) {
        if (n < 1 || n > bound()) throw InsufficientPrecision();
        return a[n - 1];
    }

    QExpansion truncated(i64 B) const {
        if (B > bound()) throw InsufficientPrecision();
        return QExpansion(std::vector<S>(a.begin(), a.begin() + B));
    }

    bool operator==(const QExpansion& o) const { return a == o.a; }
};

} // namespace dihedral
