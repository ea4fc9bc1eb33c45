#pragma once

#include <vector>

#include "dihedral/cyclotomic.hpp"
#include "dihedral/qexp.hpp"

namespace dihedral {

// multiplicative identity of the ring an element lives in; overload for any
// scalar used with the oldform operators
inline CycElt ring_one(const CycElt& s) { return CycElt::from_int(s.modulus(), 1); }
inline ResElt ring_one(const ResElt& s) { return ResElt::from_int(s.field(), 1); }

/// (f_0, ..., f_r) |-> sum of f_i(q^{p^i}), truncated at B.
template <class S>
QExpansion<S> degeneracy_embed(const std::vector<QExpansion<S>>& fs, i64 p,
                               i64 B) {
    if (fs.empty()) throw std::invalid_argument("degeneracy_embed: empty input");
    S zero = fs[0].at(1) - fs[0].at(1);
    std::vector<S> a(B, zero);
    i64 pi = 1;
    for (const auto& f : fs) {
        for (i64 n = pi; n <= B; n += pi) {
            if (n / pi > f.bound()) throw InsufficientPrecision();
            a[n - 1] = a[n - 1] + f.at(n / pi);
        }
        pi *= p;
    }
    return QExpansion<S>(std::move(a));
}

/// T_p block on the span of f(q), f(q^p), ..., f(q^{p^r}). The matrix acts on
/// coordinate columns: first column (a_p, -beta, 0, ..., 0), superdiagonal of
/// ones, last row zero, where beta = delta p^{k-1} eps(p).
template <class S>
struct OldformBlock {
    i64 r = 0;
    S a_p;
    S beta;
    std::vector<std::vector<S>> matrix; // (r+1) x (r+1)
};

template <class S>
OldformBlock<S> tp_matrix(const S& a_p, const S& eps_p, int k, int delta, i64 p,
                          i64 r) {
    if (r < 0) throw std::invalid_argument("tp_matrix: r >= 0");
    S zero = a_p - a_p;
    S one = ring_one(a_p);
    i64 pk = 1;
    for (int i = 0; i + 1 < k; ++i) pk *= p;
    S beta = delta ? eps_p * pk : zero;
    OldformBlock<S> blk{r, a_p, beta, {}};
    blk.matrix.assign(r + 1, std::vector<S>(r + 1, zero));
    blk.matrix[0][0] = a_p;
    if (r >= 1) blk.matrix[1][0] = zero - beta;
    for (i64 i = 0; i < r; ++i) blk.matrix[i][i + 1] = one;
    return blk;
}

namespace detail {

template <class S>
using SPoly = std::vector<S>; // little-endian

template <class S>
SPoly<S> spoly_add(SPoly<S> a, const SPoly<S>& b, const S& zero) {
    if (a.size() < b.size()) a.resize(b.size(), zero);
    for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
    return a;
}

template <class S>
SPoly<S> spoly_neg(SPoly<S> a) {
    for (auto& c : a) c = (c - c) - c;
    return a;
}

template <class S>
SPoly<S> spoly_mul(const SPoly<S>& a, const SPoly<S>& b, const S& zero) {
    if (a.empty() || b.empty()) return {};
    SPoly<S> c(a.size() + b.size() - 1, zero);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return c;
}

template <class S>
SPoly<S> spoly_det(const std::vector<std::vector<SPoly<S>>>& m, const S& zero) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    SPoly<S> det;
    for (size_t i = 0; i < n; ++i) {
        std::vector<std::vector<SPoly<S>>> minor;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<SPoly<S>> row(m[j].begin() + 1, m[j].end());
            minor.push_back(std::move(row));
        }
        SPoly<S> term = spoly_mul(m[i][0], spoly_det(minor, zero), zero);
        if (i % 2 == 1) term = spoly_neg(std::move(term));
        det = spoly_add(std::move(det), term, zero);
    }
    return det;
}

} // namespace detail

/// characteristic polynomial det(xI - M), little-endian coefficients,
/// computed exactly over the scalar ring
template <class S>
std::vector<S> char_poly(const OldformBlock<S>& blk) {
    S zero = blk.a_p - blk.a_p;
    S one = ring_one(blk.a_p);
    size_t n = blk.matrix.size();
    std::vector<std::vector<detail::SPoly<S>>> m(
        n, std::vector<detail::SPoly<S>>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            detail::SPoly<S> e{zero - blk.matrix[i][j]};
            if (i == j) e.push_back(one);
            m[i][j] = std::move(e);
        }
    }
    auto det = detail::spoly_det(m, zero);
    det.resize(n + 1, zero);
    return det;
}

/// f(q) - a_p f(q^p) + p^{k-1} eps(p) f(q^{p^2}); kills the T_p eigenvalue
template <class S>
QExpansion<S> ap_zero_stabilize(const QExpansion<S>& f, const S& a_p,
                                const S& eps_p, int k, i64 p, i64 B) {
    if (B > f.bound()) throw InsufficientPrecision();
    i64 pk = 1;
    for (int i = 0; i + 1 < k; ++i) pk *= p;
    S beta = eps_p * pk;
    S zero = a_p - a_p;
    std::vector<S> a(B, zero);
    i64 p2 = p * p;
    for (i64 n = 1; n <= B; ++n) {
        S v = f.at(n);
        if (n % p == 0) v = v - a_p * f.at(n / p);
        if (n % p2 == 0) v = v + beta * f.at(n / p2);
        a[n - 1] = v;
    }
    return QExpansion<S>(std::move(a));
}

/// U_p-style action at p-divisible level: a_n of the output is a_{np}
template <class S>
QExpansion<S> tp_action_level_divisible(const QExpansion<S>& f, i64 p, i64 B) {
    if (B * p > f.bound()) throw InsufficientPrecision();
    std::vector<S> a;
    a.reserve(B);
    for (i64 n = 1; n <= B; ++n) a.push_back(f.at(n * p));
    return QExpansion<S>(std::move(a));
}

} // namespace dihedral
