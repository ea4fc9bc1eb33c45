#include "dihedral/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace dihedral {

namespace {

void poly_trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// exact division, q = f / g; g monic (or +-1 leading), remainder must vanish
IntPoly poly_divide_exact(IntPoly f, const IntPoly& g) {
    IntPoly q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, 0);
    i64 lead = g.back();
    for (i64 i = static_cast<i64>(f.size()) - 1;
         i >= static_cast<i64>(g.size()) - 1; --i) {
        if (f[i] == 0) continue;
        if (f[i] % lead != 0) throw std::logic_error("poly_divide_exact: not exact");
        i64 c = f[i] / lead;
        i64 shift = i - (static_cast<i64>(g.size()) - 1);
        q[shift] = c;
        for (size_t j = 0; j < g.size(); ++j) f[shift + j] -= c * g[j];
    }
    poly_trim(f);
    if (!f.empty()) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return q;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

i64 euler_phi(i64 m) {
    i64 r = m;
    for (auto [p, e] : factorize(m)) r -= r / p;
    return m == 1 ? 1 : r;
}

} // namespace

IntPoly cyclotomic_poly(i64 m) {
    if (m < 1) throw std::domain_error("cyclotomic_poly: m >= 1 required");
    // x^m - 1 divided by the product of Phi_d over proper divisors d of m
    IntPoly num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    IntPoly den{1};
    for (i64 d = 1; d < m; ++d) {
        if (m % d == 0) den = poly_mul(den, cyclotomic_poly(d));
    }
    return poly_divide_exact(std::move(num), den);
}

CycModulus::CycModulus(i64 m) : m_(m), min_poly_(cyclotomic_poly(m)) {
    phi_ = static_cast<i64>(min_poly_.size()) - 1;
    if (phi_ != (m_ == 1 ? 1 : euler_phi(m_)))
        throw std::logic_error("CycModulus: degree mismatch");
}

CycModulusPtr cyc_modulus(i64 m) {
    static std::map<i64, CycModulusPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto ptr = std::make_shared<const CycModulus>(m);
    cache[m] = ptr;
    return ptr;
}

CycElt::CycElt(CycModulusPtr mod, IntPoly coeffs)
    : mod_(std::move(mod)), coeffs_(std::move(coeffs)) {
    const IntPoly& mp = mod_->min_poly();
    i64 deg = mod_->degree();
    // reduce modulo the monic min_poly
    for (i64 i = static_cast<i64>(coeffs_.size()) - 1; i >= deg; --i) {
        i64 c = coeffs_[i];
        if (c == 0) continue;
        coeffs_[i] = 0;
        for (i64 j = 0; j < deg; ++j) coeffs_[i - deg + j] -= c * mp[j];
    }
    coeffs_.resize(deg, 0);
}

CycElt CycElt::from_int(CycModulusPtr mod, i64 n) {
    IntPoly c{n};
    return CycElt(std::move(mod), std::move(c));
}

CycElt CycElt::zeta_power(CycModulusPtr mod, i64 k) {
    i64 m = mod->m();
    k = mod_reduce(k, m);
    IntPoly c(k + 1, 0);
    c[k] = 1;
    return CycElt(std::move(mod), std::move(c));
}

bool CycElt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](i64 c) { return c == 0; });
}

bool CycElt::is_int(i64 n) const { return *this == from_int(mod_, n); }

void CycElt::check_same(const CycElt& o) const {
    if (!mod_ || !o.mod_ || !(*mod_ == *o.mod_)) throw ModulusMismatch();
}

CycElt CycElt::operator+(const CycElt& o) const {
    check_same(o);
    IntPoly c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return CycElt(mod_, std::move(c));
}

CycElt CycElt::operator-(const CycElt& o) const {
    check_same(o);
    IntPoly c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return CycElt(mod_, std::move(c));
}

CycElt CycElt::operator*(const CycElt& o) const {
    check_same(o);
    return CycElt(mod_, poly_mul(coeffs_, o.coeffs_));
}

CycElt CycElt::operator-() const {
    IntPoly c = coeffs_;
    for (auto& x : c) x = -x;
    return CycElt(mod_, std::move(c));
}

CycElt CycElt::operator*(i64 n) const {
    IntPoly c = coeffs_;
    for (auto& x : c) x *= n;
    return CycElt(mod_, std::move(c));
}

bool CycElt::operator==(const CycElt& o) const {
    check_same(o);
    return coeffs_ == o.coeffs_;
}

namespace {

using ModPoly = std::vector<i64>; // little-endian, entries in [0, p)

void mp_trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = mod_reduce(c[i + j] + a[i] * b[j], p);
    }
    mp_trim(c);
    return c;
}

// remainder of f modulo monic g
ModPoly mp_rem(ModPoly f, const ModPoly& g, i64 p) {
    i64 dg = static_cast<i64>(g.size()) - 1;
    for (i64 i = static_cast<i64>(f.size()) - 1; i >= dg; --i) {
        i64 c = f[i];
        if (c == 0) continue;
        for (i64 j = 0; j <= dg; ++j)
            f[i - dg + j] = mod_reduce(f[i - dg + j] - c * g[j], p);
    }
    f.resize(std::min<size_t>(f.size(), dg));
    mp_trim(f);
    return f;
}

bool mp_divides(const ModPoly& g, const ModPoly& f, i64 p) {
    return mp_rem(f, g, p).empty();
}

// smallest monic irreducible degree-d factor of f, trying candidates in
// coefficient order from the top degree down
ModPoly smallest_irreducible_factor(const ModPoly& f, i64 p, i64 d) {
    std::vector<i64> digits(d, 0); // coefficients c_{d-1}, ..., c_0
    for (;;) {
        ModPoly cand(d + 1, 0);
        cand[d] = 1;
        for (i64 i = 0; i < d; ++i) cand[d - 1 - i] = digits[i];
        if (mp_divides(cand, f, p)) {
            // irreducibility is automatic: f = Phi_m mod p factors into
            // distinct irreducibles all of degree d = ord_m(p)
            return cand;
        }
        i64 i = d - 1;
        while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
        if (i < 0) throw std::logic_error("no factor of expected degree");
        ++digits[i];
    }
}

i64 mult_order_mod(i64 p, i64 m) {
    if (m == 1) return 1;
    i64 x = mod_reduce(p, m), acc = x, d = 1;
    while (acc != 1) {
        acc = mod_reduce(acc * x, m);
        ++d;
    }
    return d;
}

} // namespace

ResidueField::ResidueField(i64 m, i64 p) : mod_(cyc_modulus(m)), p_(p) {
    if (std::gcd(m, p) != 1) throw NonCoprimeModulus();
    ModPoly f;
    for (i64 c : mod_->min_poly()) f.push_back(mod_reduce(c, p));
    mp_trim(f);
    i64 d = mult_order_mod(p, m);
    factor_ = smallest_irreducible_factor(f, p, d);
}

ResidueFieldPtr residue_field(i64 m, i64 p) {
    static std::map<std::pair<i64, i64>, ResidueFieldPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ptr = std::make_shared<const ResidueField>(m, p);
    cache[key] = ptr;
    return ptr;
}

ResElt::ResElt(ResidueFieldPtr field, std::vector<i64> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    i64 p = field_->p();
    for (auto& c : coeffs_) c = mod_reduce(c, p);
    coeffs_ = mp_rem(std::move(coeffs_), field_->factor(), p);
    coeffs_.resize(field_->degree(), 0);
}

ResElt ResElt::from_int(ResidueFieldPtr field, i64 n) {
    return ResElt(std::move(field), {n});
}

bool ResElt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](i64 c) { return c == 0; });
}

bool ResElt::is_one() const { return *this == from_int(field_, 1); }

void ResElt::check_same(const ResElt& o) const {
    if (!field_ || !o.field_ || !(*field_ == *o.field_)) throw ModulusMismatch();
}

ResElt ResElt::operator+(const ResElt& o) const {
    check_same(o);
    std::vector<i64> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return ResElt(field_, std::move(c));
}

ResElt ResElt::operator-(const ResElt& o) const {
    check_same(o);
    std::vector<i64> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return ResElt(field_, std::move(c));
}

ResElt ResElt::operator*(const ResElt& o) const {
    check_same(o);
    return ResElt(field_, mp_mul(coeffs_, o.coeffs_, field_->p()));
}

ResElt ResElt::operator*(i64 n) const {
    std::vector<i64> c = coeffs_;
    n = mod_reduce(n, field_->p());
    for (auto& x : c) x *= n;
    return ResElt(field_, std::move(c));
}

ResElt ResElt::operator-() const {
    std::vector<i64> c = coeffs_;
    for (auto& x : c) x = -x;
    return ResElt(field_, std::move(c));
}

ResElt ResElt::pow(i64 e) const {
    if (e < 0) return inverse().pow(-e);
    ResElt r = from_int(field_, 1);
    ResElt b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

ResElt ResElt::inverse() const {
    if (is_zero()) throw std::domain_error("ResElt: zero has no inverse");
    i64 q = 1;
    for (i64 i = 0; i < field_->degree(); ++i) q *= field_->p();
    return pow(q - 2); // x^(q-1) = 1 in the unit group
}

bool ResElt::operator==(const ResElt& o) const {
    check_same(o);
    return coeffs_ == o.coeffs_;
}

i64 ResElt::mult_order() const {
    if (is_zero()) throw std::domain_error("ResElt: order of zero");
    ResElt acc = *this;
    i64 d = 1;
    while (!acc.is_one()) {
        acc = acc * *this;
        ++d;
    }
    return d;
}

ResElt reduce_mod_P(const CycElt& a, const ResidueFieldPtr& F) {
    if (!(*a.modulus() == *F->modulus())) throw ModulusMismatch();
    return ResElt(F, a.coeffs());
}

} // namespace dihedral
