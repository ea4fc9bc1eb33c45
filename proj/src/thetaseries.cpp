#include "dihedral/thetaseries.hpp"

#include <map>

namespace dihedral {

namespace {

// the two prime-form roots above a split prime, each in [0, 2l)
std::pair<i64, i64> split_roots(const FundamentalDiscriminant& D, i64 l) {
    BinaryQuadraticForm f = prime_form(D, l);
    i64 b = f.b;
    i64 conj = mod_reduce(-b, 2 * l);
    return {b, conj};
}

} // namespace

std::vector<IdealDesc> ideals_of_norm(const FundamentalDiscriminant& D,
                                      const FormClassGroupPtr& group, i64 n) {
    if (n < 1) throw std::domain_error("ideals_of_norm: n >= 1");
    std::vector<IdealDesc> out{{{}, 0}}; // unit ideal
    for (auto [l, e] : factorize(n)) {
        std::vector<std::pair<std::vector<PrimeIdealChoice>, i64>> local;
        switch (splitting_type(D, l)) {
            case SplittingType::Split: {
                auto [b1, b2] = split_roots(D, l);
                i64 c1 = group->class_of(
                    {l, b1, (b1 * b1 - D.D) / (4 * l)});
                i64 c2 = group->inverse(c1);
                for (i64 i = 0; i <= e; ++i) {
                    std::vector<PrimeIdealChoice> fac;
                    i64 cls = 0;
                    if (i > 0) fac.push_back({l, SplittingType::Split, b1, i});
                    if (e - i > 0)
                        fac.push_back({l, SplittingType::Split, b2, e - i});
                    for (i64 k = 0; k < i; ++k) cls = group->mul(cls, c1);
                    for (i64 k = 0; k < e - i; ++k) cls = group->mul(cls, c2);
                    local.push_back({std::move(fac), cls});
                }
                break;
            }
            case SplittingType::Inert: {
                if (e % 2 != 0) return {}; // no ideal of this norm
                std::vector<PrimeIdealChoice> fac;
                if (e > 0) fac.push_back({l, SplittingType::Inert, 0, e / 2});
                local.push_back({std::move(fac), 0}); // (l)^{e/2} is principal
                break;
            }
            case SplittingType::Ramified: {
                BinaryQuadraticForm f = prime_form(D, l);
                i64 c = group->class_of(f);
                std::vector<PrimeIdealChoice> fac{
                    {l, SplittingType::Ramified, f.b, e}};
                i64 cls = 0;
                for (i64 k = 0; k < e; ++k) cls = group->mul(cls, c);
                local.push_back({std::move(fac), cls});
                break;
            }
        }
        std::vector<IdealDesc> next;
        for (const auto& id : out) {
            for (const auto& [fac, cls] : local) {
                IdealDesc d = id;
                d.factors.insert(d.factors.end(), fac.begin(), fac.end());
                d.class_index = group->mul(d.class_index, cls);
                next.push_back(std::move(d));
            }
        }
        out = std::move(next);
    }
    return out;
}

IdealCharacter::IdealCharacter(FundamentalDiscriminant D, ClassCharacter base)
    : D_(D), base_(std::move(base)) {}

IdealCharacter::IdealCharacter(FundamentalDiscriminant D, ClassCharacter base,
                               TwistFn twist, i64 aux_prime, i64 aux_root)
    : D_(D),
      base_(std::move(base)),
      twist_(std::move(twist)),
      aux_prime_(aux_prime),
      aux_root_(aux_root) {}

CycElt IdealCharacter::value_prime(i64 l, SplittingType type, i64 root) const {
    const auto& ring = base_.value_ring();
    if (twisted() && l == aux_prime_ && type == SplittingType::Split &&
        root == aux_root_)
        return CycElt::from_int(ring, 0); // divides the conductor
    i64 k = 0;
    if (type != SplittingType::Inert) {
        i64 cls = base_.group()->class_of(
            {l, root, static_cast<i64>((static_cast<i128>(root) * root - D_.D) /
                                       (4 * static_cast<i128>(l)))});
        k = base_.value_exponent(cls);
    } // inert: (l) is principal, chi part is 1
    int sign = twist_ ? twist_(l, type, root) : +1;
    return CycElt::zeta_power(ring, k) * sign;
}

QExpansion<CycElt> theta_coeffs(const IdealCharacter& chr, i64 B) {
    const auto& D = chr.disc();
    if (D.real() && !chr.twisted()) throw UnsupportedSignature();
    if (D.D == -3 || D.D == -4) throw SmallDiscriminant();
    const auto& ring = chr.base().value_ring();
    CycElt zero = CycElt::from_int(ring, 0);
    CycElt one = CycElt::from_int(ring, 1);

    auto spf = spf_sieve(static_cast<int>(B));

    // local coefficient of l^e, cached as a growing power table per prime
    struct Local {
        SplittingType type;
        CycElt v1, v2;                // split: the two prime values
        std::vector<CycElt> coeffs;   // coeffs[e] = local coefficient of l^e
    };
    std::map<i64, Local> locals;
    auto local_coeff = [&](i64 l, i64 e) -> const CycElt& {
        auto it = locals.find(l);
        if (it == locals.end()) {
            Local loc;
            loc.type = splitting_type(D, l);
            if (loc.type == SplittingType::Split) {
                auto [b1, b2] = split_roots(D, l);
                loc.v1 = chr.value_prime(l, loc.type, b1);
                loc.v2 = chr.value_prime(l, loc.type, b2);
            } else if (loc.type == SplittingType::Inert) {
                loc.v1 = chr.value_prime(l, loc.type, 0);
            } else {
                loc.v1 = chr.value_prime(l, loc.type, prime_form(D, l).b);
            }
            loc.coeffs.push_back(one);
            it = locals.emplace(l, std::move(loc)).first;
        }
        Local& loc = it->second;
        while (static_cast<i64>(loc.coeffs.size()) <= e) {
            i64 r = static_cast<i64>(loc.coeffs.size());
            switch (loc.type) {
                case SplittingType::Split: {
                    // sum over i of v1^i v2^{r-i}
                    CycElt s = zero;
                    CycElt p1 = one;
                    for (i64 i = 0; i <= r; ++i) {
                        CycElt p2 = one;
                        for (i64 j = 0; j < r - i; ++j) p2 = p2 * loc.v2;
                        s = s + p1 * p2;
                        p1 = p1 * loc.v1;
                    }
                    loc.coeffs.push_back(s);
                    break;
                }
                case SplittingType::Inert:
                    loc.coeffs.push_back(r % 2 != 0 ? zero
                                                    : loc.coeffs[r - 2] * loc.v1);
                    break;
                case SplittingType::Ramified:
                    loc.coeffs.push_back(loc.coeffs[r - 1] * loc.v1);
                    break;
            }
        }
        return loc.coeffs[e];
    };

    std::vector<CycElt> a(B, zero);
    a[0] = one;
    for (i64 n = 2; n <= B; ++n) {
        CycElt v = one;
        i64 rest = n;
        bool nonzero = true;
        while (rest > 1 && nonzero) {
            i64 l = spf[rest];
            i64 e = 0;
            while (rest % l == 0) {
                rest /= l;
                ++e;
            }
            const CycElt& lc = local_coeff(l, e);
            if (lc.is_zero()) {
                nonzero = false;
                break;
            }
            v = v * lc;
        }
        a[n - 1] = nonzero ? v : zero;
    }
    return QExpansion<CycElt>(std::move(a));
}

QExpansion<ResElt> reduce_qexp(const QExpansion<CycElt>& f,
                               const ResidueFieldPtr& F) {
    std::vector<ResElt> a;
    a.reserve(f.a.size());
    for (const auto& c : f.a) a.push_back(reduce_mod_P(c, F));
    return QExpansion<ResElt>(std::move(a));
}

} // namespace dihedral
