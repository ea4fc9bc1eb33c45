#include "dihedral/modcheck.hpp"

#include <algorithm>

namespace dihedral {

ModularityReport verify_modularity(const DihedralRep& rep,
                                   const QExpansion<ResElt>& f, i64 bound,
                                   const std::vector<i64>& excluded) {
    if (bound > f.bound()) throw InsufficientPrecision();
    const auto& F = rep.residue();
    SerreInvariants si = serre_invariants(rep);
    ModularityReport rpt;
    for (i64 q : primes_up_to(bound)) {
        if (std::find(excluded.begin(), excluded.end(), q) != excluded.end())
            continue;
        ++rpt.checked;
        if (!(reduce_mod_P(frob_trace(rep, q), F) == f.at(q)))
            rpt.mismatches.push_back(q);
        if (q * q <= f.bound()) {
            // weight-1 determinant identity eps(q) = a_q^2 - a_{q^2}
            ++rpt.epsilon_checked;
            if (!(si.epsilon(q) == f.at(q) * f.at(q) - f.at(q * q)))
                rpt.epsilon_mismatches.push_back(q);
        }
    }
    return rpt;
}

bool conductor_divides_level(i64 n_rho, i64 level) {
    if (n_rho <= 0 || level <= 0)
        throw std::domain_error("conductor_divides_level: positive inputs");
    return level % n_rho == 0;
}

ReducibilityReport classify_reducible(const std::map<i64, ResElt>& traces,
                                      i64 p, i64 level, i64 sample_bound) {
    for (auto [l, e] : factorize(level))
        if (e > 1) throw NonSquarefreeLevel();
    if (level % p == 0) throw BadCharacteristic();

    std::vector<std::pair<i64, ResElt>> sample;
    for (const auto& [l, a] : traces) {
        if (l > sample_bound || l == p || level % l == 0) continue;
        sample.push_back({l, a});
    }
    if (sample.empty()) return {ReducibilityKind::Inconsistent, 0};

    if (p == 2) {
        for (const auto& [l, a] : sample)
            if (!a.is_zero()) return {ReducibilityKind::Irreducible, 0};
        return {ReducibilityKind::IrreducibleOrTrivial, 0};
    }

    // characters of (Z/p)^* take values in the prime field of the trace
    // ring: chi(l) = t^{ind(l)} for t = chi(g), g a generator of (Z/p)^*
    const auto& F = sample.front().second.field();
    i64 best_order = 0;
    i64 g = 0;
    for (i64 c = 2; c < p; ++c) {
        i64 o = 1, x = c;
        while (x != 1) {
            x = mulmod(x, c, p);
            ++o;
        }
        if (o == p - 1) {
            g = c;
            break;
        }
    }
    std::vector<i64> ind(p, 0);
    {
        i64 x = 1;
        for (i64 e = 0; e < p - 1; ++e) {
            ind[x] = e;
            x = mulmod(x, g, p);
        }
    }
    for (i64 t = 1; t < p; ++t) {
        ResElt tv = ResElt::from_int(F, t);
        bool ok = true;
        for (const auto& [l, a] : sample) {
            ResElt chi = tv.pow(ind[mod_reduce(l, p)]);
            if (!(chi + chi.inverse() == a)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            i64 o = 1, x = t;
            while (x != 1) {
                x = mulmod(x, t, p);
                ++o;
            }
            if (best_order == 0 || o < best_order) best_order = o;
        }
    }
    if (best_order > 0) return {ReducibilityKind::EisensteinPattern, best_order};
    return {ReducibilityKind::Irreducible, 0};
}

} // namespace dihedral
