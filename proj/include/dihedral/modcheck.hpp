#pragma once

#include <map>

#include "dihedral/galoisrep.hpp"
#include "dihedral/thetaseries.hpp"

namespace dihedral {

struct NonSquarefreeLevel : std::domain_error {
    NonSquarefreeLevel() : std::domain_error("level must be squarefree") {}
};
struct BadCharacteristic : std::domain_error {
    BadCharacteristic() : std::domain_error("characteristic divides the level") {}
};

/// Trace-comparison report: frob traces of the representation against the
/// coefficients of a reduced q-expansion, prime by prime.
struct ModularityReport {
    i64 checked = 0;
    std::vector<i64> mismatches;           // primes where traces disagree
    i64 epsilon_checked = 0;
    std::vector<i64> epsilon_mismatches;   // primes where eps(q) != a_q^2 - a_{q^2}
    bool clean() const { return mismatches.empty() && epsilon_mismatches.empty(); }
};

// compares reduce(frob_trace(rep, q)) with a_q(f) for primes q <= bound not
// in excluded; excluded must cover p and the primes of the conductor
ModularityReport verify_modularity(const DihedralRep& rep,
                                   const QExpansion<ResElt>& f, i64 bound,
                                   const std::vector<i64>& excluded);

bool conductor_divides_level(i64 n_rho, i64 level);

enum class ReducibilityKind {
    IrreducibleOrTrivial,
    Irreducible,
    EisensteinPattern,
    Inconsistent,
};

struct ReducibilityReport {
    ReducibilityKind kind = ReducibilityKind::Inconsistent;
    i64 character_order = 0; // set for EisensteinPattern
};

/// Heuristic reducibility classifier on sampled traces at primes l <= bound,
/// l coprime to p N: consistency with a_l = chi(l) + chi(l)^{-1} for a
/// character of (Z/p)^* (values in the prime field), else irreducible.
ReducibilityReport classify_reducible(const std::map<i64, ResElt>& traces,
                                      i64 p, i64 level, i64 sample_bound);

} // namespace dihedral
