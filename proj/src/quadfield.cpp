#include "dihedral/quadfield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace dihedral {

namespace {

bool squarefree(i64 n) {
    if (n < 0) n = -n;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
    }
    return n != 0;
}

} // namespace

bool is_fundamental_discriminant(i64 D) {
    if (D == 1 || D == 0) return false;
    i64 r = mod_reduce(D, 4);
    if (r == 1) return squarefree(D);
    if (r == 0) {
        i64 q = D / 4;
        i64 qr = mod_reduce(q, 4);
        return squarefree(q) && (qr == 2 || qr == 3);
    }
    return false;
}

int kronecker_symbol(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    if (v & 1) {
        i64 r = mod_reduce(a, 8);
        if (r == 3 || r == 5) result = -result;
    }
    a = mod_reduce(a, n);
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            a >>= 1;
            ++v;
        }
        if (v & 1) {
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        if ((a % 4 == 3) && (n % 4 == 3)) result = -result;
        i64 t = n % a;
        n = a;
        a = t;
    }
    return n == 1 ? result : 0;
}

SplittingType splitting_type(const FundamentalDiscriminant& D, i64 l) {
    int k = kronecker_symbol(D.D, l);
    if (k == 1) return SplittingType::Split;
    if (k == -1) return SplittingType::Inert;
    return SplittingType::Ramified;
}

namespace {

void check_form(const BinaryQuadraticForm& f) {
    if (!f.primitive()) throw std::invalid_argument("form is not primitive");
    i64 D = f.discriminant();
    if (D < 0 && f.a <= 0)
        throw std::invalid_argument("definite form must have a > 0");
    if (D == 0 || (D > 0 && is_square(D)))
        throw std::invalid_argument("degenerate discriminant");
}

BinaryQuadraticForm reduce_definite(BinaryQuadraticForm f) {
    i64 D = f.discriminant();
    for (;;) {
        if (f.b > f.a || f.b <= -f.a) {
            // shift b into (-a, a]
            i64 b = mod_reduce(f.b, 2 * f.a);
            if (b > f.a) b -= 2 * f.a;
            f.b = b;
            f.c = (f.b * f.b - D) / (4 * f.a);
        }
        if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        break;
    }
    if (f.b < 0 && (f.a == -f.b || f.a == f.c)) f.b = -f.b;
    return f;
}

bool indefinite_reduced(const BinaryQuadraticForm& f, i64 s) {
    i64 aa = f.a < 0 ? -f.a : f.a;
    return f.b >= 1 && f.b <= s && f.b >= s + 1 - 2 * aa && 2 * aa <= f.b + s;
}

// one reduction step; maps reduced forms to the next form on their cycle
BinaryQuadraticForm rho(const BinaryQuadraticForm& f, i64 D, i64 s) {
    i64 cc = f.c < 0 ? -f.c : f.c;
    i64 lo; // b' ranges over [lo, lo + 2|c| - 1]
    if (cc > s)
        lo = -cc + 1;
    else
        lo = s - 2 * cc + 1;
    i64 b = lo + mod_reduce(-f.b - lo, 2 * cc);
    i64 c = (b * b - D) / (4 * f.c);
    return {f.c, b, c};
}

BinaryQuadraticForm reduce_indefinite(BinaryQuadraticForm f) {
    i64 D = f.discriminant();
    i64 s = isqrt_floor(D);
    while (!indefinite_reduced(f, s)) f = rho(f, D, s);
    // canonical representative: lexicographic minimum over the cycle
    BinaryQuadraticForm best = f;
    BinaryQuadraticForm g = rho(f, D, s);
    while (!(g == f)) {
        if (g < best) best = g;
        g = rho(g, D, s);
    }
    return best;
}

std::vector<BinaryQuadraticForm> cycle_of(BinaryQuadraticForm f) {
    i64 D = f.discriminant();
    i64 s = isqrt_floor(D);
    std::vector<BinaryQuadraticForm> out{f};
    BinaryQuadraticForm g = rho(f, D, s);
    while (!(g == f)) {
        out.push_back(g);
        g = rho(g, D, s);
    }
    return out;
}

} // namespace

BinaryQuadraticForm reduce_form(const BinaryQuadraticForm& f) {
    check_form(f);
    return f.discriminant() < 0 ? reduce_definite(f) : reduce_indefinite(f);
}

BinaryQuadraticForm compose(const BinaryQuadraticForm& f,
                            const BinaryQuadraticForm& g) {
    check_form(f);
    check_form(g);
    i64 D = f.discriminant();
    if (D != g.discriminant())
        throw std::invalid_argument("compose: discriminant mismatch");
    i64 beta = (f.b + g.b) / 2;
    i64 u, v;
    i64 d12 = ext_gcd(f.a, g.a, u, v);
    i64 s, t;
    i64 m = ext_gcd(d12, beta, s, t);
    i64 x = s * u, y = s * v, z = t;
    i64 A = (f.a / m) * (g.a / m);
    i128 Bn = static_cast<i128>(x) * f.a * g.b +
              static_cast<i128>(y) * g.a * f.b +
              static_cast<i128>(z) * ((static_cast<i128>(f.b) * g.b + D) / 2);
    if (Bn % m != 0) throw std::logic_error("compose: B not integral");
    i128 twoA = 2 * static_cast<i128>(A);
    i128 B128 = Bn / m % twoA;
    if (B128 < 0) B128 += twoA < 0 ? -twoA : twoA;
    i64 B = static_cast<i64>(B128);
    i128 Cn = (static_cast<i128>(B) * B - D);
    if (Cn % (4 * static_cast<i128>(A)) != 0)
        throw std::logic_error("compose: C not integral");
    i64 C = static_cast<i64>(Cn / (4 * static_cast<i128>(A)));
    BinaryQuadraticForm h{A, B, C};
    if (D < 0 && h.a < 0) h = {-h.a, h.b, -h.c}; // wrong orientation cannot occur
    return reduce_form(h);
}

FormClassGroup::FormClassGroup(const FundamentalDiscriminant& D, i64 bound)
    : D_(D) {
    i64 absD = D.D < 0 ? -D.D : D.D;
    if (absD > bound) throw BoundExceeded();
    std::set<BinaryQuadraticForm> reps;
    if (D.D < 0) {
        for (i64 a = 1; 3 * a * a <= -D.D; ++a) {
            for (i64 b = -a; b <= a; ++b) {
                if (mod_reduce(b - D.D, 2) != 0) continue;
                i64 num = b * b - D.D;
                if (num % (4 * a) != 0) continue;
                i64 c = num / (4 * a);
                if (c < a) continue;
                BinaryQuadraticForm f{a, b, c};
                if (!f.primitive()) continue;
                if (f.b < 0 && (f.a == -f.b || f.a == f.c)) continue;
                reps.insert(f);
            }
        }
    } else {
        i64 s = isqrt_floor(D.D);
        std::set<BinaryQuadraticForm> reduced;
        for (i64 b = 1; b <= s; ++b) {
            if (mod_reduce(b - D.D, 2) != 0) continue;
            i64 num = b * b - D.D; // negative
            for (i64 aa = 1; 2 * aa <= b + s; ++aa) {
                if (2 * aa < s + 1 - b) continue;
                if (num % (4 * aa) != 0) continue;
                for (i64 a : {aa, -aa}) {
                    i64 c = num / (4 * a);
                    BinaryQuadraticForm f{a, b, c};
                    if (!f.primitive()) continue;
                    reduced.insert(f);
                }
            }
        }
        // group the reduction cycles into narrow classes
        std::set<BinaryQuadraticForm> seen;
        for (const auto& f : reduced) {
            if (seen.count(f)) continue;
            auto cyc = cycle_of(f);
            for (const auto& g : cyc) seen.insert(g);
            reps.insert(*std::min_element(cyc.begin(), cyc.end()));
        }
    }
    classes_.assign(reps.begin(), reps.end());
    // principal class first
    i64 b0 = mod_reduce(D.D, 2);
    BinaryQuadraticForm one = reduce_form({1, b0, (b0 * b0 - D.D) / 4});
    auto it = std::find(classes_.begin(), classes_.end(), one);
    if (it == classes_.end()) throw std::logic_error("principal class missing");
    std::rotate(classes_.begin(), it, it + 1);
    std::sort(classes_.begin() + 1, classes_.end());

    i64 h = order();
    table_.assign(h, std::vector<i64>(h, -1));
    for (i64 i = 0; i < h; ++i) {
        for (i64 j = i; j < h; ++j) {
            i64 k = index_of(compose(classes_[i], classes_[j]));
            table_[i][j] = k;
            table_[j][i] = k;
        }
    }
    build_decomposition();
}

i64 FormClassGroup::index_of(const BinaryQuadraticForm& canonical) const {
    auto it = std::find(classes_.begin(), classes_.end(), canonical);
    if (it == classes_.end())
        throw std::invalid_argument("form is not a canonical class representative");
    return it - classes_.begin();
}

i64 FormClassGroup::class_of(const BinaryQuadraticForm& f) const {
    if (f.discriminant() != D_.D)
        throw std::invalid_argument("class_of: discriminant mismatch");
    return index_of(reduce_form(f));
}

i64 FormClassGroup::inverse(i64 i) const {
    for (i64 j = 0; j < order(); ++j) {
        if (table_[i][j] == 0) return j;
    }
    throw std::logic_error("no inverse");
}

i64 FormClassGroup::class_order(i64 i) const {
    i64 x = i, n = 1;
    while (x != 0) {
        x = table_[x][i];
        ++n;
    }
    return n;
}

namespace {

// subgroup generated by the identity and a set of generators, as sorted indices
std::vector<i64> span(const std::vector<std::vector<i64>>& table,
                      const std::vector<i64>& gens) {
    std::set<i64> s{0};
    for (;;) {
        std::set<i64> next = s;
        for (i64 x : s)
            for (i64 g : gens) next.insert(table[x][g]);
        if (next.size() == s.size()) break;
        s = std::move(next);
    }
    return {s.begin(), s.end()};
}

bool extend_basis(const std::vector<std::vector<i64>>& table,
                  const std::vector<i64>& sylow,
                  const std::vector<i64>& orders,
                  std::vector<i64>& basis, i64 span_size, i64 max_order) {
    if (span_size == static_cast<i64>(sylow.size())) return true;
    auto cur = span(table, basis);
    std::set<i64> in_span(cur.begin(), cur.end());
    for (i64 want = max_order; want >= 2; --want) {
        for (i64 g : sylow) {
            if (orders[g] != want) continue;
            // require <g> to meet the current span trivially
            bool clean = true;
            i64 x = g;
            for (i64 k = 1; k < want; ++k) {
                if (in_span.count(x)) { clean = false; break; }
                x = table[x][g];
            }
            if (!clean) continue;
            basis.push_back(g);
            if (extend_basis(table, sylow, orders, basis, span_size * want, want))
                return true;
            basis.pop_back();
        }
    }
    return false;
}

} // namespace

void FormClassGroup::build_decomposition() {
    i64 h = order();
    std::vector<i64> orders(h);
    for (i64 i = 0; i < h; ++i) orders[i] = class_order(i);
    cyclic_.clear();
    for (auto [q, e] : factorize(h)) {
        i64 qe = 1;
        for (int i = 0; i < e; ++i) qe *= q;
        std::vector<i64> sylow;
        for (i64 i = 0; i < h; ++i)
            if (qe % orders[i] == 0) sylow.push_back(i);
        std::vector<i64> basis;
        if (!extend_basis(table_, sylow, orders, basis, 1, qe))
            throw std::logic_error("Sylow basis search failed");
        for (i64 g : basis) cyclic_.push_back({g, orders[g]});
    }
    // coordinates of every class with respect to the basis
    coords_.assign(h, {});
    i64 r = static_cast<i64>(cyclic_.size());
    std::vector<bool> hit(h, false);
    std::vector<i64> e(r, 0);
    for (;;) {
        i64 cls = 0;
        for (i64 i = 0; i < r; ++i)
            for (i64 k = 0; k < e[i]; ++k) cls = table_[cls][cyclic_[i].first];
        if (hit[cls]) throw std::logic_error("decomposition is not direct");
        hit[cls] = true;
        coords_[cls] = e;
        i64 i = r - 1;
        while (i >= 0 && e[i] == cyclic_[i].second - 1) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }
    for (i64 i = 0; i < h; ++i)
        if (!hit[i]) throw std::logic_error("coordinate map incomplete");
}

FormClassGroupPtr class_group(const FundamentalDiscriminant& D, i64 bound) {
    static std::map<i64, FormClassGroupPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(D.D);
    if (it != cache.end()) return it->second;
    auto ptr = std::make_shared<const FormClassGroup>(D, bound);
    cache[D.D] = ptr;
    return ptr;
}

BinaryQuadraticForm prime_form(const FundamentalDiscriminant& D, i64 l) {
    if (splitting_type(D, l) == SplittingType::Inert) throw InertPrime();
    i64 b = -1;
    if (l == 2) {
        for (i64 cand = 0; cand < 4 && b < 0; ++cand)
            if (mod_reduce(cand * cand - D.D, 8) == 0) b = cand;
    } else {
        i64 t = sqrt_mod(mod_reduce(D.D, l), l);
        if (t < 0) throw InertPrime();
        for (i64 r : {t, l - t}) {
            for (i64 cand : {r, r + l}) {
                i128 num = static_cast<i128>(cand) * cand - D.D;
                if (num % (4 * static_cast<i128>(l)) == 0 &&
                    (b < 0 || cand < b))
                    b = cand;
            }
        }
    }
    if (b < 0) throw std::logic_error("prime_form: no root found");
    i64 c = static_cast<i64>((static_cast<i128>(b) * b - D.D) /
                             (4 * static_cast<i128>(l)));
    return {l, b, c};
}

BinaryQuadraticForm prime_to_class(const FundamentalDiscriminant& D, i64 l) {
    return reduce_form(prime_form(D, l));
}

i64 cf_period(const FundamentalDiscriminant& D) {
    if (D.D < 0) throw ImaginaryField();
    i64 s = isqrt_floor(D.D);
    i64 P = (mod_reduce(D.D, 4) == 1) ? 1 : 0;
    i64 Q = 2;
    std::map<std::pair<i64, i64>, i64> seen;
    for (i64 k = 0;; ++k) {
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) return k - it->second;
        seen[key] = k;
        i64 a = (P + s) / Q; // floor((P + sqrt(D)) / Q), Q > 0
        P = a * Q - P;
        Q = (D.D - P * P) / Q;
    }
}

int fundamental_unit_norm(const FundamentalDiscriminant& D) {
    return (cf_period(D) % 2 == 1) ? -1 : +1;
}

BinaryQuadraticForm sign_class(const FundamentalDiscriminant& D) {
    if (D.D < 0) throw ImaginaryField();
    i64 b = mod_reduce(D.D, 2);
    return reduce_form({-1, b, (D.D - b * b) / 4});
}

} // namespace dihedral
