#include "anticyc/cones.hpp"

#include <functional>

namespace anticyc {

namespace {

Int isqrt_floor(const Int& n) {
    if (n < 0) return 0;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int isqrt_ceil(const Int& n) {
    if (n <= 0) return 0;
    Int r = isqrt_floor(n);
    if (r * r < n) ++r;
    return r;
}

Int ceil_div(const Int& a, const Int& b) {  // b > 0
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

LatticeClass pair_anticanonical(const CyclePair& pair) { return pair.anticanonical(); }

}  // namespace

std::string effectiveness_name(Effectiveness e) {
    switch (e) {
        case Effectiveness::Effective: return "Effective";
        case Effectiveness::NotEffective: return "NotEffective";
        case Effectiveness::SpanOfD: return "SpanOfD";
        case Effectiveness::Undecided: return "Undecided";
    }
    return "?";
}

std::string verdict_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Proven: return "Proven";
        case VerdictStatus::Refuted: return "Refuted";
        case VerdictStatus::Undecided: return "Undecided";
    }
    return "?";
}

bool wall_equal(const Wall& a, const Wall& b) {
    require_same_dim(a.normal, b.normal);
    if (a.normal.is_zero() || b.normal.is_zero()) return false;
    // cross-ratio test for Q-proportionality
    for (int i = 0; i < a.normal.dim(); ++i)
        for (int j = i + 1; j < a.normal.dim(); ++j)
            if (a.normal[i] * b.normal[j] != a.normal[j] * b.normal[i]) return false;
    return true;
}

bool wall_equal(const Wall& a, const Wall& b, const SubLattice& context) {
    int r = context.rank();
    std::vector<Int> pa(r), pb(r);
    bool za = true, zb = true;
    for (int i = 0; i < r; ++i) {
        pa[i] = pairing(a.normal, context.basis[i]);
        pb[i] = pairing(b.normal, context.basis[i]);
        if (pa[i] != 0) za = false;
        if (pb[i] != 0) zb = false;
    }
    if (za || zb) return false;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (pa[i] * pb[j] != pa[j] * pb[i]) return false;
    return true;
}

NefResult construct_nef(const LatticeClass& ample_seed,
                        const std::vector<LatticeClass>& config) {
    if (pairing(ample_seed, ample_seed) <= 0)
        throw std::invalid_argument("construct_nef: seed must have positive square");
    NefResult res;
    if (config.empty()) {
        res.h = ample_seed;
        res.scale = 1;
        return res;
    }
    int k = static_cast<int>(config.size());
    IMat gram(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) gram[i][j] = pairing(config[i], config[j]);
    if (!is_negative_definite(gram))
        throw std::invalid_argument("construct_nef: configuration is not negative definite");
    QVec rhs(k);
    for (int j = 0; j < k; ++j) rhs[j] = Rat(-pairing(ample_seed, config[j]));
    auto r = solve_rational(gram, rhs);
    if (!r) throw std::logic_error("construct_nef: singular negative definite Gram");
    for (const auto& ri : *r)
        if (ri < 0)
            throw std::logic_error("construct_nef: negative multiplier (seed pairs negatively with the configuration)");
    Int den = 1;
    for (const auto& ri : *r)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ri.get_den().get_mpz_t());
    LatticeClass h = ample_seed * den;
    for (int i = 0; i < k; ++i) {
        Rat scaled = (*r)[i] * Rat(den);
        h = h + config[i] * scaled.get_num();
    }
    for (int j = 0; j < k; ++j)
        if (pairing(h, config[j]) != 0)
            throw std::logic_error("construct_nef: orthogonality postcondition failed");
    if (pairing(h, h) <= 0)
        throw std::logic_error("construct_nef: projection has nonpositive square");
    res.h = std::move(h);
    res.multipliers = std::move(*r);
    res.scale = den;
    return res;
}

std::vector<LatticeClass> classes_by_invariants(int n, const Int& square,
                                                const Int& k_pairing, const Int& bound) {
    if (bound < 0) throw std::invalid_argument("classes_by_invariants: bound must be >= 0");
    std::vector<LatticeClass> out;
    std::vector<Int> coeffs(n);
    // x = d h + sum c_i e_i: sum c_i = -k_pairing - 3d, sum c_i^2 = d^2 - square
    std::function<void(int, const Int&, const Int&, const Int&)> rec =
        [&](int i, const Int& s, const Int& q, const Int& d) {
            if (q < 0) return;
            int left = n - i;
            if (left == 0) {
                if (s == 0 && q == 0) {
                    std::vector<Int> c;
                    c.reserve(n + 1);
                    c.push_back(d);
                    c.insert(c.end(), coeffs.begin(), coeffs.end());
                    out.emplace_back(std::move(c));
                }
                return;
            }
            if (s * s > Int(left) * q) return;  // Cauchy-Schwarz infeasible
            Int lim = isqrt_floor(q);
            for (Int c = -lim; c <= lim; ++c) {
                coeffs[i] = c;
                rec(i + 1, s - c, q - c * c, d);
            }
        };
    for (Int d = -bound; d <= bound; ++d)
        rec(0, -k_pairing - 3 * d, d * d - square, d);
    return out;
}

std::vector<LatticeClass> numexc_classes(int n, const Int& bound) {
    return classes_by_invariants(n, -1, -1, bound);
}

Effectiveness classify_effectiveness(const CyclePair& pair, const LatticeClass& alpha,
                                     const PairClassification& regime,
                                     const std::optional<LatticeClass>& nef_certificate) {
    if (pairing(alpha, alpha) != -1 ||
        pairing(alpha, canonical_class(pair.n)) != -1)
        throw std::invalid_argument("classify_effectiveness: class is not numerical exceptional");
    LatticeClass dtot = pair_anticanonical(pair);

    auto by_certificate = [&]() -> Effectiveness {
        if (!nef_certificate) return Effectiveness::Undecided;
        const LatticeClass& cert = *nef_certificate;
        Int hd = pairing(cert, dtot);
        Int p = pairing(alpha, cert);
        if (hd > 0) return p >= 0 ? Effectiveness::Effective : Effectiveness::NotEffective;
        if (hd == 0) {
            if (p > 0) return Effectiveness::Effective;
            if (p < 0) return Effectiveness::NotEffective;
            return Effectiveness::Undecided;
        }
        return Effectiveness::Undecided;
    };

    switch (regime.regime) {
        case Regime::NotNegativeDefinite: {
            // a component of nonnegative square acts as the deciding nef class
            for (const auto& dj : pair.components) {
                Int sq = pairing(dj, dj);
                if (sq > 0 || (sq == 0 && pairing(dj, dtot) > 0))
                    return pairing(alpha, dj) >= 0 ? Effectiveness::Effective
                                                   : Effectiveness::NotEffective;
            }
            // all components of square -2 (or the isotropic 1-cycle): every
            // numerical exceptional class is effective
            bool all_minus_two = true;
            for (const auto& dj : pair.components)
                if (pairing(dj, dj) != -2) { all_minus_two = false; break; }
            if (all_minus_two || (pair.r() == 1 && pairing(dtot, dtot) == 0))
                return Effectiveness::Effective;
            return by_certificate();
        }
        case Regime::KSquareMinusOne:
            // Light Cone test against h: alpha + D lands in the closed
            // positive cone minus zero iff its h-degree is positive
            return (pairing(alpha, basis_h(pair.n)) + 3 > 0) ? Effectiveness::Effective
                                                             : Effectiveness::NotEffective;
        case Regime::Distinguished: {
            if (!regime.distinguished)
                throw std::invalid_argument("classify_effectiveness: missing distinguished certificate");
            SubLattice span = SubLattice::from_basis(pair.n, pair.components);
            if (span.coords_of(alpha)) return Effectiveness::SpanOfD;
            return pairing(alpha, regime.distinguished->x) >= 0 ? Effectiveness::Effective
                                                                : Effectiveness::NotEffective;
        }
        case Regime::BoundedOnly:
            return by_certificate();
    }
    return Effectiveness::Undecided;
}

std::vector<NumExcClass> enumerate_numexc(const CyclePair& pair, const Int& bound,
                                          const std::optional<PairClassification>& regime,
                                          const std::optional<LatticeClass>& nef_certificate) {
    PairClassification cls = regime ? *regime : classify(pair);
    std::vector<NumExcClass> out;
    for (auto& a : numexc_classes(pair.n, bound)) {
        Effectiveness e = classify_effectiveness(pair, a, cls, nef_certificate);
        out.push_back({std::move(a), e});
    }
    return out;
}

namespace {

// Upper bound on |<alpha, h>| for alpha^2 = -1 with |<alpha, x>| <= tmax,
// x^2 = X > 0, <x, h> = H: Cauchy-Schwarz in the splitting along x.
Int degree_bound(const Int& tmax, const Int& X, const Int& H) {
    Int inner = (tmax * tmax + X) * (H * H - X);
    return ceil_div(tmax * H + isqrt_ceil(inner), X);
}

// Violator degree bound when effectiveness means <alpha, v> >= 0 for a
// reference class v with v^2 = V > 0, P = <x, v>: any alpha with
// <alpha, v> >= 0 and <alpha, x> <= -1 has t^2 <= (P^2 - V X) / V.
std::optional<Int> scan_bound_positive_ref(const Int& X, const Int& H, const Int& P,
                                           const Int& V) {
    if (V <= 0 || P <= 0) return std::nullopt;
    Int tsq_num = P * P - V * X;
    if (tsq_num < 0) tsq_num = 0;
    Int tmax = isqrt_floor(tsq_num / V);
    if (tmax == 0) return Int(0);  // no violator at any degree
    return degree_bound(tmax, X, H);
}

// Light cone regime: effectiveness means <alpha, h> >= -2, so a violator
// satisfies -2 <= <alpha, h> <= upper(t); feasibility caps |t| at
// 2H + sqrt(5 (H^2 - X)).
Int scan_bound_light_cone(const Int& X, const Int& H) {
    Int tmax = 2 * H + isqrt_ceil(5 * (H * H - X));
    Int db = degree_bound(tmax, X, H);
    return db < 2 ? Int(2) : db;
}

}  // namespace

BoundedVerdict in_generic_ample_cone(const CyclePair& pair, const LatticeClass& x,
                                     const Int& bound,
                                     const std::optional<PairClassification>& regime,
                                     const std::optional<LatticeClass>& nef_certificate) {
    BoundedVerdict v;
    v.bound = bound;
    Int X = pairing(x, x);
    if (X <= 0) {
        v.status = VerdictStatus::Refuted;
        v.witness = x;
        v.detail = "x^2 <= 0: not in the positive cone";
        return v;
    }
    Int H = pairing(x, basis_h(pair.n));
    if (H <= 0) {
        v.status = VerdictStatus::Refuted;
        v.witness = basis_h(pair.n);
        v.detail = "<x, h> <= 0: wrong component of the positive cone";
        return v;
    }
    for (const auto& di : pair.components)
        if (pairing(x, di) < 0) {
            v.status = VerdictStatus::Refuted;
            v.witness = di;
            v.detail = "pairs negatively with a cycle component";
            return v;
        }

    PairClassification cls = regime ? *regime : classify(pair);
    bool uncertain_violation = false;
    for (const auto& nc : enumerate_numexc(pair, bound, cls, nef_certificate)) {
        Int p = pairing(x, nc.cls);
        if (p >= 0) continue;
        if (nc.effectiveness == Effectiveness::Effective) {
            v.status = VerdictStatus::Refuted;
            v.witness = nc.cls;
            v.detail = "pairs negatively with an effective exceptional class";
            return v;
        }
        if (nc.effectiveness != Effectiveness::NotEffective) uncertain_violation = true;
    }

    // promotion: compute an exact degree bound for potential violators
    std::optional<Int> db;
    switch (cls.regime) {
        case Regime::KSquareMinusOne:
            db = scan_bound_light_cone(X, H);
            break;
        case Regime::NotNegativeDefinite: {
            for (const auto& dj : pair.components) {
                Int sq = pairing(dj, dj);
                if (sq > 0) {
                    db = scan_bound_positive_ref(X, H, pairing(x, dj), sq);
                    break;
                }
            }
            break;  // isotropic nef reference gives no finite bound
        }
        case Regime::Distinguished:
            if (cls.distinguished) {
                const LatticeClass& xd = cls.distinguished->x;
                db = scan_bound_positive_ref(X, H, pairing(x, xd), pairing(xd, xd));
            }
            break;
        case Regime::BoundedOnly:
            if (nef_certificate) {
                const LatticeClass& c = *nef_certificate;
                if (pairing(c, pair.anticanonical()) > 0)
                    db = scan_bound_positive_ref(X, H, pairing(x, c), pairing(c, c));
            }
            break;
    }

    if (db && *db <= bound && !uncertain_violation) {
        v.status = VerdictStatus::Proven;
        v.detail = "all possible violating walls have degree <= " + db->get_str() +
                   ", checked exhaustively";
    } else {
        v.status = VerdictStatus::Undecided;
        v.detail = db ? ("violator degree bound " + db->get_str() + " exceeds checked bound")
                      : "no finite violator degree bound available in this regime";
        if (uncertain_violation)
            v.detail += "; a class of undecided effectiveness pairs negatively";
    }
    return v;
}

BoundedVerdict in_actual_ample_cone(const CyclePair& pair, const LatticeClass& x,
                                    const Int& bound,
                                    const std::optional<PairClassification>& regime,
                                    const std::optional<LatticeClass>& nef_certificate) {
    for (const auto& d : pair.declared_minus_two)
        if (pairing(x, d) < 0) {
            BoundedVerdict v;
            v.bound = bound;
            v.status = VerdictStatus::Refuted;
            v.witness = d;
            v.detail = "pairs negatively with a declared -2 curve class";
            return v;
        }
    return in_generic_ample_cone(pair, x, bound, regime, nef_certificate);
}

ChamberReduction chamber_reduce(const CyclePair& pair, const LatticeClass& x, int max_steps) {
    ChamberReduction res;
    res.reduced = x;
    for (int step = 0; ; ++step) {
        int hit = -1;
        for (size_t i = 0; i < pair.declared_minus_two.size(); ++i)
            if (pairing(res.reduced, pair.declared_minus_two[i]) < 0) {
                hit = static_cast<int>(i);
                break;
            }
        if (hit < 0) return res;
        if (step >= max_steps)
            throw StepLimit("chamber_reduce: step limit reached");
        res.reduced = reflect(res.reduced, pair.declared_minus_two[hit]);
        res.word.push_back(hit);
    }
}

std::vector<LatticeClass> noether_generators() {
    std::vector<LatticeClass> g;
    for (int i = 1; i <= 9; ++i) g.push_back(basis_e(10, i) - basis_e(10, i + 1));
    g.push_back(basis_h(10) - basis_e(10, 1) - basis_e(10, 2) - basis_e(10, 3));
    return g;
}

NoetherResult noether_reduce(const LatticeClass& lambda0) {
    if (lambda0.n() != 10)
        throw std::invalid_argument("noether_reduce: class must live on Z^{1,10}");
    if (pairing(lambda0, lambda0) != 0)
        throw std::invalid_argument("noether_reduce: NotIsotropic");
    if (pairing(lambda0, canonical_class(10)) != 0)
        throw std::invalid_argument("noether_reduce: not orthogonal to K");
    if (lambda0.content() != 1)
        throw std::invalid_argument("noether_reduce: NotPrimitive");
    if (pairing(lambda0, basis_h(10)) <= 0)
        throw std::invalid_argument("noether_reduce: NotInPositiveClosure");

    static const std::vector<LatticeClass> gens = noether_generators();
    LatticeClass f = basis_h(10) * Int(3);
    for (int i = 1; i <= 9; ++i) f = f - basis_e(10, i);

    NoetherResult res;
    res.result = lambda0;
    const int cap = 100000;
    for (int step = 0; step < cap; ++step) {
        int hit = -1;
        for (size_t i = 0; i < gens.size(); ++i)
            if (pairing(res.result, gens[i]) < 0) {
                hit = static_cast<int>(i);
                break;
            }
        if (hit < 0) {
            if (res.result != f)
                throw std::logic_error("noether_reduce: reduction terminated away from f");
            return res;
        }
        res.result = reflect(res.result, gens[hit]);
        res.word.push_back(hit);
    }
    throw StepLimit("noether_reduce: step limit reached");
}

DuvalResult duval_decompose(const CyclePair& pair, const LatticeClass& alpha) {
    if (pair.n != 10 || pair.r() != 1 || pair.components[0] != pair.anticanonical() ||
        !pair.declared_minus_two.empty())
        throw std::invalid_argument("duval_decompose: needs the generic 10-point pair with D = -K");
    if (pairing(alpha, alpha) != -1 || pairing(alpha, canonical_class(10)) != -1)
        throw std::invalid_argument("duval_decompose: class is not numerical exceptional");

    LatticeClass lambda = alpha - canonical_class(10);
    if (lambda.is_zero())
        throw std::invalid_argument("duval_decompose: alpha = K, direction ambiguous");
    if (pairing(lambda, lambda) != 0)
        throw std::logic_error("duval_decompose: alpha - K is not isotropic");
    Int g = lambda.content();
    LatticeClass lambda0 = lambda;
    for (auto& c : lambda0.coords) c /= g;
    if (pairing(lambda0, basis_h(10)) < 0) {
        lambda0 = -lambda0;
        g = -g;
    }
    // validates that lambda0 is in the reduction orbit of f
    noether_reduce(lambda0);

    DuvalResult res;
    res.e = lambda0 + canonical_class(10);
    res.k = g - 1;
    LatticeClass rebuilt =
        (pair.components[0] + res.e) * res.k + res.e;
    if (rebuilt != alpha)
        throw std::logic_error("duval_decompose: reconstruction mismatch");
    if (pairing(res.e, res.e) != -1 || pairing(res.e, canonical_class(10)) != -1)
        throw std::logic_error("duval_decompose: extracted class is not exceptional");
    return res;
}

}  // namespace anticyc
