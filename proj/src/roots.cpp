#include "anticyc/roots.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace anticyc {

namespace {

Int isqrt_ceil(const Int& n) {
    if (n <= 0) return 0;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) ++r;
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

bool orthogonal_to_components(const CyclePair& pair, const LatticeClass& x) {
    for (const auto& d : pair.components)
        if (pairing(x, d) != 0) return false;
    return true;
}

}  // namespace

std::string root_status_name(RootStatus s) {
    switch (s) {
        case RootStatus::InR: return "InR";
        case RootStatus::NotInR: return "NotInR";
        case RootStatus::UndecidedUpToBound: return "UndecidedUpToBound";
    }
    return "?";
}

std::string cone_verdict_name(ConeVerdict v) {
    switch (v) {
        case ConeVerdict::ConePreserved: return "ConePreserved";
        case ConeVerdict::ConeNotPreserved: return "ConeNotPreserved";
        case ConeVerdict::UndecidedUpToBound: return "UndecidedUpToBound";
    }
    return "?";
}

std::vector<LatticeClass> minus_two_classes(const SubLattice& L, const Int& bound) {
    std::vector<LatticeClass> out;
    int r = L.rank();
    if (r == 0) return out;
    LatticeClass k = canonical_class(L.ambient_n);
    bool perp_k = true;
    for (const auto& b : L.basis)
        if (pairing(b, k) != 0) { perp_k = false; break; }
    if (perp_k) {
        for (auto& x : classes_by_invariants(L.ambient_n, -2, 0, bound))
            if (L.contains(x)) out.push_back(std::move(x));
        return out;  // already lexicographic
    }

    // coefficient box scan: any x in L with |<x,h>| <= bound and x^2 = -2 has
    // Euclidean norm^2 <= 2 bound^2 + 2, so |a_i| <= ||b_i*|| * ||x||
    int d = L.ambient_n + 1;
    QMat ge(r, QVec(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int t = 0; t < d; ++t) ge[i][j] += Rat(L.basis[i][t] * L.basis[j][t]);
    auto inv = inverse_rational(ge);
    if (!inv) throw std::logic_error("minus_two_classes: degenerate basis");
    Int norm_sq = 2 * bound * bound + 2;
    std::vector<Int> lim(r);
    for (int i = 0; i < r; ++i) lim[i] = isqrt_ceil(ceil_rat((*inv)[i][i] * Rat(norm_sq)));

    std::vector<Int> a(r);
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            LatticeClass x = L.from_coords(a);
            if (pairing(x, x) == -2) {
                Int deg = x[0];
                if (deg >= -bound && deg <= bound) out.push_back(std::move(x));
            }
            return;
        }
        for (Int c = -lim[i]; c <= lim[i]; ++c) {
            a[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

PairClassification classify(const CyclePair& pair,
                            const std::vector<LatticeClass>& extra_verified_roots,
                            const Int& bound) {
    require_valid(pair);
    PairClassification c;
    c.k_square = pair.k_square();
    c.negative_definite = is_negative_definite(pair.component_gram());
    for (const auto& d : pair.components)
        if (pairing(d, d) == -1) c.has_minus_one_component = true;
    if (!c.negative_definite) {
        c.regime = Regime::NotNegativeDefinite;
        return c;
    }
    if (c.k_square == -1) {
        c.regime = Regime::KSquareMinusOne;
        return c;
    }
    std::vector<LatticeClass> roots;
    auto add_root = [&](const LatticeClass& b) {
        if (pairing(b, b) != -2 || !orthogonal_to_components(pair, b)) return;
        if (std::find(roots.begin(), roots.end(), b) == roots.end()) roots.push_back(b);
    };
    for (const auto& d : pair.declared_minus_two) add_root(d);
    for (const auto& e : extra_verified_roots) add_root(e);
    auto cert = find_R_distinguished(pair, roots, bound);
    if (cert) {
        c.regime = Regime::Distinguished;
        c.distinguished = std::move(cert);
    } else {
        c.regime = Regime::BoundedOnly;
    }
    return c;
}

std::optional<DistinguishedCertificate> find_R_distinguished(
    const CyclePair& pair, const std::vector<LatticeClass>& verified_roots,
    const Int& bound) {
    SubLattice lam = pair.lambda();
    int m = lam.rank();
    if (m == 0) return std::nullopt;
    if (m == 1) {
        LatticeClass x = lam.basis[0];
        if (pairing(x, x) <= 0) return std::nullopt;
        if (pairing(x, basis_h(pair.n)) < 0) x = -x;
        DistinguishedCertificate c;
        c.x = std::move(x);
        return c;
    }

    std::vector<LatticeClass> roots;
    for (const auto& b : verified_roots) {
        if (pairing(b, b) != -2 || !orthogonal_to_components(pair, b)) continue;
        Int deg = b[0] < 0 ? Int(-b[0]) : b[0];
        if (deg > bound) continue;
        if (std::find(roots.begin(), roots.end(), b) == roots.end()) roots.push_back(b);
    }
    int nr = static_cast<int>(roots.size());
    int need = m - 1;
    if (nr < need) return std::nullopt;

    // lexicographic subsets of size need, capped
    const long cap = 100000;
    long tried = 0;
    std::vector<int> idx(need);
    for (int i = 0; i < need; ++i) idx[i] = i;
    while (true) {
        if (++tried > cap) return std::nullopt;
        std::vector<LatticeClass> sub;
        for (int i : idx) sub.push_back(roots[i]);
        IMat gram(need, std::vector<Int>(need));
        for (int i = 0; i < need; ++i)
            for (int j = 0; j < need; ++j) gram[i][j] = pairing(sub[i], sub[j]);
        if (is_negative_definite(gram)) {
            std::vector<LatticeClass> constraints = pair.components;
            constraints.insert(constraints.end(), sub.begin(), sub.end());
            SubLattice comp = orthogonal_complement(pair.n, constraints);
            if (comp.rank() == 1) {
                LatticeClass x = comp.basis[0];
                if (pairing(x, x) > 0) {
                    if (pairing(x, basis_h(pair.n)) < 0) x = -x;
                    DistinguishedCertificate c;
                    c.roots_used = std::move(sub);
                    c.x = std::move(x);
                    c.gram_v = std::move(gram);
                    return c;
                }
            }
        }
        // next combination
        int i = need - 1;
        while (i >= 0 && idx[i] == nr - need + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::nullopt;
}

OrbitResult looijenga_orbit(const std::vector<LatticeClass>& basis,
                            const std::optional<std::vector<Int>>& positivity,
                            const Int& bound) {
    for (const auto& b : basis)
        if (pairing(b, b) != -2)
            throw std::invalid_argument("looijenga_orbit: basis element of square != -2");
    if (positivity) {
        if (positivity->size() != basis.size())
            throw std::invalid_argument("looijenga_orbit: positivity vector size mismatch");
        LatticeClass s = zero_class(basis.empty() ? 0 : basis[0].n());
        for (size_t i = 0; i < basis.size(); ++i) {
            if ((*positivity)[i] <= 0)
                throw std::invalid_argument("looijenga_orbit: positivity entries must be positive");
            s = s + basis[i] * (*positivity)[i];
        }
        for (const auto& b : basis)
            if (pairing(s, b) <= 0)
                throw std::invalid_argument("looijenga_orbit: positivity condition fails");
    }

    OrbitResult res;
    std::set<LatticeClass> seen;
    std::vector<LatticeClass> queue;
    auto in_bound = [&bound](const LatticeClass& x) {
        Int d = x[0] < 0 ? Int(-x[0]) : x[0];
        return d <= bound;
    };
    for (const auto& b : basis) {
        if (!in_bound(b)) {
            res.stabilized = false;
            continue;
        }
        if (seen.insert(b).second) queue.push_back(b);
    }
    while (!queue.empty()) {
        LatticeClass x = std::move(queue.back());
        queue.pop_back();
        for (const auto& b : basis) {
            LatticeClass y = reflect(x, b);
            if (!in_bound(y)) {
                res.stabilized = false;
                continue;
            }
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    res.elements.assign(seen.begin(), seen.end());
    return res;
}

RootVerdict is_root(const CyclePair& pair, const LatticeClass& beta, const Int& bound,
                    const std::optional<PairClassification>& regime,
                    const std::optional<LatticeClass>& nef_certificate) {
    if (pairing(beta, beta) != -2)
        throw std::invalid_argument("is_root: class has square != -2");
    if (!orthogonal_to_components(pair, beta))
        throw std::invalid_argument("is_root: class is not orthogonal to the cycle");
    PairClassification cls = regime ? *regime : classify(pair);
    RootVerdict v;
    v.beta = beta;
    if (cls.regime == Regime::NotNegativeDefinite) {
        v.status = RootStatus::InR;
        v.rule = "automatic: pair not negative definite";
        return v;
    }
    if (cls.regime == Regime::KSquareMinusOne) {
        v.status = RootStatus::InR;
        v.rule = "automatic: K^2 = -1";
        return v;
    }

    // falsification: an effective class whose reflection is not effective
    for (const auto& nc : enumerate_numexc(pair, bound, cls, nef_certificate)) {
        if (nc.effectiveness != Effectiveness::Effective) continue;
        LatticeClass img = reflect(nc.cls, beta);
        if (classify_effectiveness(pair, img, cls, nef_certificate) ==
            Effectiveness::NotEffective) {
            v.status = RootStatus::NotInR;
            v.witness = nc.cls;
            v.rule = "reflection moves an effective class out of the effective set";
            return v;
        }
    }

    // positive route: orbit of declared -2 curve classes lying in Lambda
    std::vector<LatticeClass> decl;
    for (const auto& d : pair.declared_minus_two)
        if (orthogonal_to_components(pair, d)) decl.push_back(d);
    if (!decl.empty()) {
        Int bdeg = beta[0] < 0 ? Int(-beta[0]) : beta[0];
        Int obound = bdeg > bound ? bdeg : bound;
        auto orbit = looijenga_orbit(decl, std::nullopt, obound);
        if (std::binary_search(orbit.elements.begin(), orbit.elements.end(), beta) ||
            std::binary_search(orbit.elements.begin(), orbit.elements.end(), -beta)) {
            v.status = RootStatus::InR;
            v.rule = "reflection orbit of declared -2 curve classes";
            return v;
        }
    }

    // positive route: the reflection fixes the distinguished point, hence
    // preserves the effectiveness rule exactly
    if (cls.regime == Regime::Distinguished && cls.distinguished &&
        pairing(beta, cls.distinguished->x) == 0) {
        v.status = RootStatus::InR;
        v.rule = "orthogonal to the distinguished point";
        return v;
    }

    v.status = RootStatus::UndecidedUpToBound;
    v.rule = "no decision up to bound";
    return v;
}

std::vector<RootVerdict> roots_up_to_bound(const CyclePair& pair, const Int& bound,
                                           const std::optional<LatticeClass>& nef_certificate) {
    PairClassification cls = classify(pair);
    std::vector<RootVerdict> out;
    for (const auto& beta : minus_two_classes(pair.lambda(), bound))
        out.push_back(is_root(pair, beta, bound, cls, nef_certificate));
    return out;
}

IsometryReport check_isometry(const CyclePair& pair, const CyclePair& pair2,
                              const IntegerIsometry& f, const Int& bound,
                              const std::optional<LatticeClass>& probe,
                              const std::optional<LatticeClass>& nef_certificate,
                              const std::optional<LatticeClass>& nef_certificate2) {
    if (pair.n != pair2.n || f.dim() != pair.n + 1)
        throw std::invalid_argument("check_isometry: dimension mismatch");
    if (!f.preserves_pairing())
        throw std::invalid_argument("check_isometry: matrix is not an isometry");

    IsometryReport rep;
    rep.components_match = pair.r() == pair2.r();
    if (rep.components_match)
        for (int i = 0; i < pair.r(); ++i)
            if (f.apply(pair.components[i]) != pair2.components[i]) {
                rep.components_match = false;
                break;
            }
    rep.positive_cone = preserves_positive_cone(f);

    SubLattice lam = pair.lambda();
    SubLattice lam2 = pair2.lambda();
    IntegerIsometry finv = f.inverse();
    rep.lambda_preserved = true;
    for (const auto& b : lam.basis)
        if (!lam2.contains(f.apply(b))) { rep.lambda_preserved = false; break; }
    if (rep.lambda_preserved)
        for (const auto& b : lam2.basis)
            if (!lam.contains(finv.apply(b))) { rep.lambda_preserved = false; break; }

    PairClassification cls = classify(pair);
    PairClassification cls2 = classify(pair2);

    if (!rep.positive_cone) {
        rep.cone = ConeVerdict::ConeNotPreserved;
        rep.rule = "positive cone components are swapped";
        return rep;
    }

    bool concluded = false;
    std::vector<LatticeClass> roots_src = minus_two_classes(lam, bound);

    if (rep.components_match && rep.lambda_preserved) {
        if (cls.regime == Regime::NotNegativeDefinite &&
            cls2.regime == Regime::NotNegativeDefinite) {
            rep.cone = ConeVerdict::ConePreserved;
            rep.rule = "automatic: both pairs not negative definite";
            concluded = true;
        } else if (cls.regime == Regime::KSquareMinusOne &&
                   cls2.regime == Regime::KSquareMinusOne) {
            rep.cone = ConeVerdict::ConePreserved;
            rep.rule = "automatic: K^2 = -1";
            concluded = true;
        } else if (cls.regime == Regime::Distinguished &&
                   cls2.regime == Regime::Distinguished) {
            std::set<LatticeClass> r1, r2;
            for (const auto& b : roots_src)
                if (is_root(pair, b, bound, cls, nef_certificate).status == RootStatus::InR)
                    r1.insert(f.apply(b));
            for (const auto& b : minus_two_classes(lam2, bound))
                if (is_root(pair2, b, bound, cls2, nef_certificate2).status == RootStatus::InR)
                    r2.insert(b);
            if (r1 == r2) {
                rep.cone = ConeVerdict::ConePreserved;
                rep.rule = "distinguished points on both sides and matching bounded root sets";
                concluded = true;
            }
        }
    }

    if (!concluded && probe) {
        rep.probe = probe;
        BoundedVerdict pv = in_generic_ample_cone(pair, finv.apply(*probe), bound, cls,
                                                  nef_certificate);
        rep.probe_verdict = pv;
        if (pv.status == VerdictStatus::Refuted) {
            rep.cone = ConeVerdict::ConeNotPreserved;
            rep.witness = pv.witness;
            rep.rule = "inverse image of a cone member is refuted";
            concluded = true;
        }
    }

    if (!concluded) {
        for (const auto& nc : enumerate_numexc(pair, bound, cls, nef_certificate)) {
            if (nc.effectiveness != Effectiveness::Effective) continue;
            LatticeClass img = f.apply(nc.cls);
            if (classify_effectiveness(pair2, img, cls2, nef_certificate2) ==
                Effectiveness::NotEffective) {
                rep.cone = ConeVerdict::ConeNotPreserved;
                rep.witness = nc.cls;
                rep.rule = "an effective class maps to a non-effective class";
                concluded = true;
                break;
            }
        }
    }
    if (!concluded) {
        rep.cone = ConeVerdict::UndecidedUpToBound;
        rep.rule = "no decision up to bound";
    }

    // verified roots must not map to provable non-roots
    for (const auto& b : roots_src) {
        if (is_root(pair, b, bound, cls, nef_certificate).status != RootStatus::InR) continue;
        LatticeClass img = f.apply(b);
        if (!orthogonal_to_components(pair2, img)) {
            rep.roots_consistent = false;
            break;
        }
        if (is_root(pair2, img, bound, cls2, nef_certificate2).status == RootStatus::NotInR) {
            rep.roots_consistent = false;
            break;
        }
    }
    return rep;
}

}  // namespace anticyc
