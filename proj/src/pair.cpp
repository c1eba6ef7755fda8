#include "anticyc/pair.hpp"

#include <sstream>

namespace anticyc {

IMat CyclePair::component_gram() const {
    int rr = r();
    IMat g(rr, std::vector<Int>(rr));
    for (int i = 0; i < rr; ++i)
        for (int j = 0; j < rr; ++j) g[i][j] = pairing(components[i], components[j]);
    return g;
}

SubLattice CyclePair::lambda() const { return orthogonal_complement(n, components); }

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::NotNegativeDefinite: return "NotNegativeDefinite";
        case Regime::KSquareMinusOne: return "KSquareMinusOne";
        case Regime::Distinguished: return "Distinguished";
        case Regime::BoundedOnly: return "BoundedOnly";
    }
    return "?";
}

std::vector<std::string> validate(const CyclePair& pair) {
    std::vector<std::string> bad;
    auto fail = [&bad](const std::string& s) { bad.push_back(s); };
    int rr = pair.r();
    if (rr == 0) {
        fail("pair has no components");
        return bad;
    }
    for (int i = 0; i < rr; ++i)
        if (pair.components[i].n() != pair.n) {
            std::ostringstream os;
            os << "component " << i << " has wrong ambient dimension";
            fail(os.str());
            return bad;
        }

    LatticeClass sum = zero_class(pair.n);
    for (const auto& c : pair.components) sum = sum + c;
    if (sum != pair.anticanonical()) fail("sum of components is not -K");

    if (rr == 1) {
        if (pair.components[0] != pair.anticanonical())
            fail("r=1 component is not -K");
    } else if (rr == 2) {
        if (pairing(pair.components[0], pair.components[1]) != 2)
            fail("r=2 components must meet with D_1.D_2 = 2");
    } else {
        for (int i = 0; i < rr; ++i)
            for (int j = i + 1; j < rr; ++j) {
                bool adjacent = (j - i == 1) || (i == 0 && j == rr - 1);
                Int p = pairing(pair.components[i], pair.components[j]);
                if (p != (adjacent ? 1 : 0)) {
                    std::ostringstream os;
                    os << "components " << i << "," << j << " pair to " << p
                       << " (expected " << (adjacent ? 1 : 0) << ")";
                    fail(os.str());
                }
            }
    }

    LatticeClass k = canonical_class(pair.n);
    for (size_t t = 0; t < pair.declared_minus_two.size(); ++t) {
        const auto& d = pair.declared_minus_two[t];
        std::ostringstream os;
        if (d.n() != pair.n) {
            os << "declared -2 class " << t << " has wrong ambient dimension";
            fail(os.str());
            continue;
        }
        if (pairing(d, d) != -2) {
            os << "declared -2 class " << t << " has square " << pairing(d, d);
            fail(os.str());
        } else if (pairing(d, k) != 0) {
            os << "declared -2 class " << t << " is not orthogonal to K";
            fail(os.str());
        }
    }
    return bad;
}

void require_valid(const CyclePair& pair) {
    auto bad = validate(pair);
    if (!bad.empty()) throw std::invalid_argument("invalid pair: " + bad.front());
}

namespace {

LatticeClass extend_dim(const LatticeClass& c) {
    LatticeClass r = c;
    r.coords.emplace_back(0);
    return r;
}

}  // namespace

CyclePair interior_blowup(const CyclePair& pair, int component_index,
                          LatticeClass* new_exceptional) {
    require_valid(pair);
    if (component_index < 0 || component_index >= pair.r())
        throw std::invalid_argument("interior_blowup: invalid component index");
    CyclePair out;
    out.n = pair.n + 1;
    out.orientation = pair.orientation;
    out.history = pair.history;
    out.history.push_back({BlowupStep::Kind::Interior, component_index});
    LatticeClass e = basis_e(out.n, out.n);
    for (int i = 0; i < pair.r(); ++i) {
        LatticeClass c = extend_dim(pair.components[i]);
        if (i == component_index) c = c - e;
        out.components.push_back(std::move(c));
    }
    for (const auto& d : pair.declared_minus_two)
        out.declared_minus_two.push_back(extend_dim(d));
    if (new_exceptional) *new_exceptional = e;
    require_valid(out);
    return out;
}

CyclePair corner_blowup(const CyclePair& pair, int edge_index,
                        LatticeClass* new_exceptional) {
    require_valid(pair);
    int rr = pair.r();
    if (edge_index < 0 || edge_index >= rr)
        throw std::invalid_argument("corner_blowup: invalid edge index");
    CyclePair out;
    out.n = pair.n + 1;
    out.orientation = pair.orientation;
    out.history = pair.history;
    out.history.push_back({BlowupStep::Kind::Corner, edge_index});
    LatticeClass e = basis_e(out.n, out.n);
    if (rr == 1) {
        // nodal curve splits: D = (D - 2e) + e
        LatticeClass d = extend_dim(pair.components[0]);
        out.components.push_back(d - e - e);
        out.components.push_back(e);
    } else {
        int a = edge_index;
        int b = (edge_index + 1) % rr;
        for (int i = 0; i < rr; ++i) {
            LatticeClass c = extend_dim(pair.components[i]);
            if (i == a || i == b) c = c - e;
            out.components.push_back(std::move(c));
            if (i == a) out.components.push_back(e);  // insert between a and b
        }
        // when the edge wraps (a = r-1, b = 0), e was appended at the end,
        // which is the correct cyclic position
    }
    for (const auto& d : pair.declared_minus_two)
        out.declared_minus_two.push_back(extend_dim(d));
    if (new_exceptional) *new_exceptional = e;
    require_valid(out);
    return out;
}

CyclePair contract_minus_one(const CyclePair& pair, const LatticeClass& cls,
                             const std::optional<IntegerIsometry>& witness) {
    require_valid(pair);
    if (pairing(cls, cls) != -1)
        throw std::invalid_argument("contract_minus_one: class is not a (-1)-class");
    if (pairing(cls, canonical_class(pair.n)) != -1)
        throw std::invalid_argument("contract_minus_one: class is not numerically exceptional");
    if (pair.n < 1) throw std::invalid_argument("contract_minus_one: nothing to contract");

    LatticeClass en = basis_e(pair.n, pair.n);
    CyclePair work = pair;
    if (witness) {
        if (!witness->preserves_pairing())
            throw std::invalid_argument("contract_minus_one: witness is not an isometry");
        if (witness->apply(cls) != en)
            throw std::invalid_argument("contract_minus_one: witness does not map the class to e_n");
        for (auto& c : work.components) c = witness->apply(c);
        for (auto& d : work.declared_minus_two) d = witness->apply(d);
        work.history.clear();
    } else {
        if (cls != en || pair.history.empty())
            throw std::invalid_argument("contract_minus_one: no usable witness (need history with cls = e_n)");
        work.history.pop_back();
    }

    // every class must have e_n coefficient in {0, -1}, or be e_n itself
    CyclePair out;
    out.n = pair.n - 1;
    out.orientation = pair.orientation;
    out.history = work.history;
    auto strip = [&](const LatticeClass& c) {
        LatticeClass r = c;
        r.coords.pop_back();
        return r;
    };
    for (const auto& c : work.components) {
        if (c == en) continue;  // the contracted cycle component, if any
        if (c[pair.n] != 0 && c[pair.n] != -1)
            throw std::invalid_argument("contract_minus_one: a component is not a pullback or blowup of one");
        out.components.push_back(strip(c));
    }
    for (const auto& d : work.declared_minus_two) {
        if (d[pair.n] != 0)
            throw std::invalid_argument("contract_minus_one: declared -2 class meets the contracted curve");
        out.declared_minus_two.push_back(strip(d));
    }
    require_valid(out);
    return out;
}

CyclePair contract_minus_one_component(const CyclePair& pair, int component_index,
                                       const std::optional<IntegerIsometry>& witness) {
    if (component_index < 0 || component_index >= pair.r())
        throw std::invalid_argument("contract_minus_one_component: invalid component index");
    return contract_minus_one(pair, pair.components[component_index], witness);
}

}  // namespace anticyc
