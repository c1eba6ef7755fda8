#include "anticyc/sublattice.hpp"

#include <algorithm>

namespace anticyc {

namespace {

IMat coord_rows(const std::vector<LatticeClass>& classes) {
    IMat m;
    m.reserve(classes.size());
    for (const auto& c : classes) m.push_back(c.coords);
    return m;
}

}  // namespace

SubLattice SubLattice::from_basis(int ambient_n, std::vector<LatticeClass> basis) {
    SubLattice L;
    L.ambient_n = ambient_n;
    for (const auto& b : basis)
        if (b.n() != ambient_n)
            throw std::invalid_argument("SubLattice: basis class has wrong ambient dimension");
    if (!basis.empty()) {
        IMat h = hermite_normal_form(coord_rows(basis));
        if (h.size() != basis.size())
            throw std::invalid_argument("SubLattice: basis is linearly dependent");
    }
    L.basis = std::move(basis);
    int r = L.rank();
    L.gram.assign(r, std::vector<Int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) L.gram[i][j] = pairing(L.basis[i], L.basis[j]);
    return L;
}

std::optional<QVec> SubLattice::coords_of(const LatticeClass& x) const {
    if (x.n() != ambient_n) return std::nullopt;
    int d = ambient_n + 1;
    int r = rank();
    // solve sum a_j basis_j = x by Gaussian elimination on the d x r system
    QMat m(d, QVec(r + 1, 0));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < r; ++j) m[i][j] = Rat(basis[j][i]);
        m[i][r] = Rat(x[i]);
    }
    int row = 0;
    std::vector<int> pivot_row(r, -1);
    for (int c = 0; c < r && row < d; ++c) {
        int p = -1;
        for (int i = row; i < d; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[row], m[p]);
        Rat piv = m[row][c];
        for (int j = c; j <= r; ++j) m[row][j] /= piv;
        for (int i = 0; i < d; ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j <= r; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_row[c] = row;
        ++row;
    }
    // consistency: rows without pivots must have zero rhs
    for (int i = row; i < d; ++i)
        if (m[i][r] != 0) return std::nullopt;
    QVec a(r, 0);
    for (int c = 0; c < r; ++c) {
        if (pivot_row[c] < 0) return std::nullopt;  // dependent basis; not expected
        a[c] = m[pivot_row[c]][r];
    }
    return a;
}

bool SubLattice::contains(const LatticeClass& x) const {
    auto a = coords_of(x);
    return a && is_integral(*a);
}

LatticeClass SubLattice::from_coords(const std::vector<Int>& a) const {
    LatticeClass x = zero_class(ambient_n);
    for (int j = 0; j < rank(); ++j)
        for (int i = 0; i <= ambient_n; ++i) x[i] += a[j] * basis[j][i];
    return x;
}

LatticeClass SubLattice::from_rational_coords(const QVec& a, Int* denom_out) const {
    Int den = 1;
    for (const auto& q : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> ia(a.size());
    for (size_t j = 0; j < a.size(); ++j) {
        Rat scaled = a[j] * Rat(den);
        ia[j] = scaled.get_num();
    }
    if (denom_out) *denom_out = den;
    return from_coords(ia);
}

SubLattice orthogonal_complement(int ambient_n, const std::vector<LatticeClass>& classes) {
    int d = ambient_n + 1;
    IMat constraints;
    for (const auto& c : classes) {
        if (c.n() != ambient_n)
            throw std::invalid_argument("orthogonal_complement: ambient dimension mismatch");
        std::vector<Int> row(d);
        row[0] = c[0];
        for (int i = 1; i < d; ++i) row[i] = -c[i];
        constraints.push_back(std::move(row));
    }
    IMat ker = constraints.empty() ? identity_imat(d) : kernel_basis(constraints);
    std::vector<LatticeClass> basis;
    basis.reserve(ker.size());
    for (auto& row : ker) basis.emplace_back(std::move(row));
    return SubLattice::from_basis(ambient_n, std::move(basis));
}

Int DiscriminantGroup::order() const {
    Int o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
}

DiscriminantGroup discriminant_group(const SubLattice& L) {
    if (L.rank() == 0) return {};
    if (det_bareiss(L.gram) == 0)
        throw std::invalid_argument("discriminant_group: degenerate Gram matrix");
    SmithResult sr = smith_normal_form(L.gram);
    DiscriminantGroup g;
    int r = L.rank();
    for (int i = 0; i < r; ++i) {
        Int d = sr.s[i][i];
        if (d == 1) continue;
        g.invariant_factors.push_back(d);
        // With U G V = S, the i-th generator lifts to (1/d) * column i of V.
        QVec lift(r);
        for (int j = 0; j < r; ++j) lift[j] = Rat(sr.v[j][i], d);
        g.generator_lifts.push_back(std::move(lift));
    }
    return g;
}

bool SubLatticeIsometry::preserves_gram(const SubLattice& L) const {
    IMat t = mul(mul(transpose(matrix), L.gram), matrix);
    return t == L.gram;
}

bool acts_trivially_on_discriminant(const SubLattice& L, const SubLatticeIsometry& A) {
    if (!A.preserves_gram(L))
        throw std::invalid_argument("acts_trivially_on_discriminant: not an isometry of L");
    DiscriminantGroup g = discriminant_group(L);
    int r = L.rank();
    for (const auto& lift : g.generator_lifts) {
        for (int i = 0; i < r; ++i) {
            Rat v = -lift[i];
            for (int j = 0; j < r; ++j) v += Rat(A.matrix[i][j]) * lift[j];
            if (v.get_den() != 1) return false;
        }
    }
    return true;
}

IntegerIsometry extend_isometry(const SubLattice& L, const SubLatticeIsometry& A,
                                const std::vector<LatticeClass>& fixed_classes) {
    int d = L.ambient_n + 1;
    if (!A.preserves_gram(L))
        throw std::invalid_argument("extend_isometry: A is not an isometry of L");

    IMat fixed_h = hermite_normal_form(coord_rows(fixed_classes));
    int m = static_cast<int>(fixed_h.size());
    int k = L.rank();
    if (k + m != d)
        throw DegenerateSpan("extend_isometry: L and the fixed span do not fill the ambient lattice");

    // P columns: L basis then fixed-span basis
    QMat p(d, QVec(d, 0));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < d; ++i) p[i][j] = Rat(L.basis[j][i]);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < d; ++i) p[i][k + j] = Rat(fixed_h[j][i]);
    auto pinv = inverse_rational(p);
    if (!pinv) throw DegenerateSpan("extend_isometry: fixed classes span a degenerate sublattice");

    // F = P * blockdiag(A, I) * P^{-1}
    QMat block(d, QVec(d, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) block[i][j] = Rat(A.matrix[i][j]);
    for (int i = k; i < d; ++i) block[i][i] = 1;

    auto qmul = [d](const QMat& a, const QMat& b) {
        QMat r(d, QVec(d, 0));
        for (int i = 0; i < d; ++i)
            for (int t = 0; t < d; ++t)
                if (a[i][t] != 0)
                    for (int j = 0; j < d; ++j) r[i][j] += a[i][t] * b[t][j];
        return r;
    };
    QMat f = qmul(qmul(p, block), *pinv);
    if (!is_integral(f))
        throw IntegralityFailure(
            "extend_isometry: extension is not integral (A is nontrivial on the discriminant group)");

    IntegerIsometry iso;
    iso.matrix.assign(d, std::vector<Int>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) iso.matrix[i][j] = f[i][j].get_num();
    // postconditions: isometry, fixes each given class
    if (!iso.preserves_pairing())
        throw ExtendError("extend_isometry: extension does not preserve the pairing");
    for (const auto& c : fixed_classes)
        if (iso.apply(c) != c) throw ExtendError("extend_isometry: extension moves a fixed class");
    return iso;
}

}  // namespace anticyc
