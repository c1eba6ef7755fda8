#include "anticyc/lattice.hpp"

#include <sstream>

namespace anticyc {

void require_same_dim(const LatticeClass& u, const LatticeClass& v) {
    if (u.dim() != v.dim())
        throw std::invalid_argument("lattice classes live in different Z^{1,n}");
}

LatticeClass LatticeClass::operator+(const LatticeClass& o) const {
    require_same_dim(*this, o);
    LatticeClass r(*this);
    for (int i = 0; i < dim(); ++i) r.coords[i] += o.coords[i];
    return r;
}

LatticeClass LatticeClass::operator-(const LatticeClass& o) const {
    require_same_dim(*this, o);
    LatticeClass r(*this);
    for (int i = 0; i < dim(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

LatticeClass LatticeClass::operator-() const {
    LatticeClass r(*this);
    for (auto& c : r.coords) c = -c;
    return r;
}

LatticeClass LatticeClass::operator*(const Int& s) const {
    LatticeClass r(*this);
    for (auto& c : r.coords) c *= s;
    return r;
}

bool LatticeClass::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

Int LatticeClass::content() const {
    Int g = 0;
    for (const auto& c : coords) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

std::string LatticeClass::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < dim(); ++i) {
        if (i) os << ",";
        os << coords[i];
    }
    os << "]";
    return os.str();
}

LatticeClass basis_h(int n) {
    LatticeClass r(std::vector<Int>(n + 1, 0));
    r[0] = 1;
    return r;
}

LatticeClass basis_e(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("basis_e index out of range");
    LatticeClass r(std::vector<Int>(n + 1, 0));
    r[i] = 1;
    return r;
}

LatticeClass zero_class(int n) { return LatticeClass(std::vector<Int>(n + 1, 0)); }

Int pairing(const LatticeClass& u, const LatticeClass& v) {
    require_same_dim(u, v);
    Int s = u[0] * v[0];
    for (int i = 1; i < u.dim(); ++i) s -= u[i] * v[i];
    return s;
}

LatticeClass canonical_class(int n) {
    if (n < 0) throw std::invalid_argument("canonical_class: n must be >= 0");
    LatticeClass r(std::vector<Int>(n + 1, 1));
    r[0] = -3;
    return r;
}

LatticeClass reflect(const LatticeClass& x, const LatticeClass& beta) {
    if (pairing(beta, beta) != -2)
        throw std::invalid_argument("reflect: beta^2 != -2");
    return x + beta * pairing(x, beta);
}

LatticeClass IntegerIsometry::apply(const LatticeClass& x) const {
    if (x.dim() != dim()) throw std::invalid_argument("isometry/class dimension mismatch");
    LatticeClass r(std::vector<Int>(dim(), 0));
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) r[i] += matrix[i][j] * x[j];
    return r;
}

IntegerIsometry IntegerIsometry::identity(int dim) {
    IntegerIsometry f;
    f.matrix.assign(dim, std::vector<Int>(dim, 0));
    for (int i = 0; i < dim; ++i) f.matrix[i][i] = 1;
    return f;
}

IntegerIsometry IntegerIsometry::reflection(const LatticeClass& beta) {
    if (pairing(beta, beta) != -2)
        throw std::invalid_argument("reflection: beta^2 != -2");
    int d = beta.dim();
    IntegerIsometry f = identity(d);
    // r(x) = x + <x,beta> beta; column j is r(basis_j).
    for (int j = 0; j < d; ++j) {
        Int pj = (j == 0) ? beta[0] : -beta[j];  // <basis_j, beta>
        for (int i = 0; i < d; ++i) f.matrix[i][j] += pj * beta[i];
    }
    return f;
}

IntegerIsometry IntegerIsometry::compose(const IntegerIsometry& other) const {
    int d = dim();
    if (other.dim() != d) throw std::invalid_argument("compose: dimension mismatch");
    IntegerIsometry r;
    r.matrix.assign(d, std::vector<Int>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            if (matrix[i][k] != 0)
                for (int j = 0; j < d; ++j) r.matrix[i][j] += matrix[i][k] * other.matrix[k][j];
    return r;
}

IntegerIsometry IntegerIsometry::inverse() const {
    // For a pairing-preserving M: M^T J M = J with J = diag(1,-1,...,-1),
    // so M^{-1} = J M^T J.
    int d = dim();
    IntegerIsometry r;
    r.matrix.assign(d, std::vector<Int>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Int v = matrix[j][i];
            if ((i == 0) != (j == 0)) v = -v;
            r.matrix[i][j] = v;
        }
    return r;
}

bool IntegerIsometry::preserves_pairing() const {
    int d = dim();
    // columns are the images of the basis vectors
    std::vector<LatticeClass> cols(d, LatticeClass(std::vector<Int>(d, 0)));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) cols[j][i] = matrix[i][j];
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Int expect = 0;
            if (i == j) expect = (i == 0) ? 1 : -1;
            if (pairing(cols[i], cols[j]) != expect) return false;
        }
    return true;
}

bool preserves_positive_cone(const IntegerIsometry& f) {
    LatticeClass h = basis_h(f.dim() - 1);
    return pairing(f.apply(h), h) > 0;
}

}  // namespace anticyc
