#include "anticyc/pell.hpp"

#include <map>
#include <sstream>

namespace anticyc {

namespace {

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

void require_nonsquare(const Int& d) {
    if (d <= 1) throw std::invalid_argument("pell: D must be > 1");
    Int r = isqrt(d);
    if (r * r == d) throw std::invalid_argument("pell: D must not be a perfect square");
}

}  // namespace

SqrtContinuedFraction sqrt_continued_fraction(const Int& d) {
    require_nonsquare(d);
    SqrtContinuedFraction cf;
    cf.a0 = isqrt(d);
    // sqrt(D) = a0; (m, q) state: (sqrt(D) + m) / q
    Int m = 0, q = 1, a = cf.a0;
    std::map<std::pair<Int, Int>, size_t> seen;
    while (true) {
        m = a * q - m;
        q = (d - m * m) / q;
        auto key = std::make_pair(m, q);
        if (seen.count(key)) break;
        seen[key] = cf.period.size();
        a = (cf.a0 + m) / q;
        cf.period.push_back(a);
    }
    return cf;
}

namespace {

// convergent p/q after consuming k terms of the expansion (a0 then the
// period cyclically); returns (p, q)
PellSolution convergent(const SqrtContinuedFraction& cf, size_t terms) {
    Int p_prev = 1, p = cf.a0;
    Int q_prev = 0, q = 1;
    for (size_t i = 1; i < terms; ++i) {
        const Int& a = cf.period[(i - 1) % cf.period.size()];
        Int p_next = a * p + p_prev;
        Int q_next = a * q + q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
    }
    return {p, q};
}

}  // namespace

PellSolution pell_fundamental(const Int& d) {
    SqrtContinuedFraction cf = sqrt_continued_fraction(d);
    size_t L = cf.period.size();
    size_t terms = (L % 2 == 0) ? L : 2 * L;
    PellSolution s = convergent(cf, terms);
    if (s.x * s.x - d * s.y * s.y != 1)
        throw std::logic_error("pell_fundamental: convergent check failed");
    return s;
}

PellSolution pell_power(const Int& d, const PellSolution& base, unsigned k) {
    PellSolution r{1, 0};
    for (unsigned i = 0; i < k; ++i) {
        Int x = r.x * base.x + d * r.y * base.y;
        Int y = r.x * base.y + r.y * base.x;
        r = {x, y};
    }
    return r;
}

NegativePellResult pell_negative(const Int& d) {
    require_nonsquare(d);
    NegativePellResult res;
    if (d % 4 == 3) {
        res.solvable = false;
        std::ostringstream os;
        os << "D = 3 (mod 4): x^2 - D y^2 = x^2 + y^2 (mod 4) takes only values "
              "0, 1, 2, never -1";
        res.certificate = os.str();
        return res;
    }
    SqrtContinuedFraction cf = sqrt_continued_fraction(d);
    size_t L = cf.period.size();
    if (L % 2 == 0) {
        res.solvable = false;
        std::ostringstream os;
        os << "continued fraction of sqrt(D) has even period " << L;
        res.certificate = os.str();
        return res;
    }
    PellSolution s = convergent(cf, L);
    if (s.x * s.x - d * s.y * s.y != -1)
        throw std::logic_error("pell_negative: convergent check failed");
    res.solvable = true;
    res.fundamental = s;
    return res;
}

SubLatticeIsometry unit_action(const IMat& gram, const Int& d, const PellSolution& sol) {
    if (gram.size() != 2 || gram[0].size() != 2)
        throw std::invalid_argument("unit_action: need a 2x2 Gram matrix");
    if (gram[0][1] != 0 || gram[1][0] != 0)
        throw std::invalid_argument("unit_action: Gram matrix must be diagonal");
    Int a = gram[0][0], b = -gram[1][1];
    if (a <= 0 || b <= 0)
        throw std::invalid_argument("unit_action: Gram must be diag(+, -)");
    if (sol.x * sol.x - d * sol.y * sol.y != 1)
        throw std::invalid_argument("unit_action: not a solution of x^2 - D y^2 = 1");

    // need s with s^2 = A D / B
    Int num = a * d;
    if (num % b != 0)
        throw std::invalid_argument("unit_action: D is incompatible with the form");
    Int s2 = num / b;
    Int s = isqrt(s2);
    if (s * s != s2)
        throw std::invalid_argument("unit_action: A D / B is not a perfect square");

    Int off = s * b * sol.y;
    if (off % a != 0)
        throw std::invalid_argument("unit_action: action is not integral");
    SubLatticeIsometry m;
    m.matrix = {{sol.x, off / a}, {s * sol.y, sol.x}};
    IMat t = mul(mul(transpose(m.matrix), gram), m.matrix);
    if (t != gram) throw std::logic_error("unit_action: M^T G M != G");
    return m;
}

std::vector<std::pair<Int, Int>> represent(const IMat& gram, const Int& c, const Int& bound) {
    if (gram.size() != 2 || gram[0].size() != 2)
        throw std::invalid_argument("represent: need a 2x2 Gram matrix");
    std::vector<std::pair<Int, Int>> out;
    for (Int n = -bound; n <= bound; ++n)
        for (Int m = -bound; m <= bound; ++m) {
            Int v = gram[0][0] * n * n + 2 * gram[0][1] * n * m + gram[1][1] * m * m;
            if (v == c) out.emplace_back(n, m);
        }
    return out;
}

}  // namespace anticyc
