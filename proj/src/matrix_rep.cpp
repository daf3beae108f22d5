#include "qplane/matrix_rep.hpp"

namespace qplane {

RationalMatrix RationalMatrix::identity(int dim) {
    RationalMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
    if (dim_ != o.dim_)
        throw std::invalid_argument("RationalMatrix: dimension mismatch in +");
    for (size_t k = 0; k < cells_.size(); ++k)
        cells_[k] += o.cells_[k];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
    for (auto& cell : cells_)
        cell *= c;
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.dim_ != b.dim_)
        throw std::invalid_argument("RationalMatrix: dimension mismatch in *");
    int n = a.dim_;
    RationalMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (int j = 0; j < n; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero())
                    r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

RationalMatrix pow(const RationalMatrix& a, int k) {
    if (k < 0)
        throw std::invalid_argument("pow: negative exponent for a matrix");
    RationalMatrix r = RationalMatrix::identity(a.dim());
    for (int i = 0; i < k; ++i)
        r = r * a;
    return r;
}

PlaneRep nilpotent_rep(int dim, const Rational& q0) {
    if (q0.is_zero())
        throw std::invalid_argument("nilpotent_rep: q0 must be nonzero");
    PlaneRep rep{RationalMatrix(dim), RationalMatrix(dim), q0};
    for (int i = 0; i + 1 < dim; ++i)
        rep.X.at(i, i + 1) = Rational(1);
    Rational diag(1);
    Rational step = q0.reciprocal();
    for (int i = 0; i < dim; ++i) {
        rep.Y.at(i, i) = diag;
        diag *= step;
    }
    return rep;
}

bool satisfies_plane_relation(const PlaneRep& rep) {
    return rep.X * rep.Y == rep.q0.reciprocal() * (rep.Y * rep.X);
}

RationalMatrix evaluate(const PlaneElement& a, const PlaneRep& rep) {
    int dim = rep.X.dim();
    RationalMatrix sum(dim);
    // Cache powers; plane elements typically touch many nearby degrees.
    std::vector<RationalMatrix> xpow{RationalMatrix::identity(dim)};
    std::vector<RationalMatrix> ypow{RationalMatrix::identity(dim)};
    auto power = [](std::vector<RationalMatrix>& cache, const RationalMatrix& base,
                    int k) -> const RationalMatrix& {
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back(cache.back() * base);
        return cache[static_cast<size_t>(k)];
    };
    for (const auto& [mono, c] : a.terms()) {
        Rational c0 = c.eval(rep.q0);
        if (c0.is_zero())
            continue;
        sum += c0 * (power(xpow, rep.X, mono.xdeg) * power(ypow, rep.Y, mono.ydeg));
    }
    return sum;
}

}  // namespace qplane
