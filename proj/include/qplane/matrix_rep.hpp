#pragma once

#include <vector>

#include "qplane/plane_element.hpp"
#include "qplane/rational.hpp"

namespace qplane {

// Dense square matrix over the rationals; just enough arithmetic to evaluate
// plane elements in a finite-dimensional representation.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(int dim) : dim_(dim), cells_(static_cast<size_t>(dim) * dim) {
        if (dim <= 0)
            throw std::invalid_argument("RationalMatrix: dimension must be positive");
    }

    static RationalMatrix identity(int dim);

    int dim() const { return dim_; }
    Rational& at(int i, int j) { return cells_[static_cast<size_t>(i) * dim_ + j]; }
    const Rational& at(int i, int j) const { return cells_[static_cast<size_t>(i) * dim_ + j]; }

    RationalMatrix& operator+=(const RationalMatrix& o);
    RationalMatrix& operator*=(const Rational& c);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { a += b; return a; }
    friend RationalMatrix operator*(RationalMatrix a, const Rational& c) { a *= c; return a; }
    friend RationalMatrix operator*(const Rational& c, RationalMatrix a) { a *= c; return a; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.dim_ == b.dim_ && a.cells_ == b.cells_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

private:
    int dim_ = 0;
    std::vector<Rational> cells_;
};

RationalMatrix pow(const RationalMatrix& a, int k);

// A dim-dimensional pair (X, Y) satisfying X Y = q0^-1 Y X with X nilpotent:
//   X = the superdiagonal shift (ones above the diagonal),
//   Y = diag(1, q0^-1, ..., q0^-(dim-1)).
// X^dim = 0, so series in X terminate; q0 must be nonzero.
struct PlaneRep {
    RationalMatrix X;
    RationalMatrix Y;
    Rational q0;
};

PlaneRep nilpotent_rep(int dim, const Rational& q0);

// Checks X Y == q0^-1 Y X entrywise.
bool satisfies_plane_relation(const PlaneRep& rep);

// Substitutes x -> rep.X, y -> rep.Y and evaluates every coefficient at
// q = rep.q0. Throws std::domain_error on a coefficient pole at q0.
RationalMatrix evaluate(const PlaneElement& a, const PlaneRep& rep);

}  // namespace qplane
