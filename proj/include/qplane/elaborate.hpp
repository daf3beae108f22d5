#pragma once

#include <stdexcept>
#include <string>

#include "qplane/expr.hpp"
#include "qplane/plane_element.hpp"

namespace qplane {

// Semantic rejection during elaboration, carrying the offending node's
// source position (0-based byte offset).
class ElaborateError : public std::runtime_error {
public:
    ElaborateError(std::size_t pos, const std::string& message)
        : std::runtime_error("error at position " + std::to_string(pos) + ": " +
                             message),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Bottom-up evaluation into the quantum plane, everything modulo total
// degree > cutoff: symbols map to the generators (q / qinv to coefficient
// units), products and powers truncate as they go, expq applies the
// truncated q-exponential. An expq argument with a nonzero constant term is
// rejected with the position of the expq.
PlaneElement elaborate(const Expr& ast, TruncationOrder cutoff);

// Renders an element back into the expression language (coefficients in
// qinv^k syntax), such that parsing and elaborating the text at the same
// cutoff reproduces the element. Only elements whose coefficients are
// Laurent polynomials (denominator 1) can be expressed in the grammar;
// others are rejected with std::domain_error.
std::string render_parseable(const PlaneElement& e);

}  // namespace qplane
