#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace novikov {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// d_i o d_{i+1} != 0, or a shape mismatch between consecutive boundaries.
class ComplexAxiomViolation : public Error {
public:
    ComplexAxiomViolation(std::size_t degree, const std::string& what)
        : Error("chain complex axiom violated at degree " + std::to_string(degree) + ": " + what),
          degree_(degree) {}

    std::size_t degree() const noexcept { return degree_; }

private:
    std::size_t degree_;
};

/// An operation was called outside its documented precondition.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// The zero-count bound does not apply to Dirichlet units.
class DirichletUnitRefusal : public Error {
public:
    DirichletUnitRefusal(const std::string& minpoly)
        : Error("a is a Dirichlet unit (primitive minimal polynomial " + minpoly +
                "); the bound does not apply to units"),
          minpoly_(minpoly) {}

    const std::string& minimal_polynomial() const noexcept { return minpoly_; }

private:
    std::string minpoly_;
};

/// No prime p admits p | lc(minpoly(a)) because the leading coefficient is +-1.
class IsAlgebraicInteger : public Error {
public:
    using Error::Error;
};

/// Monodromy matrix with determinant other than +-1.
class NonUnimodular : public Error {
public:
    using Error::Error;
};

/// A word of the group ring presentation lies outside the negative monoid.
class PositiveXiWord : public Error {
public:
    using Error::Error;
};

/// Every xi-level of a group ring element has vanishing coefficient sum.
class AllLevelsCancel : public Error {
public:
    using Error::Error;
};

/// Declared minimal polynomial has a proper factor.
class NotIrreducible : public Error {
public:
    using Error::Error;
};

class DegreeOverflow : public Error {
public:
    using Error::Error;
};

} // namespace novikov
