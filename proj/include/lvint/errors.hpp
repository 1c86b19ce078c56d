#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lvint {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text does not conform to the polynomial / rational grammar.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at column " + std::to_string(position + 1)),
          position(position) {}
    std::size_t position;
};

// Quadratic leading part is not of Lotka-Volterra shape (x | P and y | Q).
struct NotLVShape : Error {
    using Error::Error;
};

// a1*b2*(a2*b1 - a1*b2) == 0: the origin of the leading part is not isolated.
struct OriginNotIsolated : Error {
    using Error::Error;
};

// The leading part admits no polynomial first integral x^p y^q (x-y)^r with
// p, q, r positive integers.
struct NotPolynomiallyIntegrable : Error {
    using Error::Error;
};

// Requested polynomial does not divide the Hamiltonian part h.
struct NotAFactor : Error {
    using Error::Error;
};

// The assembled homological system at some degree is inconsistent; the
// leading part is outside the hypotheses of the normal-form machinery or the
// complement chain is wrong.
struct HomologicalSolveFailure : Error {
    using Error::Error;
};

// A cyclic complement candidate failed the direct-sum rank check.
struct ComplementVerificationFailure : Error {
    using Error::Error;
};

// An exact identity that must hold by construction failed; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace lvint
