#pragma once

#include <stdexcept>
#include <string>

namespace planepart {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration would exceed the configured weight or count cap.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

// A binomial product kept a negative exponent on a (1 - t^b) factor at q=0,
// so the q=0 specialization is not a polynomial.
struct NotPolynomialAtQ0 : Error {
    explicit NotPolynomialAtQ0(const std::string& what) : Error(what) {}
};

// Requested box (i,j) lies outside the support of the plane partition.
struct OutOfSupport : Error {
    explicit OutOfSupport(const std::string& what) : Error(what) {}
};

// A tableau pair fails the structural preconditions of a bijection.
struct InvalidPair : Error {
    explicit InvalidPair(const std::string& what) : Error(what) {}
};

}  // namespace planepart
