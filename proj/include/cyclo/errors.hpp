#pragma once

#include <stdexcept>

namespace cyclo {

// Base class for every failure the library reports. Callers that only want
// "did it work" can catch this; the subclasses exist so tests and the CLI can
// tell precondition violations apart.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p or N failed a primality check.
struct NotPrimeError : Error {
    using Error::Error;
};

// N != 1 (mod p), so the degree-p subfield setup does not exist.
struct CongruenceError : Error {
    using Error::Error;
};

// argument is divisible by N where a unit mod N was required
struct NotUnitError : Error {
    using Error::Error;
};

// argument outside the documented domain (index range, size limit, ...)
struct RangeError : Error {
    using Error::Error;
};

// the trivial character or omega was passed where the construction excludes it
struct ExcludedCharacterError : Error {
    using Error::Error;
};

// jacobi_sum with chi^i, chi^j or chi^{i+j} trivial
struct DegenerateCharactersError : Error {
    using Error::Error;
};

// element's N-adic valuation differs from the declared one
struct ValuationError : Error {
    using Error::Error;
};

// an internal invariant broke; indicates a bug, not bad input
struct InternalError : Error {
    using Error::Error;
};

} // namespace cyclo
