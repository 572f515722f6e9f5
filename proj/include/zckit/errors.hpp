#pragma once

#include <stdexcept>
#include <string>

namespace zckit {

// Base type for everything the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Root index shares a factor with the sequence length (or is 0 mod length).
class InvalidRoot : public Error {
public:
    using Error::Error;
};

// A modulus that was required to be an odd prime is not one.
class NotPrime : public Error {
public:
    using Error::Error;
};

// Asked to invert a residue that is 0 modulo the modulus.
class ZeroResidue : public Error {
public:
    using Error::Error;
};

// Two sequences that must share a length do not.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

// Operation defined only for one residue class of the length (e.g. N = 3 mod 4).
class WrongResidueClass : public Error {
public:
    using Error::Error;
};

// Malformed file, short read, or failed stream.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace zckit
