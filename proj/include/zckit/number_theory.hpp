#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zckit/errors.hpp"

namespace zckit {

// (a * b) mod m without overflow, any 64-bit operands.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// (base ^ exp) mod m by square-and-multiply.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Least non-negative residue of a mod m (C's % is truncated, this one floors).
std::uint64_t floor_mod(std::int64_t a, std::uint64_t m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs. Rejects 2 on purpose:
// everything downstream works in odd characteristic.
bool is_odd_prime(std::uint64_t n);

// An odd prime modulus, validated once at construction.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t value);

    std::uint64_t value() const { return value_; }
    std::uint64_t residue_mod4() const { return value_ % 4; }

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    std::uint64_t value_;
};

// Inverse of u modulo m by extended Euclid. Throws ZeroResidue when m | u.
std::uint64_t mod_inverse(std::int64_t u, const PrimeModulus& m);

// Same, but for an arbitrary modulus; throws ZeroResidue unless gcd(a, m) == 1.
std::uint64_t coprime_inverse(std::int64_t a, std::uint64_t m);

// Legendre symbol (n | m) via Euler's criterion: 0, +1 or -1.
int legendre_symbol(std::int64_t n, const PrimeModulus& m);

// Bit-packed table of Legendre symbols for residues 1 .. m-1.
// Bit n-1 (LSB-first within each byte) is 1 exactly when (n | m) = +1.
class LegendreTable {
public:
    const PrimeModulus& modulus() const { return modulus_; }

    // Works for any integer; residue 0 reports 0.
    int lookup(std::int64_t n) const;

    std::uint64_t payload_bit_count() const { return modulus_.value() - 1; }
    const std::vector<std::uint8_t>& payload() const { return bits_; }

    // Format: magic "ZCLT", u32 LE version (= 1), u64 LE modulus,
    // then ceil((m-1)/8) payload bytes.
    void serialize(std::ostream& out) const;
    static LegendreTable deserialize(std::istream& in);

    void save(const std::string& path) const;
    static LegendreTable load(const std::string& path);

    friend bool operator==(const LegendreTable&, const LegendreTable&) = default;

private:
    friend LegendreTable build_legendre_table(const PrimeModulus&);
    LegendreTable(PrimeModulus m, std::vector<std::uint8_t> bits);

    PrimeModulus modulus_;
    std::vector<std::uint8_t> bits_;
};

// One pass over squares k^2, k = 1 .. (m-1)/2; O(m) time, (m-1) payload bits.
LegendreTable build_legendre_table(const PrimeModulus& m);

// g_m = sum_n exp(+j 2 pi n^2 / m): sqrt(m) for m = 1 (mod 4), j sqrt(m) otherwise.
std::complex<double> quadratic_gauss_sum(const PrimeModulus& m);

// eta_m = g_m / (legendre-normalized sqrt(m)): 1 for m = 1 (mod 4), -j otherwise.
std::complex<double> eta_coefficient(const PrimeModulus& m);

} // namespace zckit
