#include "zckit/number_theory.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace zckit {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1)
            acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t floor_mod(std::int64_t a, std::uint64_t m) {
    __int128 r = static_cast<__int128>(a) % static_cast<__int128>(m);
    if (r < 0)
        r += static_cast<__int128>(m);
    return static_cast<std::uint64_t>(r);
}

namespace {

// One strong-probable-prime round to base a. n odd, n - 1 = d * 2^s.
bool sprp(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    a %= n;
    if (a == 0)
        return true;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

bool is_odd_prime(std::uint64_t n) {
    if (n < 3 || n % 2 == 0)
        return false;
    // This base set decides primality for every n < 3.3e24.
    constexpr std::array<std::uint64_t, 12> bases = {2,  3,  5,  7,  11, 13,
                                                     17, 19, 23, 29, 31, 37};
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : bases) {
        if (n == a)
            return true;
        if (!sprp(n, a, d, s))
            return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t value) : value_(value) {
    if (!is_odd_prime(value))
        throw NotPrime("modulus " + std::to_string(value) + " is not an odd prime");
}

std::uint64_t coprime_inverse(std::int64_t a, std::uint64_t m) {
    std::uint64_t r = floor_mod(a, m);
    if (r == 0)
        throw ZeroResidue("cannot invert 0 mod " + std::to_string(m));
    // Extended Euclid on (m, r); only the coefficient of r is tracked.
    std::int64_t t0 = 0, t1 = 1;
    std::uint64_t r0 = m, r1 = r;
    while (r1 != 0) {
        std::uint64_t q = r0 / r1;
        std::int64_t t2 = t0 - static_cast<std::int64_t>(q) * t1;
        t0 = t1;
        t1 = t2;
        std::uint64_t r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    if (r0 != 1)
        throw ZeroResidue("residue " + std::to_string(r) + " is not invertible mod " +
                          std::to_string(m));
    return floor_mod(t0, m);
}

std::uint64_t mod_inverse(std::int64_t u, const PrimeModulus& m) {
    return coprime_inverse(u, m.value());
}

int legendre_symbol(std::int64_t n, const PrimeModulus& m) {
    std::uint64_t r = floor_mod(n, m.value());
    if (r == 0)
        return 0;
    std::uint64_t e = pow_mod(r, (m.value() - 1) / 2, m.value());
    return e == 1 ? 1 : -1;
}

LegendreTable::LegendreTable(PrimeModulus m, std::vector<std::uint8_t> bits)
    : modulus_(m), bits_(std::move(bits)) {}

int LegendreTable::lookup(std::int64_t n) const {
    std::uint64_t r = floor_mod(n, modulus_.value());
    if (r == 0)
        return 0;
    std::uint64_t bit = r - 1;
    bool qr = (bits_[bit / 8] >> (bit % 8)) & 1;
    return qr ? 1 : -1;
}

LegendreTable build_legendre_table(const PrimeModulus& m) {
    std::uint64_t p = m.value();
    std::vector<std::uint8_t> bits((p - 1 + 7) / 8, 0);
    // k and p-k square to the same residue, so k = 1 .. (p-1)/2 hits every QR once.
    for (std::uint64_t k = 1; k <= (p - 1) / 2; ++k) {
        std::uint64_t r = mul_mod(k, k, p);
        std::uint64_t bit = r - 1;
        bits[bit / 8] |= static_cast<std::uint8_t>(1u << (bit % 8));
    }
    return LegendreTable(m, std::move(bits));
}

namespace {

constexpr char kMagic[4] = {'Z', 'C', 'L', 'T'};
constexpr std::uint32_t kVersion = 1;

void put_u32_le(std::ostream& out, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i)
        b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 4);
}

void put_u64_le(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

std::uint32_t get_u32_le(std::istream& in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        throw IoError("short read in table header");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64_le(std::istream& in) {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8))
        throw IoError("short read in table header");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

} // namespace

void LegendreTable::serialize(std::ostream& out) const {
    out.write(kMagic, 4);
    put_u32_le(out, kVersion);
    put_u64_le(out, modulus_.value());
    out.write(reinterpret_cast<const char*>(bits_.data()),
              static_cast<std::streamsize>(bits_.size()));
    if (!out)
        throw IoError("failed to write Legendre table");
}

LegendreTable LegendreTable::deserialize(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw IoError("bad magic; not a Legendre table");
    std::uint32_t version = get_u32_le(in);
    if (version != kVersion)
        throw IoError("unsupported table version " + std::to_string(version));
    std::uint64_t p = get_u64_le(in);
    if (!is_odd_prime(p))
        throw IoError("table modulus " + std::to_string(p) + " is not an odd prime");
    std::vector<std::uint8_t> bits((p - 1 + 7) / 8);
    if (!in.read(reinterpret_cast<char*>(bits.data()),
                 static_cast<std::streamsize>(bits.size())))
        throw IoError("short read in table payload");
    // Exactly half of the nonzero residues are quadratic residues.
    std::uint64_t ones = 0;
    for (std::uint8_t b : bits)
        ones += static_cast<std::uint64_t>(std::popcount(b));
    if (ones != (p - 1) / 2)
        throw IoError("corrupt table payload: QR count " + std::to_string(ones) +
                      ", expected " + std::to_string((p - 1) / 2));
    return LegendreTable(PrimeModulus(p), std::move(bits));
}

void LegendreTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    serialize(out);
}

LegendreTable LegendreTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    return deserialize(in);
}

std::complex<double> quadratic_gauss_sum(const PrimeModulus& m) {
    double root = std::sqrt(static_cast<double>(m.value()));
    if (m.residue_mod4() == 1)
        return {root, 0.0};
    return {0.0, root};
}

std::complex<double> eta_coefficient(const PrimeModulus& m) {
    if (m.residue_mod4() == 1)
        return {1.0, 0.0};
    return {0.0, -1.0};
}

} // namespace zckit
