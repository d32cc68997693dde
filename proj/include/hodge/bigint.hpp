#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hodge {

/// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
/// Magnitudes in this project stay small (hundreds of bits), so schoolbook
/// arithmetic is sufficient.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);
    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    int signum() const { return sign_; }

    bool fits_int64() const;
    long long to_int64() const;  // throws std::overflow_error if out of range
    double to_double() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    /// *this += a * b without materialising the product.
    void add_mul(const BigInt& a, const BigInt& b);

    /// Truncated division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    /// Quotient of an exact division; throws std::logic_error on remainder.
    BigInt div_exact(const BigInt& d) const;

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    friend int cmp_abs(const BigInt& a, const BigInt& b);

private:
    int sign_ = 0;                  // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian, no leading zero limbs

    void trim();
    static void add_abs(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void sub_abs(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_abs(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

}  // namespace hodge
