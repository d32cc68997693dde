#include "hodge/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hodge {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int cmp_abs(const BigInt& a, const BigInt& b) {
    if (a.mag_.size() != b.mag_.size()) return a.mag_.size() < b.mag_.size() ? -1 : 1;
    for (std::size_t i = a.mag_.size(); i-- > 0;)
        if (a.mag_[i] != b.mag_[i]) return a.mag_[i] < b.mag_[i] ? -1 : 1;
    return 0;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = cmp_abs(a, b);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

void BigInt::add_abs(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t s = carry + a[i] + (i < b.size() ? b[i] : 0);
        a[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) a.push_back(static_cast<std::uint32_t>(carry));
}

// Requires |a| >= |b|.
void BigInt::sub_abs(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = d < 0 ? 1 : 0;
        a[i] = static_cast<std::uint32_t>(d + (borrow ? static_cast<std::int64_t>(kBase) : 0));
    }
}

std::vector<std::uint32_t> BigInt::mul_abs(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t s = ai * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t s = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) { *this = rhs; return *this; }
    if (sign_ == rhs.sign_) {
        add_abs(mag_, rhs.mag_);
        return *this;
    }
    int c = cmp_abs(*this, rhs);
    if (c == 0) { sign_ = 0; mag_.clear(); return *this; }
    if (c > 0) {
        sub_abs(mag_, rhs.mag_);
    } else {
        std::vector<std::uint32_t> tmp = rhs.mag_;
        sub_abs(tmp, mag_);
        mag_ = std::move(tmp);
        sign_ = rhs.sign_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    BigInt neg = rhs;
    neg.sign_ = -neg.sign_;
    return *this += neg;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_abs(a.mag_, b.mag_);
    if (r.mag_.empty()) r.sign_ = 0;
    return r;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    *this = *this * rhs;
    return *this;
}

void BigInt::add_mul(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return;
    // Single-limb operands dominate in practice; fold without temporaries.
    if (a.mag_.size() == 1 && b.mag_.size() == 1) {
        std::uint64_t p = static_cast<std::uint64_t>(a.mag_[0]) * b.mag_[0];
        BigInt prod;
        prod.sign_ = a.sign_ * b.sign_;
        prod.mag_.push_back(static_cast<std::uint32_t>(p));
        if (p >> 32) prod.mag_.push_back(static_cast<std::uint32_t>(p >> 32));
        *this += prod;
        return;
    }
    *this += a * b;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t u = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return u <= 0x7fffffffffffffffull;
    return u <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt::to_int64: out of range");
    std::uint64_t u = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
}

double BigInt::to_double() const {
    double r = 0.0;
    for (std::size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -r : r;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt::from_string: empty");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt::from_string: no digits");
    BigInt r;
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("BigInt::from_string: bad digit");
        r *= ten;
        r += BigInt(s[i] - '0');
    }
    if (neg) r.sign_ = -r.sign_;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt::divmod: division by zero");
    int c = cmp_abs(a, b);
    if (c < 0) {
        q = BigInt();
        r = a;
        return;
    }
    if (b.mag_.size() == 1) {
        // short division
        std::uint64_t d = b.mag_[0];
        std::vector<std::uint32_t> qm(a.mag_.size());
        std::uint64_t rem = 0;
        for (std::size_t i = a.mag_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a.mag_[i];
            qm[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        q = BigInt();
        q.mag_ = std::move(qm);
        q.sign_ = a.sign_ * b.sign_;
        q.trim();
        r = BigInt(static_cast<long long>(rem));
        if (r.sign_ != 0) r.sign_ = a.sign_;
        return;
    }

    // Knuth algorithm D on normalized magnitudes.
    int shift = 0;
    std::uint32_t top = b.mag_.back();
    while (!(top & 0x80000000u)) {
        top <<= 1;
        ++shift;
    }
    auto shl = [shift](const std::vector<std::uint32_t>& v) {
        std::vector<std::uint32_t> out(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i] |= static_cast<std::uint32_t>((static_cast<std::uint64_t>(v[i]) << shift));
            if (shift)
                out[i + 1] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) >> (32 - shift));
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<std::uint32_t> u = shl(a.mag_);
    std::vector<std::uint32_t> v = shl(b.mag_);
    std::size_t n = v.size(), m = u.size() - n;
    u.resize(u.size() + 1, 0);
    std::vector<std::uint32_t> qm(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = num / v[n - 1];
        std::uint64_t rhat = num % v[n - 1];
        while (qhat >= kBase ||
               (n >= 2 && qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2]))) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // multiply-subtract
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) - borrow -
                             static_cast<std::int64_t>(p & 0xffffffffu);
            borrow = t < 0 ? 1 : 0;
            u[i + j] = static_cast<std::uint32_t>(t + (borrow ? static_cast<std::int64_t>(kBase) : 0));
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) - borrow - static_cast<std::int64_t>(carry);
        if (t < 0) {
            // qhat was one too large: add back
            u[j + n] = static_cast<std::uint32_t>(t + static_cast<std::int64_t>(kBase));
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(s);
                c2 = s >> 32;
            }
            u[j + n] = static_cast<std::uint32_t>(u[j + n] + c2);
        } else {
            u[j + n] = static_cast<std::uint32_t>(t);
        }
        qm[j] = static_cast<std::uint32_t>(qhat);
    }
    // denormalize remainder
    std::vector<std::uint32_t> rm(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        rm[i] = u[i] >> shift;
        if (shift && i + 1 < u.size())
            rm[i] |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[i + 1]) << (32 - shift));
    }
    q = BigInt();
    q.mag_ = std::move(qm);
    q.sign_ = a.sign_ * b.sign_;
    q.trim();
    r = BigInt();
    r.mag_ = std::move(rm);
    r.sign_ = a.sign_;
    r.trim();
}

BigInt BigInt::div_exact(const BigInt& d) const {
    BigInt q, r;
    divmod(*this, d, q, r);
    if (!r.is_zero()) throw std::logic_error("BigInt::div_exact: nonzero remainder");
    return q;
}

}  // namespace hodge
