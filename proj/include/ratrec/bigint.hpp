#pragma once

// Arbitrary-precision signed integer on base-2^32 limbs.
// Sign-magnitude: limbs are little-endian with no leading zeros; zero has an
// empty limb vector and sign 0. Division truncates toward zero and the
// remainder carries the dividend's sign.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ratrec {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid overflow on LLONG_MIN
        unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        mag_.push_back(static_cast<std::uint32_t>(m));
        if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
    }

    explicit BigInt(std::string_view text) { *this = from_string(text); }

    // Parses an optional sign followed by decimal digits.
    static BigInt from_string(std::string_view text) {
        std::size_t pos = 0;
        int sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos == text.size())
            throw std::invalid_argument("BigInt: no digits in \"" + std::string(text) + "\"");
        BigInt out;
        std::size_t chunk_start = pos;
        for (; pos < text.size(); ++pos) {
            if (text[pos] < '0' || text[pos] > '9')
                throw std::invalid_argument("BigInt: invalid digit at position " +
                                            std::to_string(pos));
        }
        // consume in blocks of 9 digits: out = out*10^9 + block
        pos = chunk_start;
        while (pos < text.size()) {
            std::size_t take = std::min<std::size_t>(9, text.size() - pos);
            std::uint32_t block = 0;
            std::uint32_t scale = 1;
            for (std::size_t i = 0; i < take; ++i) {
                block = block * 10 + static_cast<std::uint32_t>(text[pos + i] - '0');
                scale *= 10;
            }
            out.mul_limb_inplace(scale);
            out.add_limb_inplace(block);
            pos += take;
        }
        if (!out.mag_.empty()) out.sign_ = sign;
        return out;
    }

    static BigInt pow10(std::size_t k) {
        BigInt out(1);
        while (k >= 9) {
            out.mul_limb_inplace(1000000000u);
            k -= 9;
        }
        std::uint32_t rest = 1;
        while (k--) rest *= 10;
        if (rest != 1) out.mul_limb_inplace(rest);
        return out;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    BigInt abs() const {
        BigInt out = *this;
        if (out.sign_ < 0) out.sign_ = 1;
        return out;
    }

    BigInt operator-() const {
        BigInt out = *this;
        out.sign_ = -out.sign_;
        return out;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt out;
        if (a.sign_ == b.sign_) {
            out.mag_ = add_mag(a.mag_, b.mag_);
            out.sign_ = a.sign_;
            return out;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return out;  // zero
        if (c > 0) {
            out.mag_ = sub_mag(a.mag_, b.mag_);
            out.sign_ = a.sign_;
        } else {
            out.mag_ = sub_mag(b.mag_, a.mag_);
            out.sign_ = b.sign_;
        }
        return out;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt out;
        out.mag_ = mul_mag(a.mag_, b.mag_);
        out.sign_ = a.sign_ * b.sign_;
        return out;
    }

    // Truncated division: quotient toward zero, remainder keeps dividend sign,
    // |remainder| < |divisor|.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        std::vector<std::uint32_t> q, r;
        divmod_mag(a.mag_, b.mag_, q, r);
        quot.mag_ = std::move(q);
        rem.mag_ = std::move(r);
        quot.sign_ = quot.mag_.empty() ? 0 : a.sign_ * b.sign_;
        rem.sign_ = rem.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
    BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

    friend BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> work = mag_;
        std::string digits;
        while (!work.empty()) {
            std::uint32_t rem = divmod_limb_inplace(work, 1000000000u);
            if (work.empty()) {
                // most significant block: no zero padding
                digits = std::to_string(rem) + digits;
            } else {
                std::string block = std::to_string(rem);
                digits = std::string(9 - block.size(), '0') + block + digits;
            }
        }
        return sign_ < 0 ? "-" + digits : digits;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

    std::optional<long long> to_long_long() const {
        if (mag_.size() > 2) return std::nullopt;
        unsigned long long m = 0;
        if (mag_.size() >= 1) m = mag_[0];
        if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        if (sign_ >= 0) {
            if (m > 0x7FFFFFFFFFFFFFFFULL) return std::nullopt;
            return static_cast<long long>(m);
        }
        if (m > 0x8000000000000000ULL) return std::nullopt;
        return -static_cast<long long>(m - 1) - 1;
    }

    std::optional<unsigned long long> to_unsigned_long_long() const {
        if (sign_ < 0 || mag_.size() > 2) return std::nullopt;
        unsigned long long m = 0;
        if (mag_.size() >= 1) m = mag_[0];
        if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        return m;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> out;
        out.reserve(big.size() + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
            out.push_back(static_cast<std::uint32_t>(s));
            carry = s >> 32;
        }
        if (carry) out.push_back(static_cast<std::uint32_t>(carry));
        return out;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out;
        out.reserve(a.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(a[i]) -
                             (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0) - borrow;
            borrow = d < 0;
            if (d < 0) d += (1LL << 32);
            out.push_back(static_cast<std::uint32_t>(d));
        }
        trim(out);
        return out;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = out[i + j] + ai * b[j] + carry;
                out[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = out[k] + carry;
                out[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        trim(out);
        return out;
    }

    static std::uint32_t divmod_limb_inplace(std::vector<std::uint32_t>& m, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(m);
        return static_cast<std::uint32_t>(rem);
    }

    // magnitude-only helpers for the base-10^9 string codec
    void mul_limb_inplace(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
        trim(mag_);
        if (mag_.empty()) sign_ = 0;
    }

    void add_limb_inplace(std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < mag_.size(); ++i) {
            std::uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
        if (!mag_.empty() && sign_ == 0) sign_ = 1;
        trim(mag_);
        if (mag_.empty()) sign_ = 0;
    }

    // Knuth algorithm D on 32-bit digits (Hacker's Delight divmnu).
    static void divmod_mag(const std::vector<std::uint32_t>& u,
                           const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r) {
        q.clear();
        r.clear();
        if (cmp_mag(u, v) < 0) {
            r = u;
            return;
        }
        if (v.size() == 1) {
            q = u;
            std::uint32_t rem = divmod_limb_inplace(q, v[0]);
            if (rem) r.push_back(rem);
            return;
        }
        const std::uint64_t base = 1ULL << 32;
        const std::size_t n = v.size();
        const std::size_t m = u.size();
        unsigned shift = 0;
        while (((static_cast<std::uint64_t>(v[n - 1]) << shift) & 0x80000000ULL) == 0) ++shift;

        std::vector<std::uint32_t> vn(n), un(m + 1);
        if (shift == 0) {
            vn = v;
            std::copy(u.begin(), u.end(), un.begin());
            un[m] = 0;
        } else {
            for (std::size_t i = n; i-- > 1;)
                vn[i] = static_cast<std::uint32_t>((v[i] << shift) | (v[i - 1] >> (32 - shift)));
            vn[0] = static_cast<std::uint32_t>(v[0] << shift);
            un[m] = u[m - 1] >> (32 - shift);
            for (std::size_t i = m; i-- > 1;)
                un[i] = static_cast<std::uint32_t>((u[i] << shift) | (u[i - 1] >> (32 - shift)));
            un[0] = static_cast<std::uint32_t>(u[0] << shift);
        }

        q.assign(m - n + 1, 0);
        for (std::size_t j = m - n + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
            std::uint64_t qhat = num / vn[n - 1];
            std::uint64_t rhat = num % vn[n - 1];
            while (qhat >= base ||
                   qhat * vn[n - 2] > base * rhat + un[j + n - 2]) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= base) break;
            }
            // multiply and subtract
            std::int64_t borrow = 0;
            std::int64_t t = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * vn[i];
                t = static_cast<std::int64_t>(un[i + j]) - borrow -
                    static_cast<std::int64_t>(p & 0xFFFFFFFFu);
                un[i + j] = static_cast<std::uint32_t>(t);
                borrow = static_cast<std::int64_t>(p >> 32) - (t >> 32);
            }
            t = static_cast<std::int64_t>(un[j + n]) - borrow;
            un[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
            if (t < 0) {
                // estimate was one too high; add divisor back
                --q[j];
                std::uint64_t carry = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s = static_cast<std::uint64_t>(un[i + j]) + vn[i] + carry;
                    un[i + j] = static_cast<std::uint32_t>(s);
                    carry = s >> 32;
                }
                un[j + n] += static_cast<std::uint32_t>(carry);
            }
        }
        trim(q);
        r.assign(n, 0);
        if (shift == 0) {
            for (std::size_t i = 0; i < n; ++i) r[i] = un[i];
        } else {
            for (std::size_t i = 0; i < n - 1; ++i)
                r[i] = static_cast<std::uint32_t>((un[i] >> shift) | (un[i + 1] << (32 - shift)));
            r[n - 1] = un[n - 1] >> shift;
        }
        trim(r);
    }
};

}  // namespace ratrec
