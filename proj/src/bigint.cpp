#include "slweb/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace slweb {

BigInt::BigInt(std::int64_t v) {
    neg_ = v < 0;
    std::uint64_t u = neg_ ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    while (u) {
        mag_.push_back(static_cast<std::uint32_t>(u));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = 0;
        if (s < 0) {
            s += (std::int64_t(1) << 32);
            borrow = 1;
        }
        r[i] = static_cast<std::uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.neg_ = neg_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = sub_mag(mag_, o.mag_);
            r.neg_ = neg_;
        } else {
            r.mag_ = sub_mag(o.mag_, mag_);
            r.neg_ = o.neg_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            std::uint64_t cur = r.mag_[i + j] +
                                static_cast<std::uint64_t>(mag_[i]) * o.mag_[j] + carry;
            r.mag_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry) {
            std::uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.neg_ = neg_ != o.neg_;
    r.trim();
    return r;
}

BigInt BigInt::div_exact(const BigInt& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (is_zero()) return BigInt();
    // long division of magnitudes, 32 bits at a time
    std::vector<std::uint32_t> q(mag_.size(), 0);
    std::vector<std::uint32_t> rem;  // little-endian running remainder
    for (size_t i = mag_.size(); i-- > 0;) {
        rem.insert(rem.begin(), mag_[i]);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // binary search the quotient digit
        std::uint64_t lo = 0, hi = 0xffffffffull;
        while (lo < hi) {
            std::uint64_t mid = (lo + hi + 1) >> 1;
            BigInt d;
            d.mag_ = o.mag_;
            BigInt prod = d * BigInt(static_cast<std::int64_t>(mid));
            if (cmp_mag(prod.mag_, rem) <= 0)
                lo = mid;
            else
                hi = mid - 1;
        }
        q[i] = static_cast<std::uint32_t>(lo);
        if (lo) {
            BigInt d;
            d.mag_ = o.mag_;
            BigInt prod = d * BigInt(static_cast<std::int64_t>(lo));
            rem = sub_mag(rem, prod.mag_);
        }
    }
    if (!rem.empty()) throw std::domain_error("division is not exact");
    BigInt r;
    r.mag_ = std::move(q);
    r.neg_ = neg_ != o.neg_;
    r.trim();
    return r;
}

std::string BigInt::str() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        std::uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int i = 0; i < 9; ++i) {
            digits += static_cast<char>('0' + rem % 10);
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits += '-';
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::uint64_t BigInt::mod(std::uint64_t p) const {
    unsigned __int128 r = 0;
    for (size_t i = mag_.size(); i-- > 0;) r = ((r << 32) + mag_[i]) % p;
    std::uint64_t v = static_cast<std::uint64_t>(r);
    if (neg_ && v) v = p - v;
    return v;
}

}  // namespace slweb
