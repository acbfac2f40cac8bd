#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cfn {

/// Exact fraction with a positive denominator, always kept in lowest terms.
/// All flow values, ratios and circular flow numbers are carried as
/// Rational; nothing in the library goes through floating point.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const { return raw(-num_, den_); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Comparisons cross-multiply in 128 bits; denominators are positive.
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    bool is_integer() const { return den_ == 1; }

    /// Renders "p" when the value is integral, "p/q" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p" or "p/q" (q > 0 after sign normalization).
    static std::optional<Rational> parse(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos) {
                std::size_t pos = 0;
                long long n = std::stoll(std::string(s), &pos);
                if (pos != s.size()) return std::nullopt;
                return Rational(n);
            }
            std::size_t pos = 0;
            std::string np(s.substr(0, slash)), dp(s.substr(slash + 1));
            long long n = std::stoll(np, &pos);
            if (pos != np.size()) return std::nullopt;
            long long d = std::stoll(dp, &pos);
            if (pos != dp.size() || d == 0) return std::nullopt;
            return Rational(n, d);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    static Rational raw(long long n, long long d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

}  // namespace cfn
