#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sens {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal construction invariant is broken. Never expected.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using Weight = std::int64_t;

/*
 * Shortest-path distance: a non-negative integer or INFINITE.
 * INFINITE compares greater than every finite value and absorbs addition.
 */
class Distance {
public:
    constexpr Distance() noexcept = default;  // INFINITE
    constexpr explicit Distance(std::int64_t v) : value_(v) {
        if (v < 0 || v == kInf) {
            throw Error("distance must be a finite non-negative integer");
        }
    }

    static constexpr Distance infinite() noexcept { return Distance(); }

    constexpr bool finite() const noexcept { return value_ != kInf; }
    constexpr bool is_infinite() const noexcept { return value_ == kInf; }

    constexpr std::int64_t value() const {
        if (!finite()) {
            throw Error("value() on an infinite distance");
        }
        return value_;
    }

    /// Raw encoding; INFINITE maps to INT64_MAX. Handy for hashing and tables.
    constexpr std::int64_t raw() const noexcept { return value_; }

    constexpr auto operator<=>(const Distance&) const noexcept = default;

    friend constexpr Distance operator+(Distance a, Distance b) noexcept {
        if (!a.finite() || !b.finite()) {
            return Distance();
        }
        Distance d;
        d.value_ = (a.value_ > kInf - b.value_) ? kInf : a.value_ + b.value_;
        return d;
    }
    friend constexpr Distance operator+(Distance a, std::int64_t w) noexcept {
        if (!a.finite() || w < 0) {
            return Distance();
        }
        Distance d;
        d.value_ = (a.value_ > kInf - w) ? kInf : a.value_ + w;
        return d;
    }

    std::string to_string() const { return finite() ? std::to_string(value_) : std::string("inf"); }

    friend std::ostream& operator<<(std::ostream& os, Distance d) { return os << d.to_string(); }

private:
    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::int64_t value_ = kInf;
};

/// Approximation parameter epsilon = num/den > 0, kept gcd-reduced.
class RationalEps {
public:
    constexpr RationalEps(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (num <= 0 || den <= 0) {
            throw Error("epsilon must be a positive rational");
        }
        const auto g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    /// Parses "p/q" or a bare integer "p".
    static RationalEps parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return RationalEps(std::stoll(std::string(text)), 1);
            }
            return RationalEps(std::stoll(std::string(text.substr(0, slash))),
                               std::stoll(std::string(text.substr(slash + 1))));
        } catch (const std::logic_error&) {
            throw Error("malformed epsilon '" + std::string(text) + "', expected p/q");
        }
    }

    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }

    /// floor(eps * x) for x >= 0.
    constexpr std::int64_t floor_times(std::int64_t x) const noexcept { return num_ * x / den_; }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    constexpr bool operator==(const RationalEps&) const noexcept = default;

private:
    std::int64_t num_;
    std::int64_t den_;
};

/*
 * An exact rational distance estimate numerator/denominator, or INFINITE.
 * Estimates produced by one oracle all share the denominator eps.den, so
 * comparisons against integer distances never need floating point.
 */
class EccEstimate {
public:
    constexpr EccEstimate() noexcept = default;  // INFINITE

    static constexpr EccEstimate infinite() noexcept { return EccEstimate(); }

    static constexpr EccEstimate exact(Distance d, std::int64_t den = 1) {
        if (!d.finite()) {
            return infinite();
        }
        return EccEstimate(d.value() * den, den);
    }

    /// (1 + eps) * d, with denominator eps.den.
    static constexpr EccEstimate scaled(Distance d, const RationalEps& eps) {
        if (!d.finite()) {
            return infinite();
        }
        return EccEstimate(d.value() * (eps.den() + eps.num()), eps.den());
    }

    constexpr EccEstimate(std::int64_t num, std::int64_t den) : num_(num), den_(den), finite_(true) {
        if (num < 0 || den <= 0) {
            throw Error("estimate must be a non-negative rational with positive denominator");
        }
    }

    constexpr bool finite() const noexcept { return finite_; }
    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }

    /// Three-way comparison against an integer distance, exact.
    constexpr std::strong_ordering compare(Distance d) const noexcept {
        if (!finite_ || !d.finite()) {
            return finite_ == d.finite() ? std::strong_ordering::equal
                                         : (finite_ ? std::strong_ordering::less : std::strong_ordering::greater);
        }
        const __int128 lhs = num_;
        const __int128 rhs = static_cast<__int128>(d.raw()) * den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    constexpr std::strong_ordering operator<=>(const EccEstimate& o) const noexcept {
        if (!finite_ || !o.finite_) {
            return finite_ == o.finite_ ? std::strong_ordering::equal
                                        : (finite_ ? std::strong_ordering::less : std::strong_ordering::greater);
        }
        const __int128 lhs = static_cast<__int128>(num_) * o.den_;
        const __int128 rhs = static_cast<__int128>(o.num_) * den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    constexpr bool operator==(const EccEstimate& o) const noexcept { return (*this <=> o) == 0; }

    /// true <= *this <= (1 + eps) * true.
    constexpr bool sandwiches(Distance truth, const RationalEps& eps) const noexcept {
        if (!truth.finite() || !finite_) {
            return truth.finite() == finite_;
        }
        return compare(truth) >= 0 && *this <= scaled(truth, eps);
    }

    /// "num/den" or "inf".
    std::string to_string() const {
        return finite_ ? std::to_string(num_) + "/" + std::to_string(den_) : std::string("inf");
    }

    static EccEstimate parse(std::string_view text) {
        if (text == "inf") {
            return infinite();
        }
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return EccEstimate(std::stoll(std::string(text)), 1);
            }
            return EccEstimate(std::stoll(std::string(text.substr(0, slash))),
                               std::stoll(std::string(text.substr(slash + 1))));
        } catch (const std::logic_error&) {
            throw Error("malformed estimate '" + std::string(text) + "'");
        }
    }

    double to_double() const noexcept {
        return finite_ ? static_cast<double>(num_) / static_cast<double>(den_)
                       : std::numeric_limits<double>::infinity();
    }

    friend std::ostream& operator<<(std::ostream& os, const EccEstimate& e) { return os << e.to_string(); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    bool finite_ = false;
};

}  // namespace sens
