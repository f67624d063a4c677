#pragma once

// Exact numbers q + m eps, with q rational, m an integer and eps a fixed
// positive infinitesimal. Ordering is lexicographic in (q, m).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/rational.hpp>

namespace mkg::atlas {

using Rational = boost::rational<std::int64_t>;

class EpsRational {
public:
    EpsRational() = default;
    EpsRational(Rational q, std::int64_t m = 0) : q_(q), m_(m) {}
    EpsRational(std::int64_t p, std::int64_t d = 1, std::int64_t m = 0) : q_(p, d), m_(m) {}

    static EpsRational eps(std::int64_t m = 1) { return EpsRational(Rational(0), m); }

    /// Accepts "p", "p/q", decimals such as "0.26", each optionally followed by
    /// "+eps", "-eps", "+3eps", "+1ε" and so on; a bare "eps" or "ε" is 0 + eps.
    /// Throws std::invalid_argument on anything else.
    static EpsRational parse(const std::string& text);

    const Rational& q() const noexcept { return q_; }
    std::int64_t m() const noexcept { return m_; }

    EpsRational operator-() const { return {-q_, -m_}; }
    EpsRational& operator+=(const EpsRational& o) {
        q_ += o.q_;
        m_ += o.m_;
        return *this;
    }
    EpsRational& operator-=(const EpsRational& o) { return *this += -o; }
    /// Throws std::domain_error if the eps part would stop being an integer.
    EpsRational& operator*=(const Rational& r);

    friend EpsRational operator+(EpsRational a, const EpsRational& b) { return a += b; }
    friend EpsRational operator-(EpsRational a, const EpsRational& b) { return a -= b; }
    friend EpsRational operator*(const Rational& r, EpsRational a) { return a *= r; }
    friend EpsRational operator*(std::int64_t k, EpsRational a) { return a *= Rational(k); }

    friend bool operator==(const EpsRational&, const EpsRational&) = default;
    friend std::strong_ordering operator<=>(const EpsRational& a, const EpsRational& b) {
        if (a.q_ < b.q_) return std::strong_ordering::less;
        if (b.q_ < a.q_) return std::strong_ordering::greater;
        return a.m_ <=> b.m_;
    }

    int sign() const noexcept;

private:
    Rational q_{0};
    std::int64_t m_ = 0;
};

/// "p/q" (or "p" for integers), followed by "+mε" / "-mε" when m != 0.
std::string to_string(const EpsRational& x);
/// Always "p/q", even for integers.
std::string to_fraction(const Rational& q);
std::ostream& operator<<(std::ostream& out, const EpsRational& x);

EpsRational min(const EpsRational& a, const EpsRational& b);
EpsRational max(const EpsRational& a, const EpsRational& b);

}  // namespace mkg::atlas
