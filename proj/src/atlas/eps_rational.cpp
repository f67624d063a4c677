#include "mkg/atlas/eps_rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace mkg::atlas {

namespace {

[[noreturn]] void bad(const std::string& text, const std::string& why) {
    throw std::invalid_argument("cannot parse exponent '" + text + "': " + why);
}

std::int64_t parse_int(const std::string& digits, const std::string& text) {
    if (digits.empty()) bad(text, "missing digits");
    std::int64_t v = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) bad(text, "unexpected character");
        if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) bad(text, "number too large");
        v = 10 * v + (c - '0');
    }
    return v;
}

// Unsigned "p", "p/q" or "d.ddd".
Rational parse_magnitude(const std::string& body, const std::string& text) {
    if (const auto slash = body.find('/'); slash != std::string::npos) {
        const auto den = parse_int(body.substr(slash + 1), text);
        if (den == 0) bad(text, "zero denominator");
        return {parse_int(body.substr(0, slash), text), den};
    }
    if (const auto dot = body.find('.'); dot != std::string::npos) {
        const std::string frac = body.substr(dot + 1);
        if (frac.size() > 15) bad(text, "too many decimal places");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const std::string whole = body.substr(0, dot);
        return Rational(whole.empty() ? 0 : parse_int(whole, text)) + Rational(frac.empty() ? 0 : parse_int(frac, text), den);
    }
    return {parse_int(body, text)};
}

// Strips a trailing "eps" or "ε" marker; returns false when absent.
bool strip_eps(std::string& s) {
    for (const std::string marker : {"eps", "\xce\xb5"}) {
        if (s.size() >= marker.size() && s.compare(s.size() - marker.size(), marker.size(), marker) == 0) {
            s.erase(s.size() - marker.size());
            return true;
        }
    }
    return false;
}

}  // namespace

EpsRational EpsRational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) bad(text, "empty");

    // Split into terms at '+'/'-' signs that are not leading.
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '+' || s[i] == '-') {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    }

    Rational q(0);
    std::int64_t m = 0;
    bool seen_q = false;
    bool seen_m = false;
    for (std::string term : terms) {
        int sign = 1;
        if (term[0] == '+' || term[0] == '-') {
            sign = term[0] == '-' ? -1 : 1;
            term.erase(0, 1);
        }
        if (term.empty()) bad(text, "dangling sign");
        if (strip_eps(term)) {
            if (seen_m) bad(text, "repeated eps term");
            seen_m = true;
            m = sign * (term.empty() ? 1 : parse_int(term, text));
        } else {
            if (seen_q || seen_m) bad(text, "rational part must come first and only once");
            seen_q = true;
            q = Rational(sign) * parse_magnitude(term, text);
        }
    }
    return {q, m};
}

EpsRational& EpsRational::operator*=(const Rational& r) {
    const Rational scaled = r * Rational(m_);
    if (scaled.denominator() != 1)
        throw std::domain_error("eps coefficient " + std::to_string(m_) + " scaled by a non-integer result");
    q_ *= r;
    m_ = scaled.numerator();
    return *this;
}

int EpsRational::sign() const noexcept {
    if (q_.numerator() != 0) return q_.numerator() > 0 ? 1 : -1;
    return m_ > 0 ? 1 : (m_ < 0 ? -1 : 0);
}

std::string to_fraction(const Rational& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_string(const EpsRational& x) {
    std::string out = x.q().denominator() == 1 ? std::to_string(x.q().numerator()) : to_fraction(x.q());
    if (x.m() != 0) out += (x.m() > 0 ? "+" : "-") + std::to_string(x.m() > 0 ? x.m() : -x.m()) + "\xce\xb5";
    return out;
}

std::ostream& operator<<(std::ostream& out, const EpsRational& x) { return out << to_string(x); }

EpsRational min(const EpsRational& a, const EpsRational& b) { return b < a ? b : a; }
EpsRational max(const EpsRational& a, const EpsRational& b) { return a < b ? b : a; }

}  // namespace mkg::atlas
