#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace superheap {

/// Exact rational number. Thin value wrapper over GMP's mpq_class that
/// keeps every value canonical (coprime parts, positive denominator) and
/// throws instead of trapping on division by zero.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}    // NOLINT(google-explicit-constructor)
    Rational(long n) : v_(n) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p" or "p/q", optional leading sign on p, q > 0.
    static Rational from_string(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    std::string to_string() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto digits_only = [](const std::string& t, size_t from) {
        if (from >= t.size()) return false;
        for (size_t i = from; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    size_t num_digits_from = (!num.empty() && num[0] == '-') ? 1 : 0;
    if (!digits_only(num, num_digits_from))
        throw std::invalid_argument("Rational: malformed number '" + text + "'");
    if (slash != std::string::npos) {
        std::string den = s.substr(slash + 1);
        if (!digits_only(den, 0))
            throw std::invalid_argument("Rational: malformed denominator '" + text + "'");
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: malformed number '" + text + "'");
        if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        v.canonicalize();
        return Rational(std::move(v));
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: malformed number '" + text + "'");
    return Rational(std::move(v));
}

}  // namespace superheap
