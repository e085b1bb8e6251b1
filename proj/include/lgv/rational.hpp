#ifndef LGV_RATIONAL_HPP
#define LGV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>

namespace lgv {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational scalar, always stored reduced with a
/// positive denominator (zero is 0/1). Backed by boost cpp_rational,
/// which maintains exactly that canonical form.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        value_ = boost::multiprecision::cpp_rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.value_ == 0) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// Renders "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    /// Parses "p" or "p/q" with integer p and positive integer q.
    static Rational parse(const std::string& text);

    /// Integer power; negative exponents require a nonzero base.
    friend Rational pow(const Rational& base, long long e) {
        if (e < 0) {
            if (base.is_zero()) throw std::domain_error("Rational: 0 to a negative power");
            return pow(Rational(1) / base, -e);
        }
        Rational acc(1), sq = base;
        for (long long k = e; k > 0; k >>= 1) {
            if (k & 1) acc *= sq;
            if (k > 1) sq *= sq;
        }
        return acc;
    }

    friend Rational abs(const Rational& a) { return a.value_ < 0 ? -a : a; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
    boost::multiprecision::cpp_rational value_;
};

inline Rational Rational::parse(const std::string& text) {
    auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw std::invalid_argument("Rational: bad integer '" + text + "'");
        return Rational(BigInt(text));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("Rational: bad fraction '" + text + "'");
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    if (d < 0) throw std::invalid_argument("Rational: negative denominator in '" + text + "'");
    return Rational(BigInt(num), d);
}

} // namespace lgv

#endif // LGV_RATIONAL_HPP
