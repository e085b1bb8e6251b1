#ifndef LGV_POLYNOMIAL_HPP
#define LGV_POLYNOMIAL_HPP

#include "lgv/rational.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace lgv {

/// Dense univariate polynomial over Rational. Coefficient i belongs to x^i.
/// The zero polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& v) { return Polynomial({v}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return c_; }

    /// Coefficient of x^i; zero beyond the stored range.
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }

    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        std::vector<Rational> c = p.c_;
        for (auto& v : c) v *= s;
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Drops all terms of degree >= bound.
    Polynomial truncated(int bound) const {
        if (bound <= 0) return Polynomial();
        std::vector<Rational> c(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), static_cast<std::size_t>(bound)));
        return Polynomial(std::move(c));
    }

    /// x^d * p(1/x) for a given d >= degree: reverses the padded coefficients.
    Polynomial reversed(int d) const {
        std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
        for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = coeff(d - i);
        return Polynomial(std::move(c));
    }

    /// Human-readable form like "1 - 3x + x^2"; "0" for the zero polynomial.
    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Rational& v = c_[i];
            if (v.is_zero()) continue;
            Rational mag = abs(v);
            if (first) {
                if (v.sign() < 0) os << "-";
                first = false;
            } else {
                os << (v.sign() < 0 ? " - " : " + ");
            }
            bool unit = (mag == Rational(1));
            if (i == 0 || !unit) os << mag.str();
            if (i >= 1) {
                os << var;
                if (i >= 2) os << "^" << i;
            }
        }
        return first ? "0" : os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace lgv

#endif // LGV_POLYNOMIAL_HPP
