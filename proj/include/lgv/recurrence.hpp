#ifndef LGV_RECURRENCE_HPP
#define LGV_RECURRENCE_HPP

#include "lgv/polynomial.hpp"
#include "lgv/rational.hpp"

#include <stdexcept>
#include <vector>

namespace lgv {

/// f(n) as a rational generating function P(x)/Q(x) with deg P < deg Q
/// and Q(0) = 1.
struct RationalGF {
    Polynomial numerator;
    Polynomial denominator;
};

/// Homogeneous linear recurrence with constant coefficients,
///   f(n+d) + a_1 f(n+d-1) + ... + a_d f(n) = 0,
/// together with the initial values f(0..d-1). Requires a_d != 0 when
/// d >= 1, which is what makes the backward extension to negative
/// indices well defined. The order-0 recurrence is the identically-zero
/// function and cannot be extended backward.
class LinearRecurrence {
public:
    LinearRecurrence() = default;

    LinearRecurrence(std::vector<Rational> alphas, std::vector<Rational> initial)
        : alpha_(std::move(alphas)), init_(std::move(initial)) {
        if (alpha_.size() != init_.size())
            throw std::invalid_argument("LinearRecurrence: need exactly d initial values");
        if (!alpha_.empty() && alpha_.back().is_zero())
            throw std::invalid_argument("LinearRecurrence: trailing coefficient a_d must be nonzero");
    }

    /// Builds the recurrence whose characteristic polynomial is p (monic,
    /// p(0) != 0): a_i is the coefficient of x^{d-i} in p.
    static LinearRecurrence from_char_poly(const Polynomial& p, std::vector<Rational> initial) {
        if (!p.is_monic())
            throw std::invalid_argument("from_char_poly: polynomial must be monic");
        const int d = p.degree();
        if (p.coeff(0).is_zero())
            throw std::invalid_argument("from_char_poly: constant term vanishes (a_d would be zero)");
        if (static_cast<int>(initial.size()) != d)
            throw std::invalid_argument("from_char_poly: expected d initial values");
        std::vector<Rational> alphas(static_cast<std::size_t>(d));
        for (int i = 1; i <= d; ++i)
            alphas[static_cast<std::size_t>(i - 1)] = p.coeff(d - i);
        return LinearRecurrence(std::move(alphas), std::move(initial));
    }

    int order() const { return static_cast<int>(alpha_.size()); }
    const std::vector<Rational>& coefficients() const { return alpha_; }
    const std::vector<Rational>& initial_values() const { return init_; }

    /// f(n) for n >= 0, by forward iteration. The order-0 recurrence is 0.
    Rational eval_forward(long long n) const {
        if (n < 0) throw std::invalid_argument("eval_forward: negative index");
        const int d = order();
        if (d == 0) return Rational(0);
        if (n < d) return init_[static_cast<std::size_t>(n)];
        std::vector<Rational> win = init_; // f(n-d) .. f(n-1)
        for (long long m = d; m <= n; ++m) {
            Rational next(0);
            // f(m) = -(a_1 f(m-1) + ... + a_d f(m-d))
            for (int i = 1; i <= d; ++i)
                next -= alpha_[static_cast<std::size_t>(i - 1)] * win[static_cast<std::size_t>(d - i)];
            for (int i = 0; i + 1 < d; ++i) win[static_cast<std::size_t>(i)] = win[static_cast<std::size_t>(i + 1)];
            win[static_cast<std::size_t>(d - 1)] = next;
        }
        return win[static_cast<std::size_t>(d - 1)];
    }

    /// f(-n) for n >= 1, by running the recurrence backwards:
    ///   f(-n) = (-1/a_d) (f(-n+d) + a_1 f(-n+d-1) + ... + a_{d-1} f(-n+1)).
    Rational extend_negative(long long n) const {
        if (n < 1) throw std::invalid_argument("extend_negative: index must be >= 1");
        const int d = order();
        if (d == 0)
            throw std::invalid_argument("extend_negative: order-0 recurrence has no backward extension");
        std::vector<Rational> win = init_; // f(m) .. f(m+d-1), starting at m = 0
        for (long long step = 1; step <= n; ++step) {
            Rational acc = win[static_cast<std::size_t>(d - 1)]; // f(m+d-1)
            for (int i = 1; i <= d - 1; ++i)
                acc += alpha_[static_cast<std::size_t>(i - 1)] * win[static_cast<std::size_t>(d - 1 - i)];
            Rational prev = -(acc / alpha_[static_cast<std::size_t>(d - 1)]);
            for (int i = d - 1; i > 0; --i) win[static_cast<std::size_t>(i)] = win[static_cast<std::size_t>(i - 1)];
            win[0] = prev;
        }
        return win[0];
    }

    /// F(x) = P(x)/Q(x) with Q = 1 + a_1 x + ... + a_d x^d and
    /// P = the degree-< d truncation of Q times the initial-value series.
    RationalGF generating_function() const {
        const int d = order();
        if (d == 0)
            throw std::invalid_argument("generating_function: order-0 recurrence");
        std::vector<Rational> q(static_cast<std::size_t>(d) + 1);
        q[0] = Rational(1);
        for (int i = 1; i <= d; ++i) q[static_cast<std::size_t>(i)] = alpha_[static_cast<std::size_t>(i - 1)];
        Polynomial Q(std::move(q));
        Polynomial head(init_); // f(0) + f(1) x + ... + f(d-1) x^{d-1}
        Polynomial P = (Q * head).truncated(d);
        return RationalGF{P, Q};
    }

private:
    std::vector<Rational> alpha_;
    std::vector<Rational> init_;
};

/// First `terms` power-series coefficients of num/den (den(0) != 0),
/// starting from x^0.
inline std::vector<Rational> series_coefficients(const Polynomial& num, const Polynomial& den,
                                                 int terms) {
    if (den.coeff(0).is_zero())
        throw std::invalid_argument("series_coefficients: denominator vanishes at 0");
    std::vector<Rational> c(static_cast<std::size_t>(terms));
    for (int i = 0; i < terms; ++i) {
        Rational acc = num.coeff(i);
        for (int j = 1; j <= i && j <= den.degree(); ++j)
            acc -= den.coeff(j) * c[static_cast<std::size_t>(i - j)];
        c[static_cast<std::size_t>(i)] = acc / den.coeff(0);
    }
    return c;
}

/// Verifies Remark-style negative extension through the generating
/// function: rewrites -F(1/x) as a power series (multiplying numerator
/// and denominator by x^{deg Q}) and compares its first `terms`
/// coefficients, which start at x^1, against extend_negative(1..terms).
inline bool negative_series_check(const LinearRecurrence& r, int terms) {
    const RationalGF gf = r.generating_function();
    const int d = gf.denominator.degree();
    // -F(1/x) = -(x^d P(1/x)) / (x^d Q(1/x))
    const Polynomial pr = Rational(-1) * gf.numerator.reversed(d);
    const Polynomial qr = gf.denominator.reversed(d);
    const auto coeffs = series_coefficients(pr, qr, terms + 1);
    if (!coeffs[0].is_zero()) return false; // series must start at x^1
    for (int n = 1; n <= terms; ++n)
        if (coeffs[static_cast<std::size_t>(n)] != r.extend_negative(n)) return false;
    return true;
}

} // namespace lgv

#endif // LGV_RECURRENCE_HPP
