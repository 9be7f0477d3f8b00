#ifndef ELLGW_SERIES_HPP
#define ELLGW_SERIES_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <ellgw/rational.hpp>

namespace ellgw
{

// Thrown by series_invert when the constant term vanishes.
class not_a_unit : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Truncated power series in q with exact rational coefficients.
///
/// A QSeries of order N stores the coefficients of q^0, ..., q^N. Binary
/// operations demand equal orders; mixing orders throws std::invalid_argument,
/// callers re-truncate explicitly with truncated().
class QSeries
{
public:
    explicit QSeries(int order);
    QSeries(int order, std::vector<Rational> coeffs);

    static QSeries one(int order);
    static QSeries monomial(int order, int degree, const Rational &c);

    int order() const
    {
        return order_;
    }
    const Rational &operator[](int d) const
    {
        return coeffs_[static_cast<std::size_t>(d)];
    }
    std::span<const Rational> coeffs() const
    {
        return coeffs_;
    }

    QSeries truncated(int n) const;
    bool is_zero() const;
    // Lowest degree carrying a nonzero coefficient.
    std::optional<int> valuation() const;

    QSeries &operator+=(const QSeries &other);
    QSeries &operator-=(const QSeries &other);
    QSeries &operator*=(const Rational &c);

    friend QSeries operator+(QSeries a, const QSeries &b)
    {
        return a += b;
    }
    friend QSeries operator-(QSeries a, const QSeries &b)
    {
        return a -= b;
    }
    friend QSeries operator*(QSeries a, const Rational &c)
    {
        return a *= c;
    }
    friend QSeries operator*(const Rational &c, QSeries a)
    {
        return a *= c;
    }
    friend QSeries operator*(const QSeries &a, const QSeries &b);
    QSeries operator-() const;

    friend bool operator==(const QSeries &a, const QSeries &b) = default;

private:
    void check_same_order(const QSeries &other) const;

    int order_;
    std::vector<Rational> coeffs_;
};

/// Truncated Laurent series in lambda, known through lambda^order.
///
/// Leading zeros are stripped on construction so that the stored minimum
/// degree is the valuation. The zero series has no stored coefficients and
/// reports valuation() == std::nullopt.
class LambdaSeries
{
public:
    LambdaSeries(int min_degree, int order, std::vector<Rational> coeffs);

    static LambdaSeries zero(int order);
    static LambdaSeries one(int order);
    // Polynomial exactly known through `order`; entries beyond order are dropped.
    static LambdaSeries from_coefficients(int min_degree, int order, std::vector<Rational> coeffs);

    int order() const
    {
        return order_;
    }
    std::optional<int> valuation() const;
    bool is_zero() const
    {
        return coeffs_.empty();
    }
    // Coefficient of lambda^k; throws std::out_of_range past order().
    Rational coefficient(int k) const;

    LambdaSeries truncated(int m) const;
    // Multiplication by lambda^s.
    LambdaSeries shifted(int s) const;
    LambdaSeries inverse() const;
    // Requires constant term 1 and no pole.
    LambdaSeries log() const;

    LambdaSeries &operator+=(const LambdaSeries &other);
    LambdaSeries &operator-=(const LambdaSeries &other);
    LambdaSeries &operator*=(const Rational &c);

    friend LambdaSeries operator+(LambdaSeries a, const LambdaSeries &b)
    {
        return a += b;
    }
    friend LambdaSeries operator-(LambdaSeries a, const LambdaSeries &b)
    {
        return a -= b;
    }
    friend LambdaSeries operator*(LambdaSeries a, const Rational &c)
    {
        return a *= c;
    }
    friend LambdaSeries operator*(const LambdaSeries &a, const LambdaSeries &b);

    friend bool operator==(const LambdaSeries &a, const LambdaSeries &b) = default;

private:
    // Degree of coeffs_[0]; order_ + 1 for the zero series.
    int lo_;
    int order_;
    std::vector<Rational> coeffs_;
};

/// Laurent series in lambda whose coefficients are QSeries sharing one q-order.
class BiSeries
{
public:
    BiSeries(int min_degree, int lambda_order, int q_order);

    int min_degree() const
    {
        return lo_;
    }
    int lambda_order() const
    {
        return order_;
    }
    int q_order() const
    {
        return q_order_;
    }

    // Coefficient of lambda^k as a QSeries (zero below min_degree).
    QSeries coefficient(int k) const;
    void add_to(int k, const QSeries &s);

    // Adds q^d * f, with f a lambda-series known at least through lambda_order().
    void add_scaled(int d, const LambdaSeries &f);

    friend BiSeries operator*(const BiSeries &a, const BiSeries &b);
    friend bool operator==(const BiSeries &a, const BiSeries &b) = default;

private:
    int lo_;
    int order_;
    int q_order_;
    std::vector<QSeries> coeffs_;
};

QSeries series_invert(const QSeries &f);

// sum_{d | n} d^k.
Rational divisor_sigma(int k, long n);

// E2, E4 or E6 normalized to constant term 1.
QSeries eisenstein(int weight, int order);

// B_n for even n >= 0, with B_2 = 1/6. Memoized, thread-safe.
Rational bernoulli(int n);

// prod_{i >= 1} (1 - q^i) truncated at order.
QSeries euler_product(int order);

// 1 / prod (1 - q^i): the partition generating function.
QSeries vacuum_partition_function(int order);

// S(lambda) = sinh(lambda/2) / (lambda/2) through lambda^order.
LambdaSeries sinh_kernel(int order);

Rational factorial(int n);
Rational binomial(int n, int k);

} // namespace ellgw

#endif
