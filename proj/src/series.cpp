#include <ellgw/series.hpp>

#include <algorithm>
#include <mutex>
#include <string>
#include <utility>

namespace ellgw
{

// ---------------------------------------------------------------- QSeries

QSeries::QSeries(int order) : order_(order)
{
    if (order < 0) {
        throw std::invalid_argument("negative truncation order " + std::to_string(order));
    }
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries::QSeries(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs))
{
    if (order < 0) {
        throw std::invalid_argument("negative truncation order " + std::to_string(order));
    }
    if (coeffs_.size() != static_cast<std::size_t>(order) + 1) {
        throw std::invalid_argument("QSeries of order " + std::to_string(order) + " needs " + std::to_string(order + 1)
                                    + " coefficients, got " + std::to_string(coeffs_.size()));
    }
}

QSeries QSeries::one(int order)
{
    QSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::monomial(int order, int degree, const Rational &c)
{
    QSeries s(order);
    if (degree < 0) {
        throw std::invalid_argument("negative q-degree");
    }
    if (degree <= order) {
        s.coeffs_[static_cast<std::size_t>(degree)] = c;
    }
    return s;
}

QSeries QSeries::truncated(int n) const
{
    if (n > order_) {
        throw std::invalid_argument("cannot extend QSeries of order " + std::to_string(order_) + " to "
                                    + std::to_string(n));
    }
    return QSeries(n, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

std::optional<int> QSeries::valuation() const
{
    for (int d = 0; d <= order_; ++d) {
        if (coeffs_[static_cast<std::size_t>(d)] != 0) {
            return d;
        }
    }
    return std::nullopt;
}

void QSeries::check_same_order(const QSeries &other) const
{
    if (order_ != other.order_) {
        throw std::invalid_argument("QSeries truncation order mismatch: " + std::to_string(order_) + " vs "
                                    + std::to_string(other.order_));
    }
}

QSeries &QSeries::operator+=(const QSeries &other)
{
    check_same_order(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &other)
{
    check_same_order(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

QSeries &QSeries::operator*=(const Rational &c)
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

QSeries QSeries::operator-() const
{
    QSeries r(*this);
    for (auto &x : r.coeffs_) {
        x = -x;
    }
    return r;
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    a.check_same_order(b);
    QSeries r(a.order_);
    Rational tmp;
    for (int i = 0; i <= a.order_; ++i) {
        const auto &ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai == 0) {
            continue;
        }
        for (int j = 0; i + j <= a.order_; ++j) {
            const auto &bj = b.coeffs_[static_cast<std::size_t>(j)];
            if (bj == 0) {
                continue;
            }
            tmp = ai * bj;
            r.coeffs_[static_cast<std::size_t>(i + j)] += tmp;
        }
    }
    return r;
}

QSeries series_invert(const QSeries &f)
{
    if (f[0] == 0) {
        throw not_a_unit("series_invert: constant term is zero, series is not a unit");
    }
    const int n = f.order();
    std::vector<Rational> inv(static_cast<std::size_t>(n) + 1);
    const Rational c0 = 1 / f[0];
    inv[0] = c0;
    for (int d = 1; d <= n; ++d) {
        Rational acc = 0;
        for (int i = 1; i <= d; ++i) {
            if (f[i] != 0) {
                acc += f[i] * inv[static_cast<std::size_t>(d - i)];
            }
        }
        inv[static_cast<std::size_t>(d)] = -acc * c0;
    }
    return QSeries(n, std::move(inv));
}

// ------------------------------------------------------------ LambdaSeries

LambdaSeries::LambdaSeries(int min_degree, int order, std::vector<Rational> coeffs)
    : lo_(min_degree), order_(order), coeffs_(std::move(coeffs))
{
    const long expected = std::max(0L, static_cast<long>(order) - min_degree + 1);
    if (static_cast<long>(coeffs_.size()) != expected) {
        throw std::invalid_argument("LambdaSeries from degree " + std::to_string(min_degree) + " through "
                                    + std::to_string(order) + " needs " + std::to_string(expected)
                                    + " coefficients, got " + std::to_string(coeffs_.size()));
    }
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c != 0; });
    lo_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty()) {
        lo_ = order_ + 1;
    }
}

LambdaSeries LambdaSeries::zero(int order)
{
    return LambdaSeries(order + 1, order, {});
}

LambdaSeries LambdaSeries::one(int order)
{
    if (order < 0) {
        return zero(order);
    }
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    c[0] = 1;
    return LambdaSeries(0, order, std::move(c));
}

LambdaSeries LambdaSeries::from_coefficients(int min_degree, int order, std::vector<Rational> coeffs)
{
    const long n = std::max(0L, static_cast<long>(order) - min_degree + 1);
    coeffs.resize(static_cast<std::size_t>(n), Rational(0));
    return LambdaSeries(std::min(min_degree, order + 1), order, std::move(coeffs));
}

std::optional<int> LambdaSeries::valuation() const
{
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return lo_;
}

Rational LambdaSeries::coefficient(int k) const
{
    if (k > order_) {
        throw std::out_of_range("lambda^" + std::to_string(k) + " is beyond the truncation order "
                                + std::to_string(order_));
    }
    if (k < lo_) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(k - lo_)];
}

LambdaSeries LambdaSeries::truncated(int m) const
{
    if (m > order_) {
        throw std::invalid_argument("cannot extend LambdaSeries of order " + std::to_string(order_) + " to "
                                    + std::to_string(m));
    }
    if (m < lo_) {
        return zero(m);
    }
    return LambdaSeries(lo_, m, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (m - lo_ + 1)));
}

LambdaSeries LambdaSeries::shifted(int s) const
{
    LambdaSeries r(*this);
    r.lo_ += s;
    r.order_ += s;
    return r;
}

LambdaSeries &LambdaSeries::operator+=(const LambdaSeries &other)
{
    const int order = std::min(order_, other.order_);
    const int lo = std::min({lo_, other.lo_, order + 1});
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, order - lo + 1)), Rational(0));
    for (int k = lo; k <= order; ++k) {
        if (k >= lo_ && k <= order_) {
            c[static_cast<std::size_t>(k - lo)] += coeffs_[static_cast<std::size_t>(k - lo_)];
        }
        if (k >= other.lo_ && k <= other.order_) {
            c[static_cast<std::size_t>(k - lo)] += other.coeffs_[static_cast<std::size_t>(k - other.lo_)];
        }
    }
    *this = LambdaSeries(lo, order, std::move(c));
    return *this;
}

LambdaSeries &LambdaSeries::operator-=(const LambdaSeries &other)
{
    LambdaSeries neg(other);
    neg *= Rational(-1);
    return *this += neg;
}

LambdaSeries &LambdaSeries::operator*=(const Rational &c)
{
    if (c == 0) {
        *this = zero(order_);
        return *this;
    }
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

LambdaSeries operator*(const LambdaSeries &a, const LambdaSeries &b)
{
    // The zero series of order M is O(lambda^{M+1}); lo_ already encodes that.
    const int order = std::min(a.order_ + b.lo_, b.order_ + a.lo_);
    const int lo = a.lo_ + b.lo_;
    if (a.is_zero() || b.is_zero() || lo > order) {
        return LambdaSeries::zero(order);
    }
    std::vector<Rational> c(static_cast<std::size_t>(order - lo + 1), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size() && i + j < c.size(); ++j) {
            if (b.coeffs_[j] != 0) {
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return LambdaSeries(lo, order, std::move(c));
}

LambdaSeries LambdaSeries::inverse() const
{
    if (is_zero()) {
        throw not_a_unit("LambdaSeries::inverse: series is zero through its truncation order");
    }
    // f = lambda^v u with u a unit known through order - v.
    const int v = lo_;
    const int m = order_ - v;
    std::vector<Rational> inv(static_cast<std::size_t>(m) + 1);
    const Rational c0 = 1 / coeffs_[0];
    inv[0] = c0;
    for (int d = 1; d <= m; ++d) {
        Rational acc = 0;
        for (int i = 1; i <= d; ++i) {
            if (coeffs_[static_cast<std::size_t>(i)] != 0) {
                acc += coeffs_[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(d - i)];
            }
        }
        inv[static_cast<std::size_t>(d)] = -acc * c0;
    }
    return LambdaSeries(-v, m - v, std::move(inv));
}

LambdaSeries LambdaSeries::log() const
{
    if (lo_ != 0 || coeffs_[0] != 1) {
        throw std::domain_error("LambdaSeries::log needs constant term 1 and no pole");
    }
    if (order_ == 0) {
        return zero(0);
    }
    // log f = integral of f'/f.
    std::vector<Rational> deriv(static_cast<std::size_t>(order_));
    for (int k = 1; k <= order_; ++k) {
        deriv[static_cast<std::size_t>(k - 1)] = coeffs_[static_cast<std::size_t>(k)] * k;
    }
    const LambdaSeries ratio = LambdaSeries(0, order_ - 1, std::move(deriv)) * inverse();
    std::vector<Rational> out(static_cast<std::size_t>(order_) + 1, Rational(0));
    for (int k = 0; k < order_; ++k) {
        out[static_cast<std::size_t>(k + 1)] = ratio.coefficient(k) / (k + 1);
    }
    return LambdaSeries(0, order_, std::move(out));
}

// ---------------------------------------------------------------- BiSeries

BiSeries::BiSeries(int min_degree, int lambda_order, int q_order)
    : lo_(min_degree), order_(lambda_order), q_order_(q_order)
{
    const int n = std::max(0, lambda_order - min_degree + 1);
    coeffs_.assign(static_cast<std::size_t>(n), QSeries(q_order));
}

QSeries BiSeries::coefficient(int k) const
{
    if (k > order_) {
        throw std::out_of_range("lambda^" + std::to_string(k) + " is beyond the truncation order "
                                + std::to_string(order_));
    }
    if (k < lo_) {
        return QSeries(q_order_);
    }
    return coeffs_[static_cast<std::size_t>(k - lo_)];
}

void BiSeries::add_to(int k, const QSeries &s)
{
    if (k < lo_ || k > order_) {
        throw std::out_of_range("lambda^" + std::to_string(k) + " outside BiSeries range");
    }
    coeffs_[static_cast<std::size_t>(k - lo_)] += s;
}

void BiSeries::add_scaled(int d, const LambdaSeries &f)
{
    if (d > q_order_) {
        return;
    }
    for (int k = lo_; k <= order_; ++k) {
        const Rational c = f.coefficient(k);
        if (c != 0) {
            coeffs_[static_cast<std::size_t>(k - lo_)] += QSeries::monomial(q_order_, d, c);
        }
    }
}

BiSeries operator*(const BiSeries &a, const BiSeries &b)
{
    if (a.q_order_ != b.q_order_) {
        throw std::invalid_argument("BiSeries q-order mismatch");
    }
    const int lo = a.lo_ + b.lo_;
    const int order = std::min(a.order_ + b.lo_, b.order_ + a.lo_);
    BiSeries r(lo, order, a.q_order_);
    for (int i = a.lo_; i <= a.order_; ++i) {
        for (int j = b.lo_; j <= b.order_ && i + j <= order; ++j) {
            r.coeffs_[static_cast<std::size_t>(i + j - lo)] +=
                a.coeffs_[static_cast<std::size_t>(i - a.lo_)] * b.coeffs_[static_cast<std::size_t>(j - b.lo_)];
        }
    }
    return r;
}

// ------------------------------------------------------------- generators

Rational factorial(int n)
{
    if (n < 0) {
        throw std::domain_error("factorial of negative number");
    }
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational divisor_sigma(int k, long n)
{
    if (n <= 0) {
        throw std::domain_error("divisor_sigma needs n >= 1, got " + std::to_string(n));
    }
    if (k < 0) {
        throw std::domain_error("divisor_sigma needs k >= 0");
    }
    mpz_class sum = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        sum += p;
        const long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
            sum += p;
        }
    }
    return Rational(sum);
}

QSeries eisenstein(int weight, int order)
{
    long scale = 0;
    switch (weight) {
    case 2:
        scale = -24;
        break;
    case 4:
        scale = 240;
        break;
    case 6:
        scale = -504;
        break;
    default:
        throw std::domain_error("eisenstein: unsupported weight " + std::to_string(weight));
    }
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (int n = 1; n <= order; ++n) {
        c[static_cast<std::size_t>(n)] = scale * divisor_sigma(weight - 1, n);
    }
    return QSeries(order, std::move(c));
}

Rational bernoulli(int n)
{
    if (n < 0 || n % 2 != 0) {
        throw std::domain_error("bernoulli: argument must be even and nonnegative, got " + std::to_string(n));
    }
    static std::mutex mutex;
    // table[j] = B_j with B_1 = -1/2, extended on demand.
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> lock(mutex);
    for (int m = static_cast<int>(table.size()); m <= n; ++m) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rational acc = 0;
        for (int j = 0; j < m; ++j) {
            acc += binomial(m + 1, j) * table[static_cast<std::size_t>(j)];
        }
        table.push_back(-acc / (m + 1));
    }
    return table[static_cast<std::size_t>(n)];
}

QSeries euler_product(int order)
{
    QSeries p = QSeries::one(order);
    for (int i = 1; i <= order; ++i) {
        // multiply by (1 - q^i) in place, high degrees first
        std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
        for (int d = order; d >= i; --d) {
            c[static_cast<std::size_t>(d)] -= c[static_cast<std::size_t>(d - i)];
        }
        p = QSeries(order, std::move(c));
    }
    return p;
}

QSeries vacuum_partition_function(int order)
{
    // p(n) via the Euler pentagonal recurrence.
    std::vector<Rational> p(static_cast<std::size_t>(order) + 1, Rational(0));
    p[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) {
                break;
            }
            const int sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) {
                acc += sign * p[static_cast<std::size_t>(n - g2)];
            }
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return QSeries(order, std::move(p));
}

LambdaSeries sinh_kernel(int order)
{
    if (order < 0) {
        throw std::invalid_argument("sinh_kernel: negative order");
    }
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    // (lambda/2)^{2j} / (2j+1)!
    for (int j = 0; 2 * j <= order; ++j) {
        mpz_class four_pow;
        mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(j));
        c[static_cast<std::size_t>(2 * j)] = 1 / (Rational(four_pow) * factorial(2 * j + 1));
    }
    return LambdaSeries(0, order, std::move(c));
}

} // namespace ellgw
