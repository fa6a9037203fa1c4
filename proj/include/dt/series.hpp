#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dt/rational.hpp"

namespace dt {

/// Truncated power series over an exact coefficient ring R: arithmetic is
/// exact modulo x^(order+1). The variable tag ('q', 'p' or 'b') is carried
/// for printing only. Division by a series with zero constant term is an
/// error, never an implicit Laurent extension.
template <class R>
class TruncatedSeries {
public:
    TruncatedSeries() : tag_('q') {}
    TruncatedSeries(char tag, int order) : tag_(tag), c_(static_cast<std::size_t>(order) + 1, R{}) {
        if (order < 0) throw std::domain_error("TruncatedSeries: negative order");
    }

    static TruncatedSeries constant(char tag, int order, const R& v) {
        TruncatedSeries s(tag, order);
        s.c_[0] = v;
        return s;
    }
    /// The series x (when order >= 1).
    static TruncatedSeries variable(char tag, int order) {
        TruncatedSeries s(tag, order);
        if (order >= 1) s.c_[1] = R::one();
        return s;
    }

    char tag() const { return tag_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
    R& at(int n) { return c_.at(static_cast<std::size_t>(n)); }
    const std::vector<R>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    TruncatedSeries truncated(int new_order) const {
        TruncatedSeries s(tag_, new_order);
        for (int n = 0; n <= std::min(new_order, order()); ++n) s.c_[n] = c_[n];
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(a.tag_, std::min(a.order(), b.order()));
        for (int n = 0; n <= s.order(); ++n) s.c_[n] = a.c_[n] + b.c_[n];
        return s;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(a.tag_, std::min(a.order(), b.order()));
        for (int n = 0; n <= s.order(); ++n) s.c_[n] = a.c_[n] - b.c_[n];
        return s;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries s = *this;
        for (auto& x : s.c_) x = R{} - x;
        return s;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(a.tag_, std::min(a.order(), b.order()));
        for (int i = 0; i <= s.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= s.order(); ++j) {
                if (b.c_[j].is_zero()) continue;
                s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return s;
    }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order()) return false;
        for (int n = 0; n <= a.order(); ++n)
            if (!(a.c_[n] == b.c_[n])) return false;
        return true;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    TruncatedSeries scaled(const Rational& r) const {
        TruncatedSeries s = *this;
        for (auto& x : s.c_) x = scale(x, r);
        return s;
    }

    /// Substitute x -> c*x: multiplies the n-th coefficient by c^n.
    TruncatedSeries rescaled(const R& c) const {
        TruncatedSeries s = *this;
        R p = R::one();
        for (int n = 1; n <= s.order(); ++n) {
            p = p * c;
            s.c_[n] = s.c_[n] * p;
        }
        return s;
    }

    /// Substitute x -> x^k (k >= 1), keeping the ambient truncation order.
    TruncatedSeries stretched(int k) const {
        TruncatedSeries s(tag_, order());
        for (int n = 0; n * k <= order(); ++n) s.c_[n * k] = c_[n];
        return s;
    }

    std::string str() const {
        std::string out;
        for (int n = 0; n <= order(); ++n) {
            if (n) out += " + ";
            out += coeff_str(c_[n]) + "*" + tag_ + "^" + std::to_string(n);
        }
        return out;
    }

private:
    char tag_;
    std::vector<R> c_;

    template <class T>
    static auto coeff_str(const T& x) -> decltype(x.str()) {
        return x.str();
    }
};

template <class R>
TruncatedSeries<R> series_inv(const TruncatedSeries<R>& f) {
    const int N = f.order();
    if (f[0].is_zero()) throw std::domain_error("series_inv: constant term not invertible");
    TruncatedSeries<R> g(f.tag(), N);
    const R c0inv = f[0].inverse();
    g.at(0) = c0inv;
    for (int n = 1; n <= N; ++n) {
        R acc{};
        for (int k = 1; k <= n; ++k) acc = acc + f[k] * g[n - k];
        g.at(n) = R{} - c0inv * acc;
    }
    return g;
}

/// exp(f) for f with zero constant term, via (exp f)' = f' exp f.
template <class R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& f) {
    const int N = f.order();
    if (!f[0].is_zero()) throw std::domain_error("series_exp: nonzero constant term");
    TruncatedSeries<R> g(f.tag(), N);
    g.at(0) = R::one();
    for (int n = 1; n <= N; ++n) {
        R acc{};
        for (int k = 1; k <= n; ++k) acc = acc + scale(f[k] * g[n - k], Rational(k));
        g.at(n) = scale(acc, Rational(1, n));
    }
    return g;
}

/// log(f) for f with constant term 1.
template <class R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& f) {
    const int N = f.order();
    if (!(f[0] == R::one())) throw std::domain_error("series_log: constant term must be 1");
    TruncatedSeries<R> g(f.tag(), N);
    for (int n = 1; n <= N; ++n) {
        R acc = scale(f[n], Rational(n));
        for (int k = 1; k < n; ++k) acc = acc - scale(g[k] * f[n - k], Rational(k));
        g.at(n) = scale(acc, Rational(1, n));
    }
    return g;
}

/// f^c = exp(c log f) for rational c; requires constant term 1.
template <class R>
TruncatedSeries<R> series_pow_scalar(const TruncatedSeries<R>& f, const Rational& c) {
    return series_exp(series_log(f).scaled(c));
}

using QSeries = TruncatedSeries<Rational>;

}  // namespace dt
