#include "dt/cyclotomic.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace dt {

namespace {

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational::zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    Poly div = b;
    poly_trim(div);
    if (div.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    Poly rem = a;
    poly_trim(rem);
    if (rem.size() < div.size()) return {Poly{}, rem};
    Poly quot(rem.size() - div.size() + 1, Rational::zero());
    const Rational lead_inv = div.back().inverse();
    for (std::size_t i = rem.size(); i-- >= div.size();) {
        const Rational q = rem[i] * lead_inv;
        if (q.is_zero()) continue;
        const std::size_t off = i - (div.size() - 1);
        quot[off] = q;
        for (std::size_t j = 0; j < div.size(); ++j) rem[off + j] -= q * div[j];
    }
    poly_trim(rem);
    poly_trim(quot);
    return {quot, rem};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.empty()) throw std::domain_error("poly_divexact: nonzero remainder");
    return q;
}

int euler_totient(int m) {
    int result = m, n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

Poly cyclotomic_poly(int m) {
    if (m < 1 || m > 120) throw std::domain_error("cyclotomic_poly: order out of range [1,120]");
    static std::map<int, Poly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // x^m - 1
    Poly num(m + 1, Rational::zero());
    num[0] = -Rational::one();
    num[m] = Rational::one();
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) num = poly_divexact(num, cyclotomic_poly(d));
    }
    cache[m] = num;
    return num;
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
    const std::size_t deg = static_cast<std::size_t>(euler_totient(order));
    if (c_.size() > deg) {
        Poly p = c_;
        auto [q, r] = poly_divmod(p, cyclotomic_poly(order));
        c_ = r;
    }
    c_.resize(deg, Rational::zero());
}

Cyclotomic Cyclotomic::zeta(int m, long k) {
    k %= m;
    if (k < 0) k += m;
    std::vector<Rational> p(static_cast<std::size_t>(k) + 1, Rational::zero());
    p.back() = Rational::one();
    return Cyclotomic(m, std::move(p));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic: not a rational element");
    return c_.empty() ? Rational::zero() : c_[0];
}

Cyclotomic Cyclotomic::promoted(int m) const {
    if (order_ == m) return *this;
    if (order_ != 1) throw std::domain_error("Cyclotomic: mixing distinct cyclotomic orders");
    Cyclotomic r(m, {c_[0]});
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    const int m = a.order_ == 1 ? b.order_ : a.order_;
    Cyclotomic x = a.promoted(m), y = b.promoted(m);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const int m = a.order_ == 1 ? b.order_ : a.order_;
    Cyclotomic x = a.promoted(m), y = b.promoted(m);
    Poly p = poly_mul(x.c_, y.c_);
    return Cyclotomic(m, std::move(p));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    const int m = a.order_ == 1 ? b.order_ : a.order_;
    if (a.order_ != 1 && b.order_ != 1 && a.order_ != b.order_) return false;
    Cyclotomic x = a.promoted(m), y = b.promoted(m);
    return x.c_ == y.c_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
    if (order_ == 1) return Cyclotomic(c_[0].inverse());
    // Extended Euclid in Q[x] against Phi_m: find u with u*c == 1 mod Phi_m.
    Poly r0 = cyclotomic_poly(order_), r1 = c_;
    {
        Poly tmp = r1;
        while (!tmp.empty() && tmp.back().is_zero()) tmp.pop_back();
        r1 = tmp;
    }
    Poly s0{}, s1{Rational::one()};
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly qs1 = poly_mul(q, s1);
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), qs1.size()), Rational::zero());
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        while (!s2.empty() && s2.back().is_zero()) s2.pop_back();
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd, a nonzero constant since Phi_m is irreducible and c != 0 mod Phi_m.
    if (r0.size() != 1) throw std::domain_error("Cyclotomic: element not invertible");
    const Rational inv = r0[0].inverse();
    for (auto& x : s0) x *= inv;
    return Cyclotomic(order_, std::move(s0));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this, acc = Cyclotomic::one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return rational_part().str();
    std::ostringstream os;
    os << "cyc" << order_ << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].str();
    }
    os << "]";
    return os.str();
}

}  // namespace dt
