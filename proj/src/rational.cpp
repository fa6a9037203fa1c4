#include "dt/rational.hpp"

namespace dt {

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    mpq_class v;
    if (slash == std::string::npos) {
        v = mpq_class(s);
    } else {
        v = mpq_class(s.substr(0, slash)) / mpq_class(s.substr(slash + 1));
    }
    return Rational(v);
}

Rational Rational::pow(long e) const {
    if (e == 0) return one();
    if (e < 0) return inverse().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace dt
