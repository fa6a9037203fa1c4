#include "dt/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace dt {

LaurentHalf LaurentHalf::inverse() const {
    if (c_.size() != 1) throw std::domain_error("LaurentHalf: only monomials are invertible");
    const auto& [e, v] = *c_.begin();
    return term(v.inverse(), -e);
}

LaurentHalf LaurentHalf::shifted(long doubled_shift) const {
    LaurentHalf r;
    for (const auto& [e, v] : c_) r.c_[e + doubled_shift] = v;
    return r;
}

LaurentHalf operator+(const LaurentHalf& a, const LaurentHalf& b) {
    LaurentHalf r = a;
    for (const auto& [e, v] : b.c_) {
        auto it = r.c_.find(e);
        if (it == r.c_.end()) {
            r.c_[e] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    return r;
}

LaurentHalf LaurentHalf::operator-() const {
    LaurentHalf r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

LaurentHalf operator-(const LaurentHalf& a, const LaurentHalf& b) { return a + (-b); }

LaurentHalf operator*(const LaurentHalf& a, const LaurentHalf& b) {
    LaurentHalf r;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) {
            Rational p = va * vb;
            auto it = r.c_.find(ea + eb);
            if (it == r.c_.end()) {
                if (!p.is_zero()) r.c_[ea + eb] = p;
            } else {
                it->second += p;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    return r;
}

std::string LaurentHalf::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << v.str();
            continue;
        }
        if (!v.is_one()) os << v.str() << "*";
        os << var << "^(";
        if (e % 2 == 0)
            os << e / 2;
        else
            os << e << "/2";
        os << ")";
    }
    return os.str();
}

}  // namespace dt
