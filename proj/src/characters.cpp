#include "dt/characters.hpp"

#include <sstream>
#include <stdexcept>

namespace dt {

namespace {

std::vector<long> merged_wexp(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> w(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) w[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) w[i] += b[i];
    return w;
}

Monomial widened(const Monomial& m, int r) {
    Monomial out = m;
    out.wexp.resize(static_cast<std::size_t>(r), 0);
    return out;
}

VirtualCharacter widened(const VirtualCharacter& v, int r) {
    VirtualCharacter out;
    for (const auto& [m, mult] : v.terms()) out.add(widened(m, r), mult);
    return out;
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < 3; ++i) m.texp[i] = a.texp[i] + b.texp[i];
    m.wexp = merged_wexp(a.wexp, b.wexp);
    return m;
}

std::string Monomial::str() const {
    std::ostringstream os;
    bool any = false;
    auto emit = [&](const std::string& var, long doubled) {
        if (!doubled) return;
        if (any) os << "*";
        any = true;
        os << var << "^(";
        if (doubled % 2 == 0)
            os << doubled / 2;
        else
            os << doubled << "/2";
        os << ")";
    };
    for (int i = 0; i < 3; ++i) emit("t" + std::to_string(i + 1), texp[i]);
    for (std::size_t j = 0; j < wexp.size(); ++j) emit("w" + std::to_string(j + 1), wexp[j]);
    if (!any) os << "1";
    return os.str();
}

long VirtualCharacter::rank() const {
    long n = 0;
    for (const auto& [m, mult] : terms_) n += mult;
    return n;
}

long VirtualCharacter::multiplicity(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void VirtualCharacter::add(const Monomial& m, long mult) {
    if (!mult) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = mult;
    } else {
        it->second += mult;
        if (!it->second) terms_.erase(it);
    }
}

VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b) {
    VirtualCharacter r = a;
    for (const auto& [m, mult] : b.terms_) r.add(m, mult);
    return r;
}

VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b) {
    VirtualCharacter r = a;
    for (const auto& [m, mult] : b.terms_) r.add(m, -mult);
    return r;
}

VirtualCharacter VirtualCharacter::operator-() const {
    VirtualCharacter r;
    for (const auto& [m, mult] : terms_) r.terms_[m] = -mult;
    return r;
}

VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b) {
    VirtualCharacter r;
    for (const auto& [ma, ka] : a.terms_)
        for (const auto& [mb, kb] : b.terms_) r.add(ma * mb, ka * kb);
    return r;
}

VirtualCharacter VirtualCharacter::twisted(const Monomial& m) const {
    VirtualCharacter r;
    for (const auto& [mm, mult] : terms_) r.add(mm * m, mult);
    return r;
}

bool VirtualCharacter::has_constant_term() const {
    for (const auto& [m, mult] : terms_)
        if (m.is_constant()) return mult != 0;
    return false;
}

std::string VirtualCharacter::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, mult] : terms_) {
        if (first) {
            if (mult < 0) os << "-";
        } else {
            os << (mult < 0 ? " - " : " + ");
        }
        first = false;
        long a = mult < 0 ? -mult : mult;
        if (a != 1) os << a << "*";
        os << m.str();
    }
    return os.str();
}

VirtualCharacter bar(const VirtualCharacter& v) {
    VirtualCharacter r;
    for (const auto& [m, mult] : v.terms()) r.add(m.inverse(), mult);
    return r;
}

VirtualCharacter vertex_term(const VirtualCharacter& Qi, const VirtualCharacter& Qj, int i, int j, int r) {
    const VirtualCharacter qi = widened(Qi, r);
    const VirtualCharacter qj = widened(Qj, r);
    const Monomial kappa_inv = Monomial::t_power(-1, -1, -1, r);

    VirtualCharacter pprod;  // (1 - t1)(1 - t2)(1 - t3)
    pprod.add(Monomial::unit(r));
    for (int axis = 0; axis < 3; ++axis) {
        VirtualCharacter f;
        f.add(Monomial::unit(r));
        long e[3] = {0, 0, 0};
        e[axis] = 1;
        f.add(Monomial::t_power(e[0], e[1], e[2], r), -1);
        pprod = pprod * f;
    }

    VirtualCharacter inner = qj - bar(qi).twisted(kappa_inv) + (pprod * qj * bar(qi)).twisted(kappa_inv);

    Monomial wshift = Monomial::unit(r);
    wshift.wexp[static_cast<std::size_t>(i)] -= 2;
    wshift.wexp[static_cast<std::size_t>(j)] += 2;
    return inner.twisted(wshift);
}

VirtualCharacter tvir(const ColoredPartition& P, const std::optional<std::vector<Monomial>>& lambda) {
    const int r = P.rank();
    if (lambda) {
        if (static_cast<int>(lambda->size()) != r) throw std::invalid_argument("tvir: lambda size must match rank");
        for (const Monomial& m : *lambda)
            if (!m.w_trivial() || m.has_half_exponent())
                throw std::invalid_argument("tvir: lambda twists must be integer t-monomials");
    }
    std::vector<VirtualCharacter> Q;
    Q.reserve(static_cast<std::size_t>(r));
    for (const auto& pp : P.parts) Q.push_back(ideal_character(pp));

    VirtualCharacter T;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            VirtualCharacter V = vertex_term(Q[static_cast<std::size_t>(i)], Q[static_cast<std::size_t>(j)], i, j, r);
            if (lambda) {
                // w_i -> lambda_i w_i turns the w_i^{-1} w_j prefactor into
                // lambda_i^{-1} lambda_j w_i^{-1} w_j.
                Monomial shift = widened((*lambda)[static_cast<std::size_t>(i)].inverse() * (*lambda)[static_cast<std::size_t>(j)], r);
                V = V.twisted(shift);
            }
            T = T + V;
        }

    if (T.rank() != 0) throw std::logic_error("tvir: nonzero virtual rank");
    if (T.has_constant_term()) throw std::logic_error("tvir: constant term present");
    for (const auto& [m, mult] : T.terms())
        if (m.is_cy_power()) throw std::logic_error("tvir: pure power of t1t2t3 present");
    return T;
}

}  // namespace dt
