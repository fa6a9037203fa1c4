#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dt/partitions.hpp"

namespace dt {

/// A weight of the (3+r)-torus. Exponents live in (1/2)Z and are stored
/// doubled: texp = {2a, 2b, 2c} represents t1^a t2^b t3^c, and wexp[j]
/// doubles the exponent of w_{j+1}. The constant monomial has all zeros.
struct Monomial {
    std::array<long, 3> texp{0, 0, 0};
    std::vector<long> wexp;

    static Monomial unit(int r) {
        Monomial m;
        m.wexp.assign(static_cast<std::size_t>(r), 0);
        return m;
    }
    /// t1^i t2^j t3^k (integer exponents), no w part.
    static Monomial t_power(long i, long j, long k, int r = 0) {
        Monomial m = unit(r);
        m.texp = {2 * i, 2 * j, 2 * k};
        return m;
    }

    bool is_constant() const {
        if (texp != std::array<long, 3>{0, 0, 0}) return false;
        for (long e : wexp)
            if (e) return false;
        return true;
    }
    bool w_trivial() const {
        for (long e : wexp)
            if (e) return false;
        return true;
    }
    /// True when this is (t1 t2 t3)^k for some nonzero integer k, the
    /// Calabi-Yau direction.
    bool is_cy_power() const {
        return w_trivial() && texp[0] != 0 && texp[0] == texp[1] && texp[1] == texp[2] && texp[0] % 2 == 0;
    }
    bool has_half_exponent() const {
        if (texp[0] % 2 || texp[1] % 2 || texp[2] % 2) return true;
        for (long e : wexp)
            if (e % 2) return true;
        return false;
    }

    Monomial inverse() const {
        Monomial m = *this;
        for (auto& e : m.texp) e = -e;
        for (auto& e : m.wexp) e = -e;
        return m;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.texp == b.texp && a.wexp == b.wexp; }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.texp != b.texp) return a.texp < b.texp;
        return a.wexp < b.wexp;
    }

    std::string str() const;
};

/// Signed multiset of monomials: a virtual character of the (3+r)-torus.
/// Zero multiplicities are never stored.
class VirtualCharacter {
public:
    VirtualCharacter() = default;

    const std::map<Monomial, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long rank() const;
    long multiplicity(const Monomial& m) const;

    void add(const Monomial& m, long mult = 1);

    friend VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b);
    friend VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b);
    VirtualCharacter operator-() const;
    /// Product of characters (multiplication of representations).
    friend VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b);
    friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const VirtualCharacter& a, const VirtualCharacter& b) { return !(a == b); }

    /// Multiply every monomial by m.
    VirtualCharacter twisted(const Monomial& m) const;

    bool has_constant_term() const;

    std::string str() const;

private:
    std::map<Monomial, long> terms_;
};

/// Negate all exponents of every monomial (the "bar" involution).
VirtualCharacter bar(const VirtualCharacter& v);

/// The vertex term V_ij built from the two quotient characters Q_i, Q_j
/// (pure t-characters with all multiplicities +1), for the ordered pair of
/// colors (i, j), 0-based, out of r colors:
///   V_ij = w_i^{-1} w_j (Q_j - bar(Q_i)/t1t2t3
///          + (1-t1)(1-t2)(1-t3)/(t1t2t3) * Q_j * bar(Q_i)).
VirtualCharacter vertex_term(const VirtualCharacter& Qi, const VirtualCharacter& Qj, int i, int j, int r);

/// Virtual tangent character T^vir of the fixed point indexed by the
/// colored partition: sum of all V_ij, fully expanded. When lambda twists
/// are given (one pure integer-exponent t-monomial per color), w_i is
/// replaced by lambda_i w_i. The result always has rank 0, no constant
/// term and no pure power of t1t2t3; violations throw.
VirtualCharacter tvir(const ColoredPartition& P, const std::optional<std::vector<Monomial>>& lambda = std::nullopt);

}  // namespace dt
