#include "klsum/chars.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <string>

#include "klsum/arith.hpp"
#include "klsum/errors.hpp"
#include "klsum/summation.hpp"

namespace klsum::chars {

int kronecker_symbol(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int k = 1;
    // peel the 2-part of n: (a|2) = 0, +1, -1 for a even, a = +-1 mod 8,
    // a = +-3 mod 8 respectively
    int v = 0;
    while ((n & 1) == 0) {
        n /= 2;
        ++v;
    }
    if (v % 2 == 1) {
        int r = static_cast<int>(((a % 8) + 8) % 8);
        if (r == 3 || r == 5) k = -k;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // n is now positive and odd: finish with the Jacobi symbol via
    // quadratic reciprocity
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1) {
            int r = static_cast<int>(n % 8);
            if (r == 3 || r == 5) k = -k;
        }
        if ((a % 4 == 3) && (n % 4 == 3)) k = -k;
        std::int64_t t = n % a;
        n = a;
        a = t;
    }
    return (n == 1) ? k : 0;
}

namespace {

bool squarefree_abs(std::int64_t m) {
    std::uint64_t v = static_cast<std::uint64_t>(m < 0 ? -m : m);
    if (v == 0) return false;
    if (v == 1) return true;
    return arith::factorize(v).squarefree();
}

int mod4(std::int64_t d) { return static_cast<int>(((d % 4) + 4) % 4); }

} // namespace

bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 0) return false;
    if (mod4(d) == 1) return squarefree_abs(d);
    if (mod4(d) == 0) {
        std::int64_t m = d / 4;
        int r = mod4(m);
        return (r == 2 || r == 3) && squarefree_abs(m);
    }
    return false;
}

RealPrimitiveCharacter RealPrimitiveCharacter::from_discriminant(std::int64_t d) {
    if (d == 0) throw domain_error("from_discriminant: d must be nonzero");
    if (d == 1 || d == -1 || d == 2 || d == -2)
        throw domain_error("from_discriminant: |d| must be >= 3, got " + std::to_string(d));
    int r = mod4(d);
    if (r == 2 || r == 3)
        throw domain_error("from_discriminant: d = " + std::to_string(d) + " is == " +
                           std::to_string(r) + " (mod 4); fundamental discriminants are == 0 or 1");
    if (r == 1) {
        if (!squarefree_abs(d))
            throw domain_error("from_discriminant: d = " + std::to_string(d) +
                               " is == 1 (mod 4) but not squarefree");
    } else {
        std::int64_t m = d / 4;
        int rm = mod4(m);
        if (rm != 2 && rm != 3)
            throw domain_error("from_discriminant: d = 4m with m = " + std::to_string(m) +
                               " == " + std::to_string(rm) + " (mod 4); need m == 2 or 3 (mod 4)");
        if (!squarefree_abs(m))
            throw domain_error("from_discriminant: d = 4m with m = " + std::to_string(m) +
                               " not squarefree");
    }
    return RealPrimitiveCharacter(d);
}

RealPrimitiveCharacter::RealPrimitiveCharacter(std::int64_t d)
    : d_(d), D_(static_cast<std::uint64_t>(d < 0 ? -d : d)), kappa_(d > 0 ? 0 : 1) {
    table_.resize(D_);
    for (std::uint64_t rr = 0; rr < D_; ++rr)
        table_[rr] = static_cast<std::int8_t>(kronecker_symbol(d_, static_cast<std::int64_t>(rr)));
    // sanity: support is exactly the units mod D
    for (std::uint64_t rr = 0; rr < D_; ++rr) {
        bool unit = std::gcd(rr, D_) == 1;
        if (unit != (table_[rr] != 0))
            throw domain_error("character table support mismatch at residue " + std::to_string(rr));
    }
}

int RealPrimitiveCharacter::operator()(std::int64_t n) const {
    if (n == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(((n % static_cast<std::int64_t>(D_)) +
                                                  static_cast<std::int64_t>(D_)) %
                                                 static_cast<std::int64_t>(D_));
    int v = table_[r];
    // chi(-|n|) = chi(-1) chi(|n|); the table residue already encodes n mod D,
    // and chi has period D on all of Z, so no extra sign is needed.
    return v;
}

double RealPrimitiveCharacter::l_one() const {
    const double pi = std::numbers::pi;
    KahanSum s;
    if (kappa_ == 1) {
        for (std::uint64_t a = 1; a < D_; ++a)
            s.add(static_cast<double>(table_[a]) * static_cast<double>(a));
        return -pi / (static_cast<double>(D_) * std::sqrt(static_cast<double>(D_))) * s.value();
    }
    for (std::uint64_t a = 1; a < D_; ++a) {
        if (table_[a] == 0) continue;
        double t = std::sin(pi * static_cast<double>(a) / static_cast<double>(D_));
        s.add(static_cast<double>(table_[a]) * std::log(t));
    }
    return -s.value() / std::sqrt(static_cast<double>(D_));
}

double RealPrimitiveCharacter::eta() const { return l_one() * std::log(static_cast<double>(D_)); }

int principal_char(std::uint64_t D, std::int64_t n) {
    if (D == 0) throw domain_error("principal_char: modulus must be >= 1");
    std::uint64_t a = static_cast<std::uint64_t>(n < 0 ? -n : n);
    return std::gcd(a, D) == 1 ? 1 : 0;
}

} // namespace klsum::chars
