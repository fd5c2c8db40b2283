#pragma once

#include <cstdint>
#include <vector>

namespace klsum::chars {

// Kronecker symbol (a|n), defined for all integers (including n <= 0)
// by the usual extension of the Jacobi symbol.
int kronecker_symbol(std::int64_t a, std::int64_t n);

// d == 1 mod 4 and squarefree, or d = 4m with m == 2,3 mod 4 and m
// squarefree. (d = 1 passes the congruence test; callers that need a
// nontrivial character must additionally require |d| >= 3.)
bool is_fundamental_discriminant(std::int64_t d);

// The real primitive character mod D = |d| attached to a fundamental
// discriminant d, evaluated as chi(n) = (d|n). Immutable; evaluation is
// table-backed and safe for concurrent reads.
class RealPrimitiveCharacter {
public:
    static RealPrimitiveCharacter from_discriminant(std::int64_t d);

    std::int64_t discriminant() const { return d_; }
    std::uint64_t modulus() const { return D_; }
    // kappa with chi(-1) = (-1)^kappa; 0 iff d > 0
    int parity() const { return kappa_; }

    int operator()(std::int64_t n) const;

    // L(1, chi) by the exact finite formula:
    //   odd chi:  -(pi / D^{3/2}) * sum_{a<D} chi(a) a
    //   even chi: -(1/sqrt(D))   * sum_{a<D} chi(a) log sin(pi a / D)
    double l_one() const;
    // eta = L(1, chi) * log D
    double eta() const;

private:
    explicit RealPrimitiveCharacter(std::int64_t d);

    std::int64_t d_;
    std::uint64_t D_;
    int kappa_;
    std::vector<std::int8_t> table_; // chi(r) for r in [0, D)
};

// Principal character mod D: 1 iff gcd(n, D) = 1. D = 1 gives the
// constant function 1.
int principal_char(std::uint64_t D, std::int64_t n);

} // namespace klsum::chars
