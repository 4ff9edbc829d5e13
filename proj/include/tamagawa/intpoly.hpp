#pragma once

#include <string>
#include <vector>

#include "tamagawa/arith.hpp"

namespace tamagawa {

/// Dense univariate polynomial over Z, coefficients degree-indexed low-to-high.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<Int> coeffs);
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly monomial(const Int& c, unsigned deg);

    int degree() const { return int(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Int& operator[](size_t i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    IntPoly derivative() const;
    Int content() const;            // gcd of coefficients (0 for zero poly)
    Int fixed_divisor() const;      // gcd of values over Z, via 0..deg+1

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Int& c, const IntPoly& a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    std::string str(const std::string& var = "T") const;

  private:
    void trim();
    std::vector<Int> coeffs_;
};

/// Resultant with the convention
///   resultant(f, g) = lc(g)^deg(f) * prod over roots beta of g of f(beta),
/// computed exactly by a subresultant pseudo-remainder sequence.
/// Zero polynomial inputs are rejected.
Int resultant(const IntPoly& f, const IntPoly& g);

/// True iff f has a repeated root over the complex numbers
/// (equivalently resultant(f, f') = 0), deg f >= 1.
bool has_repeated_root(const IntPoly& f);

}  // namespace tamagawa
