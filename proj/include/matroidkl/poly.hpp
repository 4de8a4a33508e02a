#pragma once

#include <string>
#include <vector>

#include "matroidkl/bigint.hpp"

namespace matroidkl {

// Dense univariate polynomial over unbounded integers, coefficients
// degree-ascending, trailing zeros trimmed (zero polynomial = empty vector).
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(Int v);
    static IntPoly monomial(Int v, int deg);

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0);
    }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly scale(const Int& v) const;
    IntPoly shift(int m) const;  // multiply by t^m
    Int eval(const Int& x) const;

    // t^d * f(1/t); requires d >= deg(f). Throws DegreeTooSmall.
    IntPoly reverse(int d) const;

    std::string text() const;  // e.g. "1 + 3t + t^2"

  private:
    void trim();
    std::vector<Int> c_;
};

bool is_palindromic(const IntPoly& f, int d);

// true iff coefficients 0..deg weakly rise then weakly fall (zero poly: true)
bool is_unimodal(const IntPoly& f);

bool coeffwise_leq(const IntPoly& f, const IntPoly& g);  // f <= g coefficientwise
bool nonnegative_coeffs(const IntPoly& f);

// Dense bivariate polynomial; coeffs[i][j] is the x^i y^j coefficient.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(std::vector<std::vector<Int>> coeffs) : c_(std::move(coeffs)) {
        trim();
    }
    static BiPoly constant(Int v);
    static BiPoly monomial(Int v, int dx, int dy);

    const std::vector<std::vector<Int>>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Int coeff(int i, int j) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const { return c_ == o.c_; }
    bool operator!=(const BiPoly& o) const { return c_ != o.c_; }

    Int eval(const Int& x, const Int& y) const;
    IntPoly eval_y(const Int& y) const;  // univariate in x

    std::string text() const;

  private:
    void trim();
    std::vector<std::vector<Int>> c_;
};

// Coefficients of the expansion f(t) = sum gamma_i t^i (1+t)^(d-2i) of a
// palindromic polynomial of center d/2.
struct GammaVector {
    int d = 0;
    std::vector<Int> gammas;  // indices 0..floor(d/2)

    bool operator==(const GammaVector& o) const {
        return d == o.d && gammas == o.gammas;
    }
};

// Requires is_palindromic(f, d); throws NotPalindromic otherwise.
GammaVector gamma_expand(const IntPoly& f, int d);
IntPoly gamma_contract(const GammaVector& g);
bool is_gamma_positive(const GammaVector& g);

IntPoly pow_one_plus_t(int e);  // (1+t)^e

}  // namespace matroidkl
