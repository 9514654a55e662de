#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "jacklab/numbers.hpp"

namespace jacklab {

// Univariate polynomial in the deformation variable b, dense coefficients,
// index i = coefficient of b^i. The zero polynomial has no coefficients;
// otherwise the leading coefficient is nonzero.
class BPoly {
public:
    BPoly() = default;
    explicit BPoly(BigRat constant);
    explicit BPoly(std::vector<BigRat> coeffs);
    BPoly(std::initializer_list<long> coeffs);

    static BPoly var();    // b
    static BPoly alpha();  // b + 1

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigRat coeff(int i) const;
    const BigRat& leading() const;
    const std::vector<BigRat>& coeffs() const { return c_; }

    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    BPoly operator-() const;
    BPoly& operator+=(const BPoly& o);
    BPoly& operator-=(const BPoly& o);
    friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
    friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
    friend BPoly operator*(const BPoly& a, const BPoly& b);
    friend bool operator==(const BPoly& a, const BPoly& b) { return a.c_ == b.c_; }

    BPoly scaled(const BigRat& s) const;
    BPoly pow(unsigned e) const;

    BigRat eval(const BigRat& x) const;  // Horner
    BPoly substitute_shift(long delta) const;  // p(x + delta)

    // Divide by a nonzero divisor, returning (quotient, remainder).
    std::pair<BPoly, BPoly> divmod(const BPoly& divisor) const;
    BPoly monic() const;

    // True iff every coefficient is an integer (and, optionally, >= 0).
    bool integer_coeffs() const;
    bool nonneg_integer_coeffs() const;

    std::string to_string(const std::string& var = "b") const;

private:
    void trim();
    std::vector<BigRat> c_;
};

// Substitution between the two parameter conventions, alpha = b + 1.
// alpha_shift: a polynomial written in alpha, rewritten in b.
BPoly alpha_shift(const BPoly& in_alpha);
// Inverse direction: a polynomial in b rewritten in alpha.
BPoly alpha_shift_inverse(const BPoly& in_b);

BigRat poly_eval(const BPoly& p, const BigRat& x);

// Monic gcd; gcd(0,0) = 0.
BPoly poly_gcd(BPoly a, BPoly b);

}  // namespace jacklab
