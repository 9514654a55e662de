#pragma once

#include <string>

#include "jacklab/bpoly.hpp"

namespace jacklab {

// Reduced ratio of polynomials in b. Canonical form: gcd(num, den) = 1 and
// the denominator is monic, so equality is structural comparison.
class BRatFn {
public:
    BRatFn() : den_(BigRat(1)) {}  // zero: 0/1
    BRatFn(BPoly num, BPoly den);
    explicit BRatFn(BPoly p) : num_(std::move(p)), den_(BigRat(1)) {}
    explicit BRatFn(const BigRat& q) : num_(q), den_(BigRat(1)) {}

    const BPoly& num() const { return num_; }
    const BPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    // Hard error when the reduced form still has a nontrivial denominator.
    const BPoly& as_polynomial() const;

    BRatFn operator-() const;
    friend BRatFn operator+(const BRatFn& a, const BRatFn& b);
    friend BRatFn operator-(const BRatFn& a, const BRatFn& b);
    friend BRatFn operator*(const BRatFn& a, const BRatFn& b);
    friend BRatFn operator/(const BRatFn& a, const BRatFn& b);
    BRatFn& operator+=(const BRatFn& o) { return *this = *this + o; }
    BRatFn& operator-=(const BRatFn& o) { return *this = *this - o; }
    BRatFn& operator*=(const BRatFn& o) { return *this = *this * o; }
    BRatFn& operator/=(const BRatFn& o) { return *this = *this / o; }
    friend bool operator==(const BRatFn& a, const BRatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Evaluation at a point where the denominator does not vanish.
    BigRat eval(const BigRat& x) const;

    std::string to_string() const;

private:
    BPoly num_, den_;
};

BRatFn ratfn_normalize(BPoly num, BPoly den);

}  // namespace jacklab
