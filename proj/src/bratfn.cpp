#include "jacklab/bratfn.hpp"

#include <stdexcept>
#include <utility>

namespace jacklab {

BRatFn::BRatFn(BPoly num, BPoly den) {
    if (den.is_zero())
        throw std::invalid_argument("BRatFn: zero denominator (invalid series coefficient)");
    if (num.is_zero()) {
        num_ = BPoly();
        den_ = BPoly(BigRat(1));
        return;
    }
    BPoly g = poly_gcd(num, den);
    if (!g.is_one()) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    BigRat lead = den.leading();
    num_ = num.scaled(BigRat(1) / lead);
    den_ = den.scaled(BigRat(1) / lead);
}

const BPoly& BRatFn::as_polynomial() const {
    if (!is_polynomial())
        throw std::runtime_error("BRatFn::as_polynomial: nontrivial denominator " + den_.to_string());
    return num_;
}

BRatFn BRatFn::operator-() const {
    BRatFn r(*this);
    r.num_ = -r.num_;
    return r;
}

BRatFn operator+(const BRatFn& a, const BRatFn& b) {
    return BRatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BRatFn operator-(const BRatFn& a, const BRatFn& b) {
    return BRatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

BRatFn operator*(const BRatFn& a, const BRatFn& b) {
    return BRatFn(a.num_ * b.num_, a.den_ * b.den_);
}

BRatFn operator/(const BRatFn& a, const BRatFn& b) {
    if (b.is_zero()) throw std::invalid_argument("BRatFn: division by zero");
    return BRatFn(a.num_ * b.den_, a.den_ * b.num_);
}

BigRat BRatFn::eval(const BigRat& x) const {
    BigRat d = den_.eval(x);
    if (d == 0) throw std::runtime_error("BRatFn::eval: denominator vanishes at evaluation point");
    return num_.eval(x) / d;
}

std::string BRatFn::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

BRatFn ratfn_normalize(BPoly num, BPoly den) { return BRatFn(std::move(num), std::move(den)); }

}  // namespace jacklab
