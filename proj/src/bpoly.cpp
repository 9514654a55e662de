#include "jacklab/bpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace jacklab {

BPoly::BPoly(BigRat constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

BPoly::BPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

BPoly::BPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

BPoly BPoly::var() { return BPoly{0, 1}; }
BPoly BPoly::alpha() { return BPoly{1, 1}; }

void BPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRat BPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return BigRat(0);
    return c_[i];
}

const BigRat& BPoly::leading() const {
    if (c_.empty()) throw std::logic_error("BPoly::leading on zero polynomial");
    return c_.back();
}

BPoly BPoly::operator-() const {
    BPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

BPoly& BPoly::operator+=(const BPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
    if (a.is_zero() || b.is_zero()) return BPoly();
    std::vector<BigRat> r(a.c_.size() + b.c_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return BPoly(std::move(r));
}

BPoly BPoly::scaled(const BigRat& s) const {
    if (s == 0) return BPoly();
    BPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

BPoly BPoly::pow(unsigned e) const {
    BPoly r(BigRat(1));
    BPoly base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

BigRat BPoly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BPoly BPoly::substitute_shift(long delta) const {
    // p(x + delta) by Horner on the shifted variable.
    BPoly acc;
    BPoly lin{delta, 1};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * lin;
        acc += BPoly(*it);
    }
    return acc;
}

std::pair<BPoly, BPoly> BPoly::divmod(const BPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("BPoly::divmod: division by zero polynomial");
    BPoly rem(*this);
    if (rem.degree() < divisor.degree()) return {BPoly(), rem};
    std::vector<BigRat> q(rem.degree() - divisor.degree() + 1, BigRat(0));
    const BigRat& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        BigRat f = rem.leading() / lead;
        q[shift] = f;
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            rem.c_[i + shift] -= f * divisor.c_[i];
        rem.trim();
    }
    return {BPoly(std::move(q)), rem};
}

BPoly BPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(BigRat(1) / leading());
}

bool BPoly::integer_coeffs() const {
    for (const auto& x : c_)
        if (!rat_is_integer(x)) return false;
    return true;
}

bool BPoly::nonneg_integer_coeffs() const {
    for (const auto& x : c_)
        if (!rat_is_integer(x) || x < 0) return false;
    return true;
}

std::string BPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        BigRat c = c_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        BigRat a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

BPoly alpha_shift(const BPoly& in_alpha) { return in_alpha.substitute_shift(1); }
BPoly alpha_shift_inverse(const BPoly& in_b) { return in_b.substitute_shift(-1); }

BigRat poly_eval(const BPoly& p, const BigRat& x) { return p.eval(x); }

BPoly poly_gcd(BPoly a, BPoly b) {
    // Euclid over Q[b], renormalizing to monic at each step.
    while (!b.is_zero()) {
        BPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

}  // namespace jacklab
