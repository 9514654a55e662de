#include "jacklab/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jacklab {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("Partition: zero part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::rectangular(unsigned q, unsigned r) {
    if (q == 0 || r == 0) throw std::invalid_argument("rectangular: q and r must be positive");
    return Partition(std::vector<unsigned>(q, r));
}

Partition Partition::ones(unsigned n) {
    return n ? Partition(std::vector<unsigned>(n, 1)) : Partition();
}

unsigned Partition::multiplicity(unsigned value) const {
    unsigned m = 0;
    for (unsigned p : parts_) m += (p == value);
    return m;
}

Partition Partition::doubled() const {
    std::vector<unsigned> d(parts_);
    for (auto& p : d) p *= 2;
    return Partition(std::move(d));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<unsigned> c(parts_[0], 0);
    for (unsigned p : parts_)
        for (unsigned j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                        a.parts_.begin(), a.parts_.end());
}

std::vector<Partition> all_partitions(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    // descending recursive generation emits reverse-lexicographic order
    auto rec = [&](auto&& self, unsigned rem, unsigned max_part) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

BigInt z_aut(const Partition& lam) {
    BigInt z = 1;
    unsigned run = 0;
    const auto& pp = lam.parts();
    for (std::size_t i = 0; i < pp.size(); ++i) {
        ++run;
        if (i + 1 == pp.size() || pp[i + 1] != pp[i]) {
            z *= factorial(run) * pow_int(BigInt(pp[i]), run);
            run = 0;
        }
    }
    return z;
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
    if (mu.weight() != lam.weight()) return false;
    long long pm = 0, pl = 0;
    std::size_t rows = std::max(mu.length(), lam.length());
    for (std::size_t i = 0; i < rows; ++i) {
        pm += mu.part(i);
        pl += lam.part(i);
        if (pm > pl) return false;
    }
    return true;
}

HookData hook_products(const Partition& lam) {
    HookData hd;
    hd.hook_alpha = BPoly(BigRat(1));
    hd.hook_alpha_prime = BPoly(BigRat(1));
    hd.classical = 1;
    const Partition conj = lam.conjugate();
    const BPoly a = BPoly::alpha();
    for (unsigned i = 1; i <= lam.length(); ++i) {
        for (unsigned j = 1; j <= lam.part(i - 1); ++j) {
            long arm = static_cast<long>(lam.part(i - 1)) - j;
            long leg = static_cast<long>(conj.part(j - 1)) - i;
            hd.hook_alpha = hd.hook_alpha * (a.scaled(BigRat(arm)) + BPoly(BigRat(leg + 1)));
            hd.hook_alpha_prime = hd.hook_alpha_prime * (a.scaled(BigRat(arm + 1)) + BPoly(BigRat(leg)));
            hd.classical *= (arm + leg + 1);
        }
    }
    const Partition d = lam.doubled();
    const Partition dconj = d.conjugate();
    hd.classical_doubled = 1;
    for (unsigned i = 1; i <= d.length(); ++i)
        for (unsigned j = 1; j <= d.part(i - 1); ++j) {
            long arm = static_cast<long>(d.part(i - 1)) - j;
            long leg = static_cast<long>(dconj.part(j - 1)) - i;
            hd.classical_doubled *= (arm + leg + 1);
        }
    return hd;
}

BPoly alpha_content(const Box& box) {
    if (box.row == 0 || box.col == 0) throw std::invalid_argument("alpha_content: 1-based coordinates");
    return BPoly::alpha().scaled(BigRat(static_cast<long>(box.col) - 1)) -
           BPoly(BigRat(static_cast<long>(box.row) - 1));
}

Partition union_and_pad(const Partition& a, const Partition& b, unsigned ones) {
    std::vector<unsigned> parts;
    parts.reserve(a.length() + b.length() + ones);
    parts.insert(parts.end(), a.parts().begin(), a.parts().end());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    parts.insert(parts.end(), ones, 1u);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

}  // namespace jacklab
