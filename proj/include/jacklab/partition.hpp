#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "jacklab/bpoly.hpp"
#include "jacklab/numbers.hpp"

namespace jacklab {

// Integer partition: weakly decreasing positive parts; empty allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    static Partition rectangular(unsigned q, unsigned r);  // q parts of size r
    static Partition single_row(unsigned n) { return n ? Partition({n}) : Partition(); }
    static Partition ones(unsigned n);  // 1^n

    unsigned weight() const { return weight_; }   // |lambda|
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    unsigned multiplicity(unsigned value) const;  // m_i(lambda)
    bool empty() const { return parts_.empty(); }

    Partition doubled() const;    // 2*lambda = [2l1, 2l2, ...]
    Partition conjugate() const;

    std::string to_string() const;  // e.g. "[3,3,2]"

    // Canonical total order used for all deterministic iteration: weight
    // ascending, then parts lexicographically descending ([n] before
    // [n-1,1] before ... before [1^n]). Refines reverse dominance.
    friend bool operator<(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

struct Box {
    unsigned row = 1;  // 1-based
    unsigned col = 1;
};

// All partitions of n in the canonical order ([n] first, [1^n] last).
std::vector<Partition> all_partitions(unsigned n);

// z_lambda = prod m_i(lambda)! * i^{m_i(lambda)}
BigInt z_aut(const Partition& lam);

// Dominance order; false whenever |mu| != |lambda|.
bool dominance_leq(const Partition& mu, const Partition& lam);

struct HookData {
    BPoly hook_alpha;        // prod(alpha*a + l + 1), written in b
    BPoly hook_alpha_prime;  // prod(alpha*(a+1) + l), written in b
    BigInt classical;        // H_lambda
    BigInt classical_doubled;  // H_{2 lambda}
};
HookData hook_products(const Partition& lam);

// alpha-content of a box, as a polynomial in b (alpha = b+1):
// alpha*(col-1) - (row-1). The binding of the formula's two coordinates to
// row/column is the one under which the principal specialization of the
// orthogonality-built Jack polynomials factors through contents.
BPoly alpha_content(const Box& box);

// Multiset union of parts plus `ones` extra parts equal to 1.
Partition union_and_pad(const Partition& a, const Partition& b, unsigned ones);

}  // namespace jacklab
