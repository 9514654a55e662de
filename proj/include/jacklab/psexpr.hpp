#pragma once

#include <map>
#include <vector>

#include "jacklab/bratfn.hpp"
#include "jacklab/partition.hpp"

namespace jacklab {

// Degree-homogeneous symmetric function as a coefficient map over partitions
// of the degree; absent key means coefficient zero.
struct PSExpr {
    unsigned degree = 0;
    std::map<Partition, BRatFn> terms;

    BRatFn coeff(const Partition& mu) const {
        auto it = terms.find(mu);
        return it == terms.end() ? BRatFn() : it->second;
    }
    void add(const Partition& mu, const BRatFn& v);
};

struct MonExpr {
    unsigned degree = 0;
    std::map<Partition, BRatFn> terms;

    BRatFn coeff(const Partition& mu) const {
        auto it = terms.find(mu);
        return it == terms.end() ? BRatFn() : it->second;
    }
    void add(const Partition& mu, const BRatFn& v);
};

// Per-degree basis data: the partition list in canonical order and the exact
// transition matrix between the power-sum and monomial bases.
struct BasisTables {
    unsigned n = 0;
    std::vector<Partition> partitions;
    std::map<Partition, std::size_t> index;
    // p_mu = sum_lambda p_in_m[lambda][mu] * m_lambda  (integers)
    std::vector<std::vector<BigInt>> p_in_m;
    // inverse, exact rationals: m_lambda = sum_mu m_in_p[mu][lambda] * p_mu
    std::vector<std::vector<BigRat>> m_in_p;
};

const BasisTables& basis_tables(unsigned n);

PSExpr m_to_p(const MonExpr& f);
MonExpr p_to_m(const PSExpr& f);

// <p_lambda, p_mu>_alpha = z_lambda (1+b)^{l(lambda)} delta_{lambda,mu}
BRatFn hall_scalar(const PSExpr& f, const PSExpr& g);

}  // namespace jacklab
