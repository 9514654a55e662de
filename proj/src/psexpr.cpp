#include "jacklab/psexpr.hpp"

#include <mutex>
#include <stdexcept>

namespace jacklab {

void PSExpr::add(const Partition& mu, const BRatFn& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms.emplace(mu, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void MonExpr::add(const Partition& mu, const BRatFn& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms.emplace(mu, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms.erase(it);
    }
}

namespace {

// [m_lambda] p_mu: number of maps from the parts of mu onto positions
// 1..l(lambda) whose fibers sum to the corresponding parts of lambda.
BigInt monomial_coeff_of_power_sum(const Partition& lam, const Partition& mu) {
    const auto& lp = lam.parts();
    const auto& mp = mu.parts();
    std::vector<unsigned> sums(lp.size(), 0);
    BigInt total = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == mp.size()) {
            total += 1;  // fibers filled exactly by loop guard below
            return;
        }
        for (std::size_t v = 0; v < lp.size(); ++v) {
            if (sums[v] + mp[i] <= lp[v]) {
                sums[v] += mp[i];
                // prune: remaining mass must still fit
                self(self, i + 1);
                sums[v] -= mp[i];
            }
        }
    };
    // wrap: only count completions where every fiber is exactly full
    auto full = [&]() {
        for (std::size_t v = 0; v < lp.size(); ++v)
            if (sums[v] != lp[v]) return false;
        return true;
    };
    auto rec2 = [&](auto&& self, std::size_t i) -> void {
        if (i == mp.size()) {
            if (full()) total += 1;
            return;
        }
        for (std::size_t v = 0; v < lp.size(); ++v) {
            if (sums[v] + mp[i] <= lp[v]) {
                sums[v] += mp[i];
                self(self, i + 1);
                sums[v] -= mp[i];
            }
        }
    };
    (void)rec;
    rec2(rec2, 0);
    return total;
}

// Exact inverse of a lower-triangular-with-unit-structure square matrix is not
// applicable here; p_in_m is triangular w.r.t. dominance with nonzero
// diagonal, so plain Gaussian elimination over Q is exact and stable.
std::vector<std::vector<BigRat>> invert_rational(std::vector<std::vector<BigRat>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<BigRat>> inv(n, std::vector<BigRat>(n, BigRat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("basis matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        BigRat d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            BigRat f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

const BasisTables& basis_tables(unsigned n) {
    static std::mutex mtx;
    static std::map<unsigned, BasisTables> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    BasisTables bt;
    bt.n = n;
    bt.partitions = all_partitions(n);
    const std::size_t m = bt.partitions.size();
    for (std::size_t i = 0; i < m; ++i) bt.index[bt.partitions[i]] = i;
    bt.p_in_m.assign(m, std::vector<BigInt>(m, 0));
    std::vector<std::vector<BigRat>> pm(m, std::vector<BigRat>(m, BigRat(0)));
    for (std::size_t mi = 0; mi < m; ++mi)
        for (std::size_t li = 0; li < m; ++li) {
            bt.p_in_m[li][mi] = monomial_coeff_of_power_sum(bt.partitions[li], bt.partitions[mi]);
            pm[li][mi] = BigRat(bt.p_in_m[li][mi]);
        }
    bt.m_in_p = invert_rational(std::move(pm));
    return cache.emplace(n, std::move(bt)).first->second;
}

PSExpr m_to_p(const MonExpr& f) {
    const BasisTables& bt = basis_tables(f.degree);
    PSExpr out;
    out.degree = f.degree;
    for (const auto& [lam, c] : f.terms) {
        std::size_t li = bt.index.at(lam);
        for (std::size_t mi = 0; mi < bt.partitions.size(); ++mi) {
            const BigRat& w = bt.m_in_p[mi][li];
            if (w != 0) out.add(bt.partitions[mi], c * BRatFn(w));
        }
    }
    return out;
}

MonExpr p_to_m(const PSExpr& f) {
    const BasisTables& bt = basis_tables(f.degree);
    MonExpr out;
    out.degree = f.degree;
    for (const auto& [mu, c] : f.terms) {
        std::size_t mi = bt.index.at(mu);
        for (std::size_t li = 0; li < bt.partitions.size(); ++li) {
            const BigInt& w = bt.p_in_m[li][mi];
            if (w != 0) out.add(bt.partitions[li], c * BRatFn(BigRat(w)));
        }
    }
    return out;
}

BRatFn hall_scalar(const PSExpr& f, const PSExpr& g) {
    if (f.degree != g.degree)
        throw std::invalid_argument("hall_scalar: degree mismatch");
    BRatFn sum;
    const BPoly a = BPoly::alpha();
    for (const auto& [lam, cf] : f.terms) {
        auto it = g.terms.find(lam);
        if (it == g.terms.end()) continue;
        BPoly w = a.pow(lam.length()).scaled(BigRat(z_aut(lam)));
        sum += cf * it->second * BRatFn(w);
    }
    return sum;
}

}  // namespace jacklab
