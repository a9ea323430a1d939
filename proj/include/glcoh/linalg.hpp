#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace glcoh {

/// Arithmetic mod a prime. Elements kept in [0, p).
struct FpField {
    long long p;
    using Elem = long long;
    explicit FpField(long long prime) : p(prime) {}
    Elem from_int(long long v) const {
        long long r = v % p;
        return r < 0 ? r + p : r;
    }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return (a + b) % p; }
    Elem sub(const Elem& a, const Elem& b) const { return (a - b + p) % p; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p; }
    Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // binary exponentiation, a^(p-2)
        Elem base = a, result = 1;
        long long e = p - 2;
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }
};

/// Exact rational arithmetic.
struct RationalField {
    using Elem = boost::multiprecision::cpp_rational;
    Elem from_int(long long v) const { return Elem(v); }
    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
};

template <class F>
using SparseRow = std::vector<std::pair<std::int32_t, typename F::Elem>>;

/// Rank by sparse Gaussian elimination with a dense accumulator. Rows are
/// processed shortest first and reduced against the pivots collected so far.
template <class F>
int rank_sparse(const F& field, std::vector<SparseRow<F>> rows, int ncols) {
    using Elem = typename F::Elem;
    std::sort(rows.begin(), rows.end(),
              [](const SparseRow<F>& a, const SparseRow<F>& b) {
                  return a.size() < b.size();
              });
    std::vector<SparseRow<F>> pivot_rows;          // leading coefficient 1
    std::vector<std::int32_t> pivot_of(ncols, -1);  // column -> pivot row
    std::vector<Elem> buf(ncols, field.zero());
    std::vector<std::int32_t> touched;
    int rank = 0;
    for (auto& row : rows) {
        touched.clear();
        for (auto& [c, v] : row) {
            if (field.is_zero(buf[c])) touched.push_back(c);
            buf[c] = field.add(buf[c], v);
        }
        std::sort(touched.begin(), touched.end());
        // eliminate in column order; reductions may touch new columns
        for (std::size_t i = 0; i < touched.size(); ++i) {
            std::int32_t c = touched[i];
            if (field.is_zero(buf[c])) continue;
            std::int32_t pr = pivot_of[c];
            if (pr == -1) continue;
            Elem f = buf[c];
            for (auto& [cc, vv] : pivot_rows[pr]) {
                if (field.is_zero(buf[cc])) {
                    // keep touched sorted by inserting in position
                    auto it = std::lower_bound(touched.begin() + i + 1,
                                               touched.end(), cc);
                    if (it == touched.end() || *it != cc) touched.insert(it, cc);
                }
                buf[cc] = field.sub(buf[cc], field.mul(f, vv));
            }
        }
        // collect the remaining row
        SparseRow<F> reduced;
        for (std::int32_t c : touched)
            if (!field.is_zero(buf[c])) reduced.emplace_back(c, buf[c]);
        for (std::int32_t c : touched) buf[c] = field.zero();
        if (reduced.empty()) continue;
        Elem lead_inv = field.inv(reduced.front().second);
        for (auto& [c, v] : reduced) v = field.mul(v, lead_inv);
        pivot_of[reduced.front().first] =
            static_cast<std::int32_t>(pivot_rows.size());
        pivot_rows.push_back(std::move(reduced));
        ++rank;
    }
    return rank;
}

/// Dense reduced row echelon form; returns pivot columns. Mutates m.
template <class F>
std::vector<int> rref_dense(const F& field,
                            std::vector<std::vector<typename F::Elem>>& m,
                            int ncols) {
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && field.is_zero(m[sel][col])) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        auto inv = field.inv(m[row][col]);
        for (int c = 0; c < ncols; ++c) m[row][c] = field.mul(m[row][c], inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || field.is_zero(m[i][col])) continue;
            auto f = m[i][col];
            for (int c = 0; c < ncols; ++c)
                m[i][c] = field.sub(m[i][c], field.mul(f, m[row][c]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
int rank_dense(const F& field, std::vector<std::vector<typename F::Elem>> m,
               int ncols) {
    return static_cast<int>(rref_dense(field, m, ncols).size());
}

/// Basis of {x : m x = 0} for a dense matrix with ncols columns.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace_dense(
    const F& field, std::vector<std::vector<typename F::Elem>> m, int ncols) {
    using Elem = typename F::Elem;
    std::vector<int> pivots = rref_dense(field, m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (int fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Elem> v(ncols, field.zero());
        v[fc] = field.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = field.neg(m[r][fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination; this is
/// the rank over the rationals.
int bareiss_rank(std::vector<std::vector<boost::multiprecision::cpp_int>> m);

}  // namespace glcoh
