#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace glcoh {

using Int = boost::multiprecision::cpp_int;

bool is_prime(long long n);

/// Integer-coefficient polynomial in t recording graded dimensions. Trailing
/// zeros are normalized away; the zero series has empty support. Intermediate
/// series may carry negative coefficients (the divided-power correction
/// term); only final cohomology results assert nonnegativity.
class PoincareSeries {
public:
    PoincareSeries() = default;  // zero series
    static PoincareSeries constant(Int c);
    static PoincareSeries monomial(int degree, Int coeff);

    const Int& coefficient(int degree) const;
    const std::vector<Int>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add_term(int degree, const Int& coeff);

    PoincareSeries operator+(const PoincareSeries& o) const;
    PoincareSeries operator-(const PoincareSeries& o) const;

    /// Multiply by t^k; k must be even and nonnegative.
    PoincareSeries shift(int k) const;

    /// Evaluation at t = -1.
    Int euler_characteristic() const;

    /// Largest degree with nonzero coefficient; nullopt for the zero series.
    std::optional<int> top_degree() const;

    /// Evaluation at t = 1 (total dimension).
    Int value_at_one() const;

    bool even_degrees_only() const;
    bool nonnegative() const;

    /// [degree, coefficient] pairs, degrees strictly increasing, zero
    /// coefficients omitted.
    std::vector<std::pair<int, Int>> sparse() const;

    std::string to_string() const;

    friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;

private:
    void normalize();
    std::vector<Int> c_;
};

/// Poincare series of Ext*(I^{(r)}, I^{(r)}): one dimension in each even
/// degree 0..2p^r-2. Rejects non-prime p.
PoincareSeries e_r_series(long long p, int r);

}  // namespace glcoh
