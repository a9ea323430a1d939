#include "glcoh/formulas.hpp"

#include <stdexcept>

#include "glcoh/coinvariants.hpp"
#include "glcoh/errors.hpp"
#include "glcoh/shapes.hpp"

namespace glcoh {

PoincareSeries gamma_correction(long long p, int r) {
    if (!is_prime(p)) throw std::invalid_argument("gamma_correction: p must be prime");
    if (r < 1) throw std::invalid_argument("gamma_correction: r must be >= 1");
    long long q = 1;
    for (int i = 0; i < r; ++i) {
        if (q > (1LL << 40)) throw ScaleGuardError("p^r too large");
        q *= p;
    }
    PoincareSeries s;
    for (long long i = 0; i < q; ++i) {
        long long base = 2 * p * i;
        if (base + 2 * p - 2 > (1LL << 30)) throw ScaleGuardError("degree too large");
        s.add_term(static_cast<int>(base + 2 * p - 2), 1);
        s.add_term(static_cast<int>(base), -1);
    }
    return s;
}

PoincareSeries gamma_p_series(long long p, int r) {
    if (p > 7)
        throw ScaleGuardError(
            "gamma_p_series enumerates the symmetric group on p letters; p too large");
    PoincareSeries s = theorem1_series(Partition({static_cast<int>(p)}), p, r) +
                       gamma_correction(p, r);
    if (!s.nonnegative())
        throw std::logic_error("gamma_p_series: negative coefficient");
    return s;
}

Int gamma_top_degree(int k, long long p, int r) {
    if (k < 0) throw std::invalid_argument("gamma_top_degree: k must be >= 0");
    if (!is_prime(p)) throw std::invalid_argument("gamma_top_degree: p must be prime");
    if (r < 1) throw std::invalid_argument("gamma_top_degree: r must be >= 1");
    Int pk = 1, pr = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    for (int i = 0; i < r; ++i) pr *= p;
    return pk * (2 * pr - 2) + 2 * pk - 2;
}

EulerDualityReport euler_duality_check(long long p, int r) {
    EulerDualityReport rep;
    rep.sym_euler =
        theorem1_series(Partition({static_cast<int>(p)}), p, r).euler_characteristic();
    rep.gamma_euler = gamma_p_series(p, r).euler_characteristic();
    rep.equal = rep.sym_euler == rep.gamma_euler;
    return rep;
}

}  // namespace glcoh
