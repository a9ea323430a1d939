#include "glcoh/poincare.hpp"

#include <sstream>
#include <stdexcept>

namespace glcoh {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

PoincareSeries PoincareSeries::constant(Int c) { return monomial(0, std::move(c)); }

PoincareSeries PoincareSeries::monomial(int degree, Int coeff) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    PoincareSeries s;
    s.add_term(degree, coeff);
    return s;
}

const Int& PoincareSeries::coefficient(int degree) const {
    static const Int zero = 0;
    if (degree < 0 || degree >= static_cast<int>(c_.size())) return zero;
    return c_[degree];
}

void PoincareSeries::add_term(int degree, const Int& coeff) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    if (coeff == 0) return;
    if (degree >= static_cast<int>(c_.size())) c_.resize(degree + 1, Int(0));
    c_[degree] += coeff;
    normalize();
}

void PoincareSeries::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PoincareSeries PoincareSeries::operator+(const PoincareSeries& o) const {
    PoincareSeries r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.normalize();
    return r;
}

PoincareSeries PoincareSeries::operator-(const PoincareSeries& o) const {
    PoincareSeries r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.normalize();
    return r;
}

PoincareSeries PoincareSeries::shift(int k) const {
    if (k < 0 || k % 2 != 0)
        throw std::invalid_argument("shift: k must be even and nonnegative");
    if (c_.empty()) return {};
    PoincareSeries r;
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

Int PoincareSeries::euler_characteristic() const {
    Int e = 0;
    for (std::size_t i = 0; i < c_.size(); ++i)
        e += (i % 2 == 0) ? c_[i] : -c_[i];
    return e;
}

std::optional<int> PoincareSeries::top_degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

Int PoincareSeries::value_at_one() const {
    Int v = 0;
    for (const auto& c : c_) v += c;
    return v;
}

bool PoincareSeries::even_degrees_only() const {
    for (std::size_t i = 1; i < c_.size(); i += 2)
        if (c_[i] != 0) return false;
    return true;
}

bool PoincareSeries::nonnegative() const {
    for (const auto& c : c_)
        if (c < 0) return false;
    return true;
}

std::vector<std::pair<int, Int>> PoincareSeries::sparse() const {
    std::vector<std::pair<int, Int>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) out.emplace_back(static_cast<int>(i), c_[i]);
    return out;
}

std::string PoincareSeries::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [deg, coeff] : sparse()) {
        if (!first) os << (coeff > 0 ? " + " : " - ");
        else if (coeff < 0) os << "-";
        Int a = abs(coeff);
        if (deg == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t";
            if (deg != 1) os << "^" << deg;
        }
        first = false;
    }
    return os.str();
}

PoincareSeries e_r_series(long long p, int r) {
    if (!is_prime(p)) throw std::invalid_argument("e_r_series: p must be prime");
    if (r < 0) throw std::invalid_argument("e_r_series: r must be >= 0");
    Int q = 1;
    for (int i = 0; i < r; ++i) q *= p;
    PoincareSeries s;
    for (Int i = 0; i < q; ++i)
        s.add_term(2 * static_cast<int>(i), 1);
    return s;
}

}  // namespace glcoh
