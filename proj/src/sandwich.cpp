#include "glcoh/sandwich.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "glcoh/errors.hpp"
#include "glcoh/linalg.hpp"

namespace glcoh {

YoungSubgroup row_group(const SkewTuple& t) {
    return YoungSubgroup::of_blocks(t.row_blocks(), t.weight());
}

YoungSubgroup column_group(const SkewTuple& t) {
    return YoungSubgroup::of_blocks(t.column_blocks(), t.weight());
}

namespace {

void check_field(Field f) {
    if (f.p != 0 && !is_prime(f.p))
        throw std::invalid_argument("field characteristic must be 0 or prime");
}

// One generator move on the basis (coset, perm), with the sign it carries in
// the twisted action (+1 for plain actions and in characteristic 2).
struct Move {
    std::vector<std::int32_t> coset;
    std::vector<std::int32_t> perm;
    int sign = 1;
};

struct SidedGroup {
    const YoungSubgroup* group;
    bool on_left;
};

std::vector<Move> build_moves(const ElementaryBimodule& m,
                              const std::vector<SidedGroup>& roles,
                              bool sign_twisted, long long p) {
    std::vector<std::int32_t> identity_coset(m.n_cosets());
    std::iota(identity_coset.begin(), identity_coset.end(), 0);
    std::vector<Move> moves;
    for (const auto& role : roles) {
        for (const auto& g : role.group->generators()) {
            Move mv;
            if (role.on_left) {
                mv.coset = m.coset_left_map(g);
                mv.perm = m.perm_left_map(g);
            } else {
                mv.coset = identity_coset;
                mv.perm = m.perm_right_map(g);
            }
            mv.sign = (sign_twisted && p != 2) ? g.sign() : 1;
            moves.push_back(std::move(mv));
        }
    }
    return moves;
}

std::size_t apply_move(const ElementaryBimodule& m, const Move& mv,
                       std::size_t x) {
    return m.basis_index(
        static_cast<std::size_t>(mv.coset[m.coset_part(x)]),
        static_cast<std::size_t>(mv.perm[m.perm_part(x)]));
}

// Sign-consistent orbits of a signed permutation action; the consistent ones
// form a basis of the sign-twisted invariants.
std::vector<SignedVector> signed_orbit_basis(const ElementaryBimodule& m,
                                             const std::vector<Move>& moves) {
    std::size_t n = m.dimension();
    std::vector<std::int32_t> label(n, -1);
    std::vector<std::int8_t> sg(n, 0);
    std::vector<SignedVector> basis;
    std::vector<std::size_t> stack, members;
    for (std::size_t start = 0; start < n; ++start) {
        if (label[start] != -1) continue;
        std::int32_t id = static_cast<std::int32_t>(start);
        label[start] = id;
        sg[start] = 1;
        bool consistent = true;
        members.assign(1, start);
        stack.assign(1, start);
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (const auto& mv : moves) {
                std::size_t y = apply_move(m, mv, x);
                std::int8_t val = static_cast<std::int8_t>(sg[x] * mv.sign);
                if (label[y] == -1) {
                    label[y] = id;
                    sg[y] = val;
                    members.push_back(y);
                    stack.push_back(y);
                } else if (sg[y] != val) {
                    consistent = false;  // keep walking to label the orbit
                }
            }
        }
        if (!consistent) continue;
        SignedVector v;
        v.support.reserve(members.size());
        for (std::size_t b : members)
            v.support.emplace_back(static_cast<std::int32_t>(b), sg[b]);
        basis.push_back(std::move(v));
    }
    return basis;
}

CoinvariantProjection orbit_classes(const ElementaryBimodule& m,
                                    const std::vector<Move>& moves) {
    std::size_t n = m.dimension();
    CoinvariantProjection proj;
    proj.class_of.assign(n, -1);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (proj.class_of[start] != -1) continue;
        std::int32_t id = static_cast<std::int32_t>(proj.n_classes++);
        proj.class_of[start] = id;
        stack.assign(1, start);
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (const auto& mv : moves) {
                std::size_t y = apply_move(m, mv, x);
                if (proj.class_of[y] == -1) {
                    proj.class_of[y] = id;
                    stack.push_back(y);
                }
            }
        }
    }
    return proj;
}

using IntRow = std::vector<std::pair<std::int32_t, long long>>;

// Project each signed vector to the orbit classes, collecting integer rows.
std::vector<IntRow> projected_rows(const std::vector<SignedVector>& basis,
                                   const CoinvariantProjection& proj) {
    std::vector<long long> acc(proj.n_classes, 0);
    std::vector<std::int32_t> touched;
    std::vector<IntRow> rows;
    rows.reserve(basis.size());
    for (const auto& v : basis) {
        touched.clear();
        for (const auto& [b, s] : v.support) {
            std::int32_t c = proj.class_of[b];
            if (acc[c] == 0) touched.push_back(c);
            acc[c] += s;
        }
        IntRow row;
        for (std::int32_t c : touched) {
            if (acc[c] != 0) row.emplace_back(c, acc[c]);
            acc[c] = 0;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int row_rank(const std::vector<IntRow>& rows, std::size_t ncols, Field field) {
    if (field.rational()) {
        // fraction-free elimination over the integers
        std::vector<std::vector<Int>> dense;
        dense.reserve(rows.size());
        for (const auto& row : rows) {
            std::vector<Int> r(ncols, 0);
            for (const auto& [c, v] : row) r[c] = v;
            dense.push_back(std::move(r));
        }
        return bareiss_rank(std::move(dense));
    }
    FpField fp(field.p);
    std::vector<SparseRow<FpField>> sparse;
    sparse.reserve(rows.size());
    for (const auto& row : rows) {
        SparseRow<FpField> r;
        for (const auto& [c, v] : row) {
            auto e = fp.from_int(v);
            if (!fp.is_zero(e)) r.emplace_back(c, e);
        }
        sparse.push_back(std::move(r));
    }
    return rank_sparse(fp, std::move(sparse), static_cast<int>(ncols));
}

int sandwich_dim_core(const ElementaryBimodule& m,
                      const std::vector<SidedGroup>& alt,
                      const std::vector<SidedGroup>& coinv, Field field) {
    check_field(field);
    auto basis = signed_orbit_basis(m, build_moves(m, alt, true, field.p));
    auto proj = orbit_classes(m, build_moves(m, coinv, false, field.p));
    return row_rank(projected_rows(basis, proj), proj.n_classes, field);
}

}  // namespace

std::vector<SignedVector> alt_invariants(const ElementaryBimodule& m,
                                         const YoungSubgroup& left_group,
                                         const YoungSubgroup& right_group,
                                         Field field) {
    check_field(field);
    return signed_orbit_basis(
        m, build_moves(m, {{&left_group, true}, {&right_group, false}}, true,
                       field.p));
}

CoinvariantProjection coinvariant_projection(const ElementaryBimodule& m,
                                             const YoungSubgroup& left_group,
                                             const YoungSubgroup& right_group) {
    return orbit_classes(
        m, build_moves(m, {{&left_group, true}, {&right_group, false}}, false, 0));
}

int sandwich_dim(const ElementaryBimodule& m, const SkewTuple& left,
                 const SkewTuple& right, Field field,
                 SandwichConvention convention) {
    if (left.weight() != m.d() || right.weight() != m.d())
        throw std::invalid_argument("sandwich_dim: tuple weight != bimodule d");
    YoungSubgroup alt_l = row_group(left), alt_r = row_group(right);
    YoungSubgroup co_l = convention == SandwichConvention::coinvariants_on_rows
                             ? row_group(left)
                             : column_group(left);
    YoungSubgroup co_r = convention == SandwichConvention::coinvariants_on_rows
                             ? row_group(right)
                             : column_group(right);
    bool swap = convention == SandwichConvention::swapped_sides;
    return sandwich_dim_core(m, {{&alt_l, !swap}, {&alt_r, swap}},
                             {{&co_l, !swap}, {&co_r, swap}}, field);
}

int sandwich_dim_groups(const ElementaryBimodule& m,
                        const YoungSubgroup& alt_left,
                        const YoungSubgroup& alt_right,
                        const YoungSubgroup& coinv_left,
                        const YoungSubgroup& coinv_right, Field field) {
    return sandwich_dim_core(m, {{&alt_left, true}, {&alt_right, false}},
                             {{&coinv_left, true}, {&coinv_right, false}},
                             field);
}

int rational_rank(const ElementaryBimodule& m, const SkewTuple& left,
                  const SkewTuple& right) {
    return sandwich_dim(m, left, right, Field{0});
}

ExchangeDims invariants_coinvariants_exchange(const ElementaryBimodule& m,
                                              const YoungSubgroup& alt_group,
                                              bool alt_on_left,
                                              const YoungSubgroup& coinv_group,
                                              Field field) {
    check_field(field);
    auto alt_moves =
        build_moves(m, {{&alt_group, alt_on_left}}, true, field.p);
    auto coinv_moves =
        build_moves(m, {{&coinv_group, !alt_on_left}}, false, field.p);

    ExchangeDims dims;

    // invariants first: intrinsic coinvariants of the alt-invariant subspace
    // V, as rank([V; D]) - rank(D) with D = { v - h.v : v in V }.
    auto basis = signed_orbit_basis(m, alt_moves);
    std::vector<IntRow> v_rows, d_rows;
    for (const auto& v : basis) {
        IntRow row;
        for (const auto& [b, s] : v.support) row.emplace_back(b, s);
        std::sort(row.begin(), row.end());
        v_rows.push_back(row);
        for (const auto& mv : coinv_moves) {
            std::map<std::int32_t, long long> diff;
            for (const auto& [b, s] : v.support) {
                diff[b] += s;
                diff[static_cast<std::int32_t>(apply_move(m, mv, b))] -= s;
            }
            IntRow drow;
            for (const auto& [c, val] : diff)
                if (val != 0) drow.emplace_back(c, val);
            if (!drow.empty()) d_rows.push_back(std::move(drow));
        }
    }
    std::size_t n = m.dimension();
    int rank_d = row_rank(d_rows, n, field);
    std::vector<IntRow> stacked = d_rows;
    stacked.insert(stacked.end(), v_rows.begin(), v_rows.end());
    dims.invariants_first = row_rank(stacked, n, field) - rank_d;

    // coinvariants first: the quotient is a permutation module on the orbit
    // classes, the alt group acts on classes up to sign, so its twisted
    // invariants are again counted by sign-consistent orbits.
    auto proj = orbit_classes(m, coinv_moves);
    std::vector<std::int32_t> rep(proj.n_classes, -1);
    for (std::size_t b = 0; b < n; ++b)
        if (rep[proj.class_of[b]] == -1)
            rep[proj.class_of[b]] = static_cast<std::int32_t>(b);
    struct ClassMove {
        std::vector<std::int32_t> map;
        int sign;
    };
    std::vector<ClassMove> class_moves;
    for (const auto& mv : alt_moves) {
        ClassMove cm;
        cm.sign = mv.sign;
        cm.map.resize(proj.n_classes);
        for (std::size_t c = 0; c < proj.n_classes; ++c)
            cm.map[c] = proj.class_of[apply_move(m, mv, rep[c])];
        class_moves.push_back(std::move(cm));
    }
    std::vector<std::int32_t> label(proj.n_classes, -1);
    std::vector<std::int8_t> sg(proj.n_classes, 0);
    std::vector<std::size_t> stack;
    int count = 0;
    for (std::size_t start = 0; start < proj.n_classes; ++start) {
        if (label[start] != -1) continue;
        label[start] = static_cast<std::int32_t>(start);
        sg[start] = 1;
        bool consistent = true;
        stack.assign(1, start);
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (const auto& cm : class_moves) {
                std::size_t y = static_cast<std::size_t>(cm.map[x]);
                std::int8_t val = static_cast<std::int8_t>(sg[x] * cm.sign);
                if (label[y] == -1) {
                    label[y] = label[start];
                    sg[y] = val;
                    stack.push_back(y);
                } else if (sg[y] != val) {
                    consistent = false;
                }
            }
        }
        if (consistent) ++count;
    }
    dims.coinvariants_first = count;
    return dims;
}

namespace {

// All tuples (lambda_1 | ... | lambda_n) with lambda_i |- mu_i.
std::vector<SkewTuple> tuples_for(const Composition& mu) {
    std::vector<std::vector<Partition>> choices;
    for (int part : mu.parts()) choices.push_back(partitions_of(part));
    std::vector<SkewTuple> out;
    std::vector<Partition> current(choices.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == choices.size()) {
            out.emplace_back(current);
            return;
        }
        for (const auto& lam : choices[i]) {
            current[i] = lam;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

long long power_checked(long long p, int r) {
    long long q = 1;
    for (int i = 0; i < r; ++i) {
        if (q > (1LL << 40)) throw ScaleGuardError("p^r too large");
        q *= p;
    }
    return q;
}

}  // namespace

PoincareSeries prop23_series(const Composition& mu, long long p, int r,
                             const Prop23Options& opts) {
    if (!is_prime(p)) throw std::invalid_argument("prop23_series: p must be prime");
    if (r < 0) throw std::invalid_argument("prop23_series: r must be >= 0");
    int d = mu.weight();
    if (d < 1) throw std::invalid_argument("prop23_series: weight(mu) must be >= 1");
    if (d > opts.dmax)
        throw ScaleGuardError("sandwich computations guarded to d <= " +
                              std::to_string(opts.dmax));
    long long q = power_checked(p, r);
    std::vector<SkewTuple> tuples = tuples_for(mu);
    std::map<Partition, Int> dim_of_gamma;
    PoincareSeries series;
    for (const auto& [key, count] : multiset_census(d, q)) {
        const auto& [gamma_sorted, value_sum] = key;
        auto it = dim_of_gamma.find(gamma_sorted);
        if (it == dim_of_gamma.end()) {
            ElementaryBimodule b(d, Composition(gamma_sorted), 0);
            Int total = 0;
            for (const auto& t : tuples)
                total += sandwich_dim(b, t, t, Field{p}, opts.convention);
            it = dim_of_gamma.emplace(gamma_sorted, total).first;
        }
        series.add_term(2 * value_sum, count * it->second);
    }
    return series;
}

PoincareSeries prop23_series(const Partition& mu, long long p, int r,
                             const Prop23Options& opts) {
    return prop23_series(Composition(mu), p, r, opts);
}

PoincareSeries ext_series(const SkewTuple& left, const SkewTuple& right,
                          long long p, int r, const Prop23Options& opts) {
    if (!is_prime(p)) throw std::invalid_argument("ext_series: p must be prime");
    if (r < 0) throw std::invalid_argument("ext_series: r must be >= 0");
    int d = left.weight();
    if (d != right.weight())
        throw std::invalid_argument("ext_series: tuple weights differ");
    if (d < 1) throw std::invalid_argument("ext_series: weight must be >= 1");
    if (d > opts.dmax)
        throw ScaleGuardError("sandwich computations guarded to d <= " +
                              std::to_string(opts.dmax));
    long long q = power_checked(p, r);
    std::map<Partition, Int> dim_of_gamma;
    PoincareSeries series;
    for (const auto& [key, count] : multiset_census(d, q)) {
        const auto& [gamma_sorted, value_sum] = key;
        auto it = dim_of_gamma.find(gamma_sorted);
        if (it == dim_of_gamma.end()) {
            ElementaryBimodule b(d, Composition(gamma_sorted), 0);
            it = dim_of_gamma
                     .emplace(gamma_sorted,
                              sandwich_dim(b, left, right, Field{p},
                                           opts.convention))
                     .first;
        }
        series.add_term(2 * value_sum, count * it->second);
    }
    return series;
}

}  // namespace glcoh
