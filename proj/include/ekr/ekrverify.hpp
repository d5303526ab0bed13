#pragma once

// The incidence matrix H of point-image pairs against S(n), its blocks
// N, M, W, the derangements π_{a,b}, and the exact rank/kernel/module
// checks built on them. Also classification of maximum intersecting
// families and the depth-bounded module dimension comparisons for P_t(n).

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ekr/chartab.hpp"
#include "ekr/graphs.hpp"
#include "ekr/linalg.hpp"
#include "ekr/scheme.hpp"
#include "ekr/search.hpp"
#include "ekr/symmetric_group.hpp"

namespace ekr {

inline constexpr int kMaxIncidenceDegree = 7;

inline void require_incidence_degree(int n) {
    if (n < 3 || n > kMaxIncidenceDegree)
        throw DegreeError("incidence matrices are supported for 3 <= n <= " + std::to_string(kMaxIncidenceDegree) +
                          " (got " + std::to_string(n) + ")");
}

using Pair = std::pair<int, int>;

/// Pairs (i, j), 1 <= i, j <= n-1, ordered by i then j.
inline std::vector<Pair> incidence_columns(int n) {
    std::vector<Pair> cols;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) cols.emplace_back(i, j);
    return cols;
}

struct IncidenceH {
    int n = 0;
    std::vector<Pair> columns;
    Matrix<int> entries;  // rows in rank order; entry 1 iff π(i) = j

    std::size_t column_of(int i, int j) const { return static_cast<std::size_t>((i - 1) * (n - 1) + (j - 1)); }
};

inline IncidenceH build_H(const SymmetricGroup& group) {
    const int n = group.degree();
    require_incidence_degree(n);
    IncidenceH h{n, incidence_columns(n), Matrix<int>(group.order(), static_cast<std::size_t>((n - 1) * (n - 1)))};
    for (std::size_t r = 0; r < group.order(); ++r) {
        const auto& p = group.element(r);
        for (int i = 1; i <= n - 1; ++i)
            if (p(i) <= n - 1) h.entries(r, h.column_of(i, p(i))) = 1;
    }
    return h;
}

inline IncidenceH build_H(int n) {
    require_incidence_degree(n);
    return build_H(*SymmetricGroup::make(n));
}

struct GramCheck {
    int n = 0;
    Matrix<long long> gram;      // HᵀH
    Matrix<long long> expected;  // (n-1)! I + (n-2)! (K ⊗ K)
    bool pass = false;
};

inline GramCheck gram_check(const IncidenceH& h) {
    const int n = h.n;
    const std::size_t c = h.columns.size();
    GramCheck g{n, Matrix<long long>(c, c), {}, false};
    for (std::size_t r = 0; r < h.entries.rows(); ++r)
        for (std::size_t a = 0; a < c; ++a) {
            if (!h.entries(r, a)) continue;
            for (std::size_t b = 0; b < c; ++b) g.gram(a, b) += h.entries(r, b);
        }
    const auto k = complete_graph_matrix<long long>(static_cast<std::size_t>(n - 1));
    const auto kk = kronecker(k, k);
    const auto f1 = static_cast<long long>(factorial_u64(n - 1)), f2 = static_cast<long long>(factorial_u64(n - 2));
    g.expected = Matrix<long long>(c, c);
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = 0; b < c; ++b) g.expected(a, b) = (a == b ? f1 : 0) + f2 * kk(a, b);
    g.pass = g.gram == g.expected;
    return g;
}

inline GramCheck gram_check(int n) { return gram_check(build_H(n)); }

struct BlockDecomposition {
    int n = 0;
    std::vector<std::size_t> derangement_rows;  // ranks, ascending
    std::vector<Pair> m_columns;                // (i, j), i ≠ j, lexicographic
    std::vector<Pair> w_columns;                // (i, i)
    Matrix<int> N, M, W;
    bool block_form = false;     // [1 0; 0 M; H1 H2] after reordering
    bool m_rows_weight = false;  // every row of M has exactly n-2 ones
};

inline BlockDecomposition blocks(const SymmetricGroup& group, const IncidenceH& h) {
    const int n = h.n;
    BlockDecomposition b;
    b.n = n;
    for (std::size_t r = 0; r < group.order(); ++r)
        if (fixed_points(group.element(r)) == 0) b.derangement_rows.push_back(r);
    std::vector<std::size_t> m_idx, w_idx;
    for (std::size_t c = 0; c < h.columns.size(); ++c) {
        const auto [i, j] = h.columns[c];
        if (i == j) {
            b.w_columns.push_back(h.columns[c]);
            w_idx.push_back(c);
        } else {
            b.m_columns.push_back(h.columns[c]);
            m_idx.push_back(c);
        }
    }
    b.N = select_rows(h.entries, b.derangement_rows);
    b.M = select_columns(b.N, m_idx);
    b.W = select_columns(h.entries, w_idx);

    // Reordered: identity row, then derangements; W columns first.
    std::vector<std::size_t> col_order = w_idx;
    col_order.insert(col_order.end(), m_idx.begin(), m_idx.end());
    const auto id_row = select_columns(select_rows(h.entries, {group.rank_of(Permutation::identity(n))}), col_order);
    bool ok = true;
    for (std::size_t c = 0; c < col_order.size(); ++c) ok = ok && id_row(0, c) == (c < w_idx.size() ? 1 : 0);
    const auto dr = select_columns(b.N, col_order);
    for (std::size_t r = 0; r < dr.rows(); ++r)
        for (std::size_t c = 0; c < dr.cols(); ++c)
            ok = ok && dr(r, c) == (c < w_idx.size() ? 0 : b.M(r, c - w_idx.size()));
    b.block_form = ok;

    b.m_rows_weight = true;
    for (std::size_t r = 0; r < b.M.rows(); ++r) {
        int ones = 0;
        for (std::size_t c = 0; c < b.M.cols(); ++c) ones += b.M(r, c);
        b.m_rows_weight = b.m_rows_weight && ones == n - 2;
    }
    return b;
}

inline BlockDecomposition blocks(int n) {
    require_incidence_degree(n);
    const auto group = SymmetricGroup::make(n);
    return blocks(*group, build_H(*group));
}

/// π_{a,b}(a) = n; π_{a,b}(i) = i+b if i+b < n, else i+b+1 - n, for i ≠ a,
/// i <= n-1; π_{a,b}(n) is the remaining value.
inline Permutation pi_ab(int a, int b, int n) {
    if (n < 3) throw DegreeError("pi_ab: requires n >= 3");
    if (a < 1 || a > n - 1 || b < 1 || b > n - 2)
        throw DegreeError("pi_ab: need 1 <= a <= n-1 and 1 <= b <= n-2");
    std::vector<int> im(n, 0);
    std::vector<bool> used(n + 1, false);
    for (int i = 1; i <= n - 1; ++i) {
        im[i - 1] = (i == a) ? n : (i + b < n ? i + b : (i + b + 1) % n);
        used[im[i - 1]] = true;
    }
    for (int v = 1; v <= n; ++v)
        if (!used[v]) im[n - 1] = v;
    return Permutation(std::move(im));
}

/// Columns of M in the order (i, i+j mod (n-1)), j = 1..n-2.
inline std::vector<Pair> rotated_m_columns(int n) {
    std::vector<Pair> cols;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 2; ++j) cols.emplace_back(i, (i + j - 1) % (n - 1) + 1);
    return cols;
}

struct PiSubmatrix {
    std::vector<Permutation> rows;  // π_{a,b} ordered by a then b
    std::vector<Pair> columns;
    Matrix<int> entries;
    bool equals_kron = false;  // entries == K_{n-1} ⊗ I_{n-2}
};

inline PiSubmatrix pi_submatrix(int n) {
    require_incidence_degree(n);
    PiSubmatrix s;
    s.columns = rotated_m_columns(n);
    for (int a = 1; a <= n - 1; ++a)
        for (int b = 1; b <= n - 2; ++b) s.rows.push_back(pi_ab(a, b, n));
    s.entries = Matrix<int>(s.rows.size(), s.columns.size());
    for (std::size_t r = 0; r < s.rows.size(); ++r)
        for (std::size_t c = 0; c < s.columns.size(); ++c)
            s.entries(r, c) = s.rows[r](s.columns[c].first) == s.columns[c].second ? 1 : 0;
    const auto expected = kronecker(complete_graph_matrix<int>(static_cast<std::size_t>(n - 1)),
                                    identity_matrix<int>(static_cast<std::size_t>(n - 2)));
    s.equals_kron = s.entries == expected;
    return s;
}

struct KernelWithOnes {
    std::vector<RationalVector> basis;  // kernel of [M|1]
    bool spanned_by_predicted = false;  // one vector, proportional to (1,…,1,-(n-2))
};

inline KernelWithOnes kernel_m_with_ones(const BlockDecomposition& b) {
    const auto m1 = append_column(b.M, std::vector<int>(b.M.rows(), 1));
    KernelWithOnes k{kernel_basis(m1), false};
    if (k.basis.size() == 1) {
        RationalVector predicted(m1.cols(), Rational(1));
        predicted.back() = -(b.n - 2);
        const auto& y = k.basis.front();
        const Rational scale = y.front() / predicted.front();
        bool prop = scale != 0;
        for (std::size_t i = 0; i < y.size(); ++i) prop = prop && y[i] == scale * predicted[i];
        k.spanned_by_predicted = prop;
    }
    return k;
}

struct KernelSpotCheck {
    std::size_t kernel_dimension = 0;  // dim ker N
    int trials = 0;
    int passed = 0;                    // H·y in the column space of W
};

/// Random vectors y in ker N (integer combinations of a kernel basis), each
/// tested for H·y ∈ colspace(W) by comparing rank W with rank [W | H·y].
inline KernelSpotCheck kernel_spot_checks(const IncidenceH& h, const BlockDecomposition& b, int trials,
                                          std::uint64_t seed) {
    KernelSpotCheck k;
    const auto basis = kernel_basis(b.N);
    k.kernel_dimension = basis.size();
    const auto w = b.W.cast<Rational>();
    const auto hq = h.entries.cast<Rational>();
    const std::size_t rank_w = rank(w);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < trials; ++trial) {
        RationalVector y(h.columns.size(), Rational(0));
        for (const auto& v : basis) {
            const Rational c = coef(rng);
            for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * v[i];
        }
        ++k.trials;
        const auto hy = multiply(hq, y);
        if (rank(append_column(w, hy)) == rank_w) ++k.passed;
    }
    return k;
}

// -- module membership --------------------------------------------------------

struct SupportEntry {
    IntegerPartition partition;
    bool zero = true;
    Rational norm_sq;
};

/// Projections of v_S - shift·𝟙 onto every λ-module; shift defaults to 1/n.
/// Only the trivial module sees 𝟙 (E_λ𝟙 = 0 otherwise), so the sparse v_S is
/// projected and the shift is subtracted from the [n] component alone.
inline std::vector<SupportEntry> module_support(const ConjugacyScheme& scheme, const std::vector<Permutation>& set,
                                                std::optional<Rational> shift = std::nullopt) {
    const Rational s = shift.value_or(Rational(1, scheme.degree()));
    const auto v = scheme.characteristic_vector(set);
    const IntegerPartition trivial({scheme.degree()});
    std::vector<SupportEntry> out;
    for (auto& p : scheme.project_all(v)) {
        if (p.partition == trivial) {
            Rational norm = 0;
            for (auto& x : p.vector) {
                x -= s;
                norm += x * x;
            }
            out.push_back({p.partition, norm == 0, norm});
        } else {
            out.push_back({p.partition, p.zero, p.norm_sq});
        }
    }
    return out;
}

inline std::vector<IntegerPartition> support_partitions(const std::vector<SupportEntry>& s) {
    std::vector<IntegerPartition> out;
    for (const auto& e : s)
        if (!e.zero) out.push_back(e.partition);
    return out;
}

inline IntegerPartition standard_partition(int n) { return IntegerPartition({n - 1, 1}); }

struct BasisCheck {
    int n = 0;
    std::size_t rank_shifted = 0;    // rank of {v_ij - (1/n)𝟙 : i, j <= n-1}
    std::size_t expected_rank = 0;   // (n-1)² = χ_[n-1,1](1)²
    bool supports_standard = false;  // every shifted v_ij lies in the [n-1,1]-module
    std::size_t rank_h = 0;
    std::size_t rank_h_with_ones = 0;  // (n-1)² + 1 iff 𝟙 ∉ span{v_ij}
    bool pass = false;
};

inline BasisCheck basis_check(const ConjugacyScheme& scheme, const IncidenceH& h) {
    const int n = scheme.degree();
    BasisCheck r;
    r.n = n;
    r.expected_rank = static_cast<std::size_t>((n - 1) * (n - 1));
    const auto dim = dimension(standard_partition(n));
    if (dim * dim != BigInt(r.expected_rank)) throw InvariantViolation("basis_check: [n-1,1] dimension mismatch");
    // Scaled by n: n·v_ij - 𝟙 has the same rank and integer entries.
    IntMatrix shifted(scheme.order(), h.columns.size());
    for (std::size_t rr = 0; rr < scheme.order(); ++rr)
        for (std::size_t c = 0; c < h.columns.size(); ++c) shifted(rr, c) = n * h.entries(rr, c) - 1;
    r.rank_shifted = bareiss_rank(shifted);
    r.supports_standard = true;
    for (const auto& [i, j] : h.columns) {
        const auto sup = support_partitions(module_support(scheme, point_stabiliser_coset(n, i, j).members));
        r.supports_standard = r.supports_standard && sup == std::vector<IntegerPartition>{standard_partition(n)};
    }
    r.rank_h = rank(h.entries);
    r.rank_h_with_ones = rank(append_column(h.entries, std::vector<int>(h.entries.rows(), 1)));
    r.pass = r.rank_shifted == r.expected_rank && r.supports_standard && r.rank_h == r.expected_rank &&
             r.rank_h_with_ones == r.expected_rank + 1;
    return r;
}

inline BasisCheck basis_check(int n) {
    const ConjugacyScheme scheme(n);
    return basis_check(scheme, build_H(scheme.group()));
}

// -- classification of maximum intersecting families ------------------------

struct ClassifiedSet {
    std::vector<Permutation> members;
    std::optional<Pair> canonical;  // (i, j) with members == S_{i,j}
    // Coordinates of the translate T = m⁻¹S (m = first member), which contains the identity.
    int coordinate_case = 0;        // 1: v_T ∈ colspace(H); 2: only with 𝟙; 0: neither
    std::optional<int> case1_point; // T = S_{i,i}, i <= n-1
    RationalVector coefficients;    // case 2: y with v_T = [H|1] y
    std::optional<Rational> c;      // case 2: the 𝟙 coefficient
    bool case2_predicted = false;   // y = (1,…,1,-(n-2)) and T = S_{n,n}
};

struct Classification {
    int n = 0;
    std::size_t alpha = 0;
    std::size_t count = 0;
    bool all_canonical = false;
    bool translation_invariant = false;  // left translates of each set are again canonical
    bool coordinates_consistent = false; // every translate falls into case 1 or the predicted case 2
    std::vector<ClassifiedSet> sets;
};

inline std::optional<Pair> match_point_stabiliser_coset(const std::vector<Permutation>& set) {
    if (set.empty()) return std::nullopt;
    const int n = set.front().degree();
    std::vector<Permutation> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 1; i <= n; ++i) {
        const int j = sorted.front()(i);
        if (point_stabiliser_coset(n, i, j).members == sorted) return Pair{i, j};
    }
    return std::nullopt;
}

inline std::vector<Permutation> left_translate(const Permutation& g, const std::vector<Permutation>& set) {
    std::vector<Permutation> out;
    for (const auto& p : set) out.push_back(compose(g, p));
    std::sort(out.begin(), out.end());
    return out;
}

inline Classification classify_maximum_sets(int n, unsigned workers = 1) {
    if (n < 3 || n > 6) throw DegreeError("classify_maximum_sets: supported for 3 <= n <= 6");
    const auto search = max_independent_sets(n, 0, workers);
    const auto group = SymmetricGroup::make(n);
    const auto h = build_H(*group);
    const auto hq = h.entries.cast<Rational>();
    const auto h1 = append_column(hq, RationalVector(hq.rows(), Rational(1)));

    Classification out;
    out.n = n;
    out.alpha = search.alpha;
    out.count = search.sets.size();
    out.all_canonical = true;
    out.translation_invariant = true;
    out.coordinates_consistent = true;
    const Permutation shift = latin_clique(n).members[1];
    for (const auto& set : search.sets) {
        ClassifiedSet cs;
        cs.members = set;
        cs.canonical = match_point_stabiliser_coset(set);
        out.all_canonical = out.all_canonical && cs.canonical.has_value();
        out.translation_invariant = out.translation_invariant && match_point_stabiliser_coset(left_translate(shift, set));

        const auto t = left_translate(inverse(set.front()), set);
        RationalVector v(group->order(), Rational(0));
        for (const auto& p : t) v[group->rank_of(p)] = 1;
        if (auto y = solve(hq, v)) {
            cs.coordinate_case = 1;
            // v_T = W x with x a unit vector: T = S_{i,i}.
            for (int i = 1; i <= n - 1; ++i) {
                const auto& col = h.columns;
                bool unit = true;
                for (std::size_t c = 0; c < col.size(); ++c) {
                    const Rational want = (col[c].first == i && col[c].second == i) ? 1 : 0;
                    unit = unit && (*y)[c] == want;
                }
                if (unit) cs.case1_point = i;
            }
            out.coordinates_consistent = out.coordinates_consistent && cs.case1_point &&
                                         t == point_stabiliser_coset(n, *cs.case1_point, *cs.case1_point).members;
        } else if (auto y1 = solve(h1, v)) {
            cs.coordinate_case = 2;
            cs.coefficients = *y1;
            cs.c = y1->back();
            RationalVector predicted(h1.cols(), Rational(1));
            predicted.back() = -(n - 2);
            cs.case2_predicted = *y1 == predicted && t == point_stabiliser_coset(n, n, n).members;
            out.coordinates_consistent = out.coordinates_consistent && cs.case2_predicted;
        } else {
            out.coordinates_consistent = false;
        }
        out.sets.push_back(std::move(cs));
    }
    return out;
}

// -- depth-bounded module sums for P_t(n) ------------------------------------

/// All constraint sets A of size k (distinct x's, distinct y's), x's increasing.
inline std::vector<std::vector<Pair>> constraint_sets(int n, int k) {
    std::vector<std::vector<Pair>> out;
    std::vector<Pair> cur;
    std::vector<bool> used_y(n + 1, false);
    auto rec = [&](auto&& self, int next_x) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = next_x; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                if (used_y[y]) continue;
                used_y[y] = true;
                cur.emplace_back(x, y);
                self(self, x + 1);
                cur.pop_back();
                used_y[y] = false;
            }
    };
    rec(rec, 1);
    return out;
}

struct DepthDims {
    int n = 0;
    int t = 0;
    int depth = 0;
    std::size_t families = 0;          // number of S_A with |A| = t+1
    BigInt module_dim_sum;             // Σ_{depth(λ) <= depth} χ_λ(1)²
    std::size_t span_rank_shifted = 0; // rank {v_{S_A} - (|S_A|/n!)𝟙}
    std::size_t span_rank_with_ones = 0;
    bool supports_within_depth = false;
    std::vector<IntegerPartition> observed_support;  // union over all A
    bool agrees_shifted() const { return BigInt(span_rank_shifted) == module_dim_sum; }
    bool agrees_with_ones() const { return BigInt(span_rank_with_ones) == module_dim_sum; }
};

inline DepthDims depth_conjecture_dims(const ConjugacyScheme& scheme, int t, int depth) {
    const int n = scheme.degree();
    if (t < 1 || t > 2) throw DegreeError("depth_conjecture_dims: t must be 1 or 2");
    if (n < t + 2 || n > 6) throw DegreeError("depth_conjecture_dims: requires t+2 <= n <= 6");
    DepthDims d;
    d.n = n;
    d.t = t;
    d.depth = depth;
    for (std::size_t i = 0; i < scheme.characters().partitions.size(); ++i)
        if (scheme.characters().partitions[i].depth() <= depth) {
            const auto& dim = scheme.characters().dimension(i);
            d.module_dim_sum += dim * dim;
        }

    const auto sets = constraint_sets(n, t + 1);
    d.families = sets.size();
    const std::size_t v = scheme.order();
    const auto family_size = static_cast<long long>(factorial_u64(static_cast<unsigned>(n - t - 1)));
    const long long ratio = static_cast<long long>(v) / family_size;
    // Shifted rows scaled by n!/|S_A| to stay integral: ratio·v_A - 𝟙.
    IntMatrix shifted(sets.size(), v), with_ones(sets.size() + 1, v);
    std::map<IntegerPartition, bool> seen;
    d.supports_within_depth = true;
    for (std::size_t k = 0; k < sets.size(); ++k) {
        const auto f = family(n, sets[k]);
        std::vector<bool> in(v, false);
        for (const auto& p : f.members) in[scheme.group().rank_of(p)] = true;
        for (std::size_t c = 0; c < v; ++c) {
            shifted(k, c) = in[c] ? ratio - 1 : -1;
            with_ones(k, c) = in[c] ? 1 : 0;
        }
        for (const auto& e : module_support(scheme, f.members, Rational(family_size, static_cast<long long>(v))))
            if (!e.zero) {
                seen[e.partition] = true;
                d.supports_within_depth = d.supports_within_depth && e.partition.depth() <= depth;
            }
    }
    for (std::size_t c = 0; c < v; ++c) with_ones(sets.size(), c) = 1;
    d.span_rank_shifted = bareiss_rank(shifted);
    d.span_rank_with_ones = bareiss_rank(with_ones);
    for (const auto& p : scheme.characters().partitions)
        if (seen.count(p)) d.observed_support.push_back(p);
    return d;
}

inline DepthDims depth_conjecture_dims(int n, int t, int depth) {
    return depth_conjecture_dims(ConjugacyScheme(n), t, depth);
}

}  // namespace ekr
