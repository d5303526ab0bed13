#pragma once

// The permutation graphs P_t(n) (vertices S(n), edges between permutations
// agreeing on at most t points), the canonical families S_A, and the
// equitable quotient of P(n) over the stabiliser of a point.

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ekr/exact.hpp"
#include "ekr/linalg.hpp"
#include "ekr/permgroup.hpp"
#include "ekr/scheme.hpp"
#include "ekr/symmetric_group.hpp"

namespace ekr {

class PermutationGraph {
public:
    static constexpr int kExplicitDegree = 6;

    /// Requires 0 <= t < n-1; beyond that P_t(n) is complete.
    PermutationGraph(std::shared_ptr<const SymmetricGroup> group, int t) : group_(std::move(group)), t_(t) {
        const int n = group_->degree();
        if (t < 0 || t >= std::max(1, n - 1))
            throw DegreeError("build_graph: threshold must satisfy 0 <= t < n-1 (n=" + std::to_string(n) +
                              ", t=" + std::to_string(t) + ")");
        connection_ = union_class_indices(group_->classes(), t);
        for (auto c : connection_) degree_ += group_->classes()[c].size;
        if (n <= kExplicitDegree) {
            const std::size_t v = group_->order();
            words_ = (v + 63) / 64;
            bits_.assign(v * words_, 0);
            for (std::size_t a = 0; a < v; ++a)
                for (std::size_t b = 0; b < v; ++b)
                    if (a != b && group_->agreements(a, b) <= t_) bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
        }
    }

    int n() const { return group_->degree(); }
    int t() const { return t_; }
    const SymmetricGroup& group() const { return *group_; }
    std::shared_ptr<const SymmetricGroup> group_ptr() const { return group_; }
    std::size_t vertex_count() const { return group_->order(); }
    bool is_explicit() const { return !bits_.empty(); }

    /// Σ |C| over classes with at most t fixed points, identity excluded.
    const BigInt& regular_degree() const { return degree_; }

    bool adjacent(std::size_t a, std::size_t b) const {
        if (is_explicit()) return (bits_[a * words_ + b / 64] >> (b % 64)) & 1u;
        return a != b && group_->agreements(a, b) <= t_;
    }

    std::vector<std::size_t> neighbors(std::size_t a) const {
        std::vector<std::size_t> out;
        for (std::size_t b = 0; b < vertex_count(); ++b)
            if (adjacent(a, b)) out.push_back(b);
        return out;
    }

private:
    std::shared_ptr<const SymmetricGroup> group_;
    int t_;
    std::vector<std::size_t> connection_;
    BigInt degree_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline PermutationGraph build_graph(int n, int t) { return PermutationGraph(SymmetricGroup::make(n), t); }

// -- canonical families -----------------------------------------------------

/// S_A = {π : π(x) = y for every (x, y) in A}.
struct Family {
    int n = 0;
    std::vector<std::pair<int, int>> constraints;
    std::vector<Permutation> members;  // lexicographic order
};

inline Family family(int n, std::vector<std::pair<int, int>> constraints) {
    if (n < 1) throw DegreeError("family: n must be positive");
    if (static_cast<int>(constraints.size()) >= n && n > 1)
        throw InputError("family: need fewer than n constraints");
    std::vector<bool> xs(n + 1, false), ys(n + 1, false);
    for (auto [x, y] : constraints) {
        if (x < 1 || x > n || y < 1 || y > n) throw InputError("family: constraint point out of range");
        if (xs[x] || ys[y]) throw InputError("family: conflicting constraints (repeated x or y)");
        xs[x] = ys[y] = true;
    }
    Family f{n, std::move(constraints), {}};
    std::vector<int> im(n);
    for (auto [x, y] : f.constraints) im[x - 1] = y;
    std::vector<int> free_pts, free_vals;
    for (int i = 1; i <= n; ++i) {
        if (!xs[i]) free_pts.push_back(i);
        if (!ys[i]) free_vals.push_back(i);
    }
    do {
        for (std::size_t k = 0; k < free_pts.size(); ++k) im[free_pts[k] - 1] = free_vals[k];
        f.members.emplace_back(im);
    } while (std::next_permutation(free_vals.begin(), free_vals.end()));
    std::sort(f.members.begin(), f.members.end());
    return f;
}

inline Family point_stabiliser_coset(int n, int i, int j) { return family(n, {{i, j}}); }

struct FamilyValidation {
    bool valid = true;
    std::optional<std::pair<Permutation, Permutation>> witness;  // an adjacent pair
};

/// True iff every pair agrees on at least t+1 points (independent in P_t(n)).
inline FamilyValidation validate_family(const std::vector<Permutation>& set, int t) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (agreements(set[i], set[j]) <= t) return {false, std::make_pair(set[i], set[j])};
    return {};
}

// -- equitable partition {S_{n,n}, rest} ----------------------------------

inline std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const BigInt num = mp::numerator(q), den = mp::denominator(q);
    const BigInt rn = mp::sqrt(num), rd = mp::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

struct EquitableQuotient {
    int n = 0;
    RationalMatrix matrix;          // by direct edge counting
    RationalMatrix closed_form;     // [[0, d], [d/(n-1), d - d/(n-1)]]
    bool equitable = false;         // every vertex in a cell sees the same counts
    std::vector<Rational> eigenvalues;  // descending
};

inline EquitableQuotient equitable_quotient(int n) {
    if (n < 2 || n > 7) throw DegreeError("equitable_quotient: supported for 2 <= n <= 7");
    const auto group = SymmetricGroup::make(n);
    const std::size_t v = group->order();
    std::vector<int> cell(v);
    for (std::size_t r = 0; r < v; ++r) cell[r] = group->element(r)(n) == n ? 0 : 1;

    EquitableQuotient q;
    q.n = n;
    q.matrix = RationalMatrix(2, 2);
    q.equitable = true;
    std::optional<std::array<long long, 2>> seen[2];
    for (std::size_t a = 0; a < v; ++a) {
        std::array<long long, 2> counts{0, 0};
        for (std::size_t b = 0; b < v; ++b)
            if (a != b && group->agreements(a, b) == 0) ++counts[cell[b]];
        auto& s = seen[cell[a]];
        if (!s) s = counts;
        else if (*s != counts) q.equitable = false;
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) q.matrix(i, j) = Rational((*seen[i])[j]);

    const Rational d(derangement_count(n));
    q.closed_form = RationalMatrix(2, 2);
    q.closed_form(0, 1) = d;
    q.closed_form(1, 0) = d / (n - 1);
    q.closed_form(1, 1) = d - d / (n - 1);

    const Rational tr = q.matrix(0, 0) + q.matrix(1, 1);
    const Rational det = q.matrix(0, 0) * q.matrix(1, 1) - q.matrix(0, 1) * q.matrix(1, 0);
    const auto root = exact_sqrt(tr * tr - 4 * det);
    if (!root) throw InvariantViolation("equitable_quotient: irrational quotient eigenvalues");
    q.eigenvalues = {(tr + *root) / 2, (tr - *root) / 2};
    return q;
}

}  // namespace ekr
