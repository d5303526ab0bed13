#pragma once

// The conjugacy-class association scheme on S(n). Eigenvalues of unions of
// class graphs come from the character table alone; projections onto the
// λ-modules and the class adjacency operators act on vectors over S(n) by
// convolution, grouping each pair (π, σ) by the class of π⁻¹σ.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ekr/chartab.hpp"
#include "ekr/exact.hpp"
#include "ekr/linalg.hpp"
#include "ekr/permgroup.hpp"
#include "ekr/symmetric_group.hpp"

namespace ekr {

/// p_C^λ = |C| χ_λ(c) / χ_λ(1). Always an integer; anything else means the
/// character values are wrong.
inline Rational class_eigenvalue(const IntegerPartition& lambda, const ClassInfo& c) {
    if (lambda.n() != c.cycle_type.n()) throw InputError("class_eigenvalue: degree mismatch");
    const Rational p(c.size * character_value(lambda, c.cycle_type), dimension(lambda));
    if (!is_integer(p))
        throw InvariantViolation("class_eigenvalue: non-integer eigenvalue " + to_string(p) + " for " + lambda.str() +
                                 " on class " + c.cycle_type.str());
    return p;
}

/// Classes whose elements have at most t fixed points, identity excluded:
/// the connection set of P_t(n).
inline std::vector<std::size_t> union_class_indices(const std::vector<ClassInfo>& classes, int t) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (!classes[c].cycle_type.is_identity_class() && classes[c].cycle_type.fixed_points() <= t) out.push_back(c);
    return out;
}

inline void require_threshold(int n, int t) {
    if (t < 0 || t >= n)
        throw DegreeError("agreement threshold t must satisfy 0 <= t < n (n=" + std::to_string(n) +
                          ", t=" + std::to_string(t) + ")");
}

struct SchemeSpectrum {
    int n = 0;
    int t = 0;
    std::vector<IntegerPartition> partitions;
    std::vector<Rational> eigenvalues;
    std::vector<BigInt> multiplicities;  // χ_λ(1)²
    BigInt valency;

    const Rational& eigenvalue(const IntegerPartition& lambda) const {
        for (std::size_t i = 0; i < partitions.size(); ++i)
            if (partitions[i] == lambda) return eigenvalues[i];
        throw InputError("SchemeSpectrum: no partition " + lambda.str());
    }
};

inline SchemeSpectrum union_spectrum(int n, int t) {
    require_character_degree(n);
    require_threshold(n, t);
    const auto table = character_table(n);
    const auto classes = classes_of(n);
    const auto members = union_class_indices(classes, t);

    SchemeSpectrum s;
    s.n = n;
    s.t = t;
    s.partitions = table.partitions;
    for (auto c : members) s.valency += classes[c].size;
    for (std::size_t i = 0; i < table.partitions.size(); ++i) {
        const BigInt& dim = table.dimension(i);
        BigInt numer = 0;
        for (auto c : members) numer += classes[c].size * table.at(i, c);
        Rational ev(numer, dim);
        if (!is_integer(ev))
            throw InvariantViolation("union_spectrum: non-integer eigenvalue for " + table.partitions[i].str());
        s.eigenvalues.push_back(std::move(ev));
        s.multiplicities.push_back(dim * dim);
    }
    if (s.eigenvalues.front() != Rational(s.valency))
        throw InvariantViolation("union_spectrum: eigenvalue on [n] differs from the valency");
    return s;
}

struct LeastEigenvalue {
    Rational value;
    std::vector<IntegerPartition> achieved_by;
};

inline LeastEigenvalue least_eigenvalue(const SchemeSpectrum& s) {
    LeastEigenvalue out{*std::min_element(s.eigenvalues.begin(), s.eigenvalues.end()), {}};
    for (std::size_t i = 0; i < s.partitions.size(); ++i)
        if (s.eigenvalues[i] == out.value) out.achieved_by.push_back(s.partitions[i]);
    return out;
}

inline LeastEigenvalue least_eigenvalue(int n, int t = 0) { return least_eigenvalue(union_spectrum(n, t)); }

/// α ≤ n! / (1 - valency/τ), τ the least eigenvalue.
inline Rational ratio_bound(const SchemeSpectrum& s) {
    const Rational tau = least_eigenvalue(s).value;
    if (tau >= 0) throw DegreeError("ratio_bound: least eigenvalue is not negative");
    return Rational(factorial(static_cast<unsigned>(s.n))) / (1 - Rational(s.valency) / tau);
}

inline Rational ratio_bound(int n, int t = 0) { return ratio_bound(union_spectrum(n, t)); }

struct ProjectionResult {
    IntegerPartition partition;
    RationalVector vector;  // E_λ x
    Rational norm_sq;       // xᵀE_λx = |E_λ x|²
    bool zero = false;
};

struct CliqueCocliqueReport {
    int n = 0;
    int t = 0;
    std::size_t clique_size = 0;
    std::size_t independent_size = 0;
    BigInt product;
    BigInt bound;  // n!
    bool holds = false;
    bool tight = false;
    struct Support {
        IntegerPartition partition;
        bool clique_nonzero = false;
        bool independent_nonzero = false;
    };
    std::vector<Support> supports;  // every λ ≠ [n]
    bool supports_disjoint = false; // at most one of E_λx, E_λy nonzero for each λ ≠ [n]
};

/// A set that fails to be a clique or an independent set, with the witness.
class ValidationError : public InputError {
public:
    ValidationError(const std::string& what, Permutation a, Permutation b)
        : InputError(what + ": " + to_one_line(a) + " and " + to_one_line(b)), first(std::move(a)), second(std::move(b)) {}
    Permutation first, second;
};

class ConjugacyScheme {
public:
    static constexpr int kMaxDegree = 7;

    explicit ConjugacyScheme(std::shared_ptr<const SymmetricGroup> group)
        : group_(std::move(group)), table_(character_table(group_->degree())) {
        if (group_->degree() > kMaxDegree)
            throw DegreeError("ConjugacyScheme: convolution routines support n <= " + std::to_string(kMaxDegree));
        // Table columns and group classes share the reverse-lex order.
        for (std::size_t c = 0; c < table_.cycle_types.size(); ++c)
            if (!(table_.cycle_types[c] == group_->classes()[c].cycle_type))
                throw InvariantViolation("ConjugacyScheme: class order mismatch");
    }

    explicit ConjugacyScheme(int n) : ConjugacyScheme(SymmetricGroup::make(n)) {}

    int degree() const { return group_->degree(); }
    const SymmetricGroup& group() const { return *group_; }
    std::shared_ptr<const SymmetricGroup> group_ptr() const { return group_; }
    const CharacterTable& characters() const { return table_; }
    std::size_t order() const { return group_->order(); }

    RationalVector characteristic_vector(const std::vector<Permutation>& set) const {
        RationalVector v(order(), Rational(0));
        for (const auto& p : set) v[group_->rank_of(p)] = 1;
        return v;
    }

    /// s[π][C] = Σ_{σ : π⁻¹σ ∈ C} x_σ, for x = numer/denom with integer numer.
    struct ClassSums {
        std::vector<BigInt> sums;  // row-major order × classes
        BigInt denom = 1;
        std::size_t classes = 0;
        const BigInt& at(std::size_t pi, std::size_t c) const { return sums[pi * classes + c]; }
    };

    ClassSums class_sums(const RationalVector& x) const {
        require_length(x, "class_sums");
        ClassSums out;
        out.classes = group_->classes().size();
        for (const auto& v : x) out.denom = mp::lcm(out.denom, BigInt(mp::denominator(v)));
        out.sums.assign(order() * out.classes, BigInt(0));
        for (std::size_t s = 0; s < order(); ++s) {
            if (x[s] == 0) continue;
            const BigInt xs = mp::numerator(x[s]) * (out.denom / mp::denominator(x[s]));
            for (std::size_t p = 0; p < order(); ++p) out.sums[p * out.classes + group_->quotient_class(p, s)] += xs;
        }
        return out;
    }

    std::vector<ProjectionResult> project_all(const RationalVector& x) const {
        const auto s = class_sums(x);
        std::vector<ProjectionResult> out;
        for (std::size_t i = 0; i < table_.partitions.size(); ++i) out.push_back(project_row(i, s, x));
        return out;
    }

    /// (E_λ x)_π = (χ_λ(1)/n!) Σ_σ χ_λ(π⁻¹σ) x_σ, without forming E_λ.
    ProjectionResult project(const IntegerPartition& lambda, const RationalVector& x) const {
        return project_row(table_.row_of(lambda), class_sums(x), x);
    }

    /// Adjacency operator of the union of the given classes applied to y.
    RationalVector apply_classes(const std::vector<std::size_t>& classes, const RationalVector& y) const {
        const auto s = class_sums(y);
        RationalVector out(order());
        for (std::size_t p = 0; p < order(); ++p) {
            BigInt acc = 0;
            for (auto c : classes) acc += s.at(p, c);
            out[p] = Rational(acc, s.denom);
        }
        return out;
    }

    RationalVector apply_union(int t, const RationalVector& y) const {
        require_threshold(degree(), t);
        return apply_classes(union_class_indices(group_->classes(), t), y);
    }

    /// xᵀA_C x for every class C.
    std::vector<Rational> class_forms(const RationalVector& x) const {
        const auto s = class_sums(x);
        std::vector<Rational> out(s.classes, Rational(0));
        for (std::size_t c = 0; c < s.classes; ++c) {
            Rational acc = 0;
            for (std::size_t p = 0; p < order(); ++p)
                if (x[p] != 0 && s.at(p, c) != 0) acc += x[p] * Rational(s.at(p, c), s.denom);
            out[c] = acc;
        }
        return out;
    }

    /// Both sides of Σ_C (xᵀA_Cx)(yᵀA_Cy)/(v|C|) = Σ_λ (xᵀE_λx)(yᵀE_λy)/m_λ.
    /// The left side uses only class convolutions, the right side only the
    /// character-based projections.
    std::pair<Rational, Rational> fundamental_identity(const RationalVector& x, const RationalVector& y) const {
        const auto fx = class_forms(x), fy = class_forms(y);
        const Rational v(factorial(static_cast<unsigned>(degree())));
        Rational lhs = 0;
        for (std::size_t c = 0; c < fx.size(); ++c) lhs += fx[c] * fy[c] / (v * Rational(group_->classes()[c].size));
        const auto px = project_all(x), py = project_all(y);
        Rational rhs = 0;
        for (std::size_t i = 0; i < px.size(); ++i) {
            const BigInt& dim = table_.dimension(i);
            rhs += px[i].norm_sq * py[i].norm_sq / Rational(dim * dim);
        }
        return {lhs, rhs};
    }

    /// Dense E_λ for small n, used to test idempotency directly.
    RationalMatrix idempotent_matrix(const IntegerPartition& lambda) const {
        if (degree() > 5) throw DegreeError("idempotent_matrix: dense idempotents only for n <= 5");
        const auto row = table_.row_of(lambda);
        const Rational scale(table_.dimension(row), factorial(static_cast<unsigned>(degree())));
        RationalMatrix e(order(), order());
        for (std::size_t p = 0; p < order(); ++p)
            for (std::size_t s = 0; s < order(); ++s) e(p, s) = scale * Rational(table_.at(row, group_->quotient_class(p, s)));
        return e;
    }

    /// First pair with agreements(a, b) > t, i.e. a pair that is not adjacent in P_t(n).
    std::optional<std::pair<Permutation, Permutation>> clique_violation(const std::vector<Permutation>& set, int t) const {
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j)
                if (agreements(set[i], set[j]) > t) return std::make_pair(set[i], set[j]);
        return std::nullopt;
    }

    /// First pair with agreements(a, b) <= t, i.e. an edge of P_t(n).
    std::optional<std::pair<Permutation, Permutation>> independence_violation(const std::vector<Permutation>& set,
                                                                             int t) const {
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j)
                if (agreements(set[i], set[j]) <= t) return std::make_pair(set[i], set[j]);
        return std::nullopt;
    }

    CliqueCocliqueReport clique_coclique_check(const std::vector<Permutation>& clique,
                                               const std::vector<Permutation>& independent, int t) const {
        require_threshold(degree(), t);
        for (const auto* set : {&clique, &independent})
            for (const auto& p : *set)
                if (p.degree() != degree()) throw InputError("clique_coclique_check: permutation of wrong degree");
        if (auto bad = clique_violation(clique, t))
            throw ValidationError("clique_coclique_check: clique members not adjacent in P_" + std::to_string(t), bad->first,
                                  bad->second);
        if (auto bad = independence_violation(independent, t))
            throw ValidationError("clique_coclique_check: independent set contains an edge of P_" + std::to_string(t),
                                  bad->first, bad->second);

        CliqueCocliqueReport r;
        r.n = degree();
        r.t = t;
        r.clique_size = clique.size();
        r.independent_size = independent.size();
        r.product = BigInt(clique.size()) * BigInt(independent.size());
        r.bound = factorial(static_cast<unsigned>(degree()));
        r.holds = r.product <= r.bound;
        r.tight = r.product == r.bound;
        const auto px = project_all(characteristic_vector(clique));
        const auto py = project_all(characteristic_vector(independent));
        r.supports_disjoint = true;
        for (std::size_t i = 1; i < px.size(); ++i) {
            r.supports.push_back({px[i].partition, !px[i].zero, !py[i].zero});
            if (!px[i].zero && !py[i].zero) r.supports_disjoint = false;
        }
        return r;
    }

private:
    void require_length(const RationalVector& x, const char* what) const {
        if (x.size() != order())
            throw InputError(std::string(what) + ": vector length " + std::to_string(x.size()) + " differs from n! = " +
                             std::to_string(order()));
    }

    ProjectionResult project_row(std::size_t row, const ClassSums& s, const RationalVector& x) const {
        ProjectionResult r;
        r.partition = table_.partitions[row];
        const Rational scale = Rational(table_.dimension(row), factorial(static_cast<unsigned>(degree()))) / Rational(s.denom);
        r.vector.resize(order());
        bool any = false;
        for (std::size_t p = 0; p < order(); ++p) {
            BigInt acc = 0;
            for (std::size_t c = 0; c < s.classes; ++c) {
                const BigInt& ch = table_.at(row, c);
                if (ch != 0) acc += ch * s.at(p, c);
            }
            any = any || acc != 0;
            r.vector[p] = acc == 0 ? Rational(0) : scale * Rational(acc);
        }
        r.norm_sq = dot(r.vector, r.vector);
        // Cross-check: E_λ is a symmetric idempotent, so xᵀE_λx = |E_λx|².
        if (r.norm_sq != dot(x, r.vector)) throw InvariantViolation("project: xᵀE x differs from |E x|²");
        r.zero = !any;
        return r;
    }

    std::shared_ptr<const SymmetricGroup> group_;
    CharacterTable table_;
};

}  // namespace ekr
