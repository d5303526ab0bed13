#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <random>

#include "ekr/cliques.hpp"
#include "ekr/graphs.hpp"
#include "ekr/scheme.hpp"
#include "oracles.hpp"

using namespace ekr;

namespace {

IntegerPartition L(std::vector<int> v) { return IntegerPartition(std::move(v)); }

RationalVector random_integer_vector(std::size_t size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    RationalVector v(size);
    for (auto& x : v) x = d(rng);
    return v;
}

RationalVector ones(std::size_t size) { return RationalVector(size, Rational(1)); }

/// Eigenvalue multiset of P_t(n) from floating-point diagonalisation of the
/// explicit adjacency matrix, rounded to integers.
std::map<long long, long long> numeric_spectrum(int n, int t) {
    const auto perms = oracle::all_perms(n);
    const auto v = static_cast<Eigen::Index>(perms.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(v, v);
    for (Eigen::Index i = 0; i < v; ++i)
        for (Eigen::Index j = 0; j < v; ++j)
            if (i != j && oracle::agree(perms[i], perms[j]) <= t) a(i, j) = 1;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    std::map<long long, long long> out;
    for (Eigen::Index i = 0; i < v; ++i) ++out[std::llround(es.eigenvalues()(i))];
    return out;
}

std::map<long long, long long> exact_spectrum(int n, int t) {
    const auto s = union_spectrum(n, t);
    std::map<long long, long long> out;
    for (std::size_t i = 0; i < s.partitions.size(); ++i)
        out[static_cast<long long>(s.eigenvalues[i])] += static_cast<long long>(s.multiplicities[i]);
    return out;
}

}  // namespace

TEST(ClassEigenvalue, Values) {
    const auto classes = classes_of(4);
    for (const auto& c : classes) {
        EXPECT_EQ(class_eigenvalue(L({4}), c), Rational(c.size));
        if (c.cycle_type.is_derangement_class()) {
            EXPECT_EQ(class_eigenvalue(L({3, 1}), c), -Rational(c.size) / 3);
        }
        if (c.cycle_type.partition().parts() == std::vector<int>{4}) {
            EXPECT_EQ(class_eigenvalue(L({2, 2}), c), 0);
        }
    }
}

TEST(Spectrum, DegreeFour) {
    const auto s = union_spectrum(4, 0);
    EXPECT_EQ(s.eigenvalues, (std::vector<Rational>{9, -3, 3, 1, -3}));
    EXPECT_EQ(s.valency, 9);
    const auto least = least_eigenvalue(s);
    EXPECT_EQ(least.value, -3);
    EXPECT_EQ(least.achieved_by, (std::vector<IntegerPartition>{L({3, 1}), L({1, 1, 1, 1})}));
}

TEST(Spectrum, DegreeFive) {
    const auto s = union_spectrum(5, 0);
    EXPECT_EQ(s.eigenvalue(L({5})), 44);
    EXPECT_EQ(s.eigenvalue(L({4, 1})), -11);
    EXPECT_EQ(least_eigenvalue(5).value, -11);
}

TEST(Spectrum, MatchesNumericDiagonalisation) {
    EXPECT_EQ(exact_spectrum(4, 0), numeric_spectrum(4, 0));
    EXPECT_EQ(exact_spectrum(4, 1), numeric_spectrum(4, 1));
    EXPECT_EQ(exact_spectrum(5, 0), numeric_spectrum(5, 0));
    EXPECT_EQ(exact_spectrum(5, 1), numeric_spectrum(5, 1));
}

TEST(Spectrum, CompleteGraphConvention) {
    for (int n = 2; n <= 6; ++n) {
        const auto s = union_spectrum(n, n - 1);
        EXPECT_EQ(s.valency, factorial(n) - 1);
        EXPECT_EQ(s.eigenvalues.front(), Rational(factorial(n) - 1));
    }
    EXPECT_THROW(union_spectrum(4, 4), DegreeError);
    EXPECT_THROW(union_spectrum(4, -1), DegreeError);
}

TEST(Spectrum, LeastEigenvalueDegreeEight) {
    EXPECT_EQ(least_eigenvalue(8).value, -2119);
}

TEST(RatioBound, Values) {
    EXPECT_EQ(ratio_bound(4), 6);
    EXPECT_EQ(ratio_bound(5), 24);
    EXPECT_EQ(ratio_bound(7), 720);
}

TEST(Projection, TrivialModuleIsConstant) {
    const ConjugacyScheme s(4);
    const auto x = s.characteristic_vector(point_stabiliser_coset(4, 2, 3).members);
    const auto p = s.project(L({4}), x);
    for (const auto& v : p.vector) EXPECT_EQ(v, Rational(6, 24));
}

TEST(Projection, OnesOnlyInTrivialModule) {
    const ConjugacyScheme s(5);
    for (const auto& p : s.project_all(ones(s.order()))) EXPECT_EQ(p.zero, !(p.partition == L({5}))) << p.partition.str();
}

TEST(Projection, ShiftedStabiliserInStandardModule) {
    const ConjugacyScheme s(4);
    auto x = s.characteristic_vector(point_stabiliser_coset(4, 1, 1).members);
    for (auto& v : x) v -= Rational(1, 4);
    for (const auto& p : s.project_all(x)) EXPECT_EQ(p.zero, !(p.partition == L({3, 1}))) << p.partition.str();
}

TEST(Projection, Completeness) {
    const ConjugacyScheme s(5);
    const auto z = random_integer_vector(s.order(), 11);
    RationalVector sum(s.order(), Rational(0));
    for (const auto& p : s.project_all(z))
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += p.vector[i];
    EXPECT_EQ(sum, z);
}

TEST(Projection, RejectsWrongLength) {
    const ConjugacyScheme s(3);
    EXPECT_THROW(s.project(L({3}), RationalVector(5)), InputError);
}

TEST(Idempotents, DenseAtDegreeFour) {
    const ConjugacyScheme s(4);
    std::vector<RationalMatrix> e;
    for (const auto& p : partitions_of(4)) e.push_back(s.idempotent_matrix(p));
    RationalMatrix total(24, 24);
    for (std::size_t a = 0; a < e.size(); ++a) {
        for (std::size_t b = 0; b < e.size(); ++b) {
            const auto prod = multiply(e[a], e[b]);
            if (a == b) EXPECT_EQ(prod, e[a]);
            else EXPECT_EQ(prod, RationalMatrix(24, 24));
        }
        for (std::size_t i = 0; i < 24; ++i)
            for (std::size_t j = 0; j < 24; ++j) total(i, j) += e[a](i, j);
    }
    EXPECT_EQ(total, identity_matrix<Rational>(24));
    EXPECT_THROW(ConjugacyScheme(6).idempotent_matrix(L({6})), DegreeError);
}

TEST(FundamentalIdentity, OnesVector) {
    const ConjugacyScheme s(4);
    const auto [lhs, rhs] = s.fundamental_identity(ones(24), ones(24));
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(lhs, 576);  // v² with v = 24
}

TEST(FundamentalIdentity, LatinCliqueAgainstStabiliser) {
    const ConjugacyScheme s(4);
    const auto x = s.characteristic_vector(latin_clique(4).members);
    const auto y = s.characteristic_vector(point_stabiliser_coset(4, 1, 1).members);
    const auto [lhs, rhs] = s.fundamental_identity(x, y);
    EXPECT_EQ(lhs, 1);
    EXPECT_EQ(rhs, 1);
}

TEST(FundamentalIdentity, RandomIntegerVectors) {
    const ConjugacyScheme s(5);
    for (std::uint64_t k = 0; k < 5; ++k) {
        const auto [lhs, rhs] = s.fundamental_identity(random_integer_vector(120, 2 * k), random_integer_vector(120, 2 * k + 1));
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(CliqueCoclique, LatinAndStabiliser) {
    const ConjugacyScheme s(4);
    const auto r = s.clique_coclique_check(latin_clique(4).members, point_stabiliser_coset(4, 1, 1).members, 0);
    EXPECT_EQ(r.product, 24);
    EXPECT_TRUE(r.tight);
    EXPECT_TRUE(r.supports_disjoint);
}

TEST(CliqueCoclique, Singletons) {
    const ConjugacyScheme s(4);
    const std::vector<Permutation> id{Permutation::identity(4)};
    const auto r = s.clique_coclique_check(id, id, 0);
    EXPECT_EQ(r.product, 1);
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.tight);
}

TEST(CliqueCoclique, AffineInPOne) {
    const ConjugacyScheme s(5);
    const auto r = s.clique_coclique_check(affine_clique(5).members, family(5, {{1, 1}, {2, 2}}).members, 1);
    EXPECT_EQ(r.clique_size, 20u);
    EXPECT_EQ(r.independent_size, 6u);
    EXPECT_EQ(r.product, 120);
    EXPECT_TRUE(r.tight);
    EXPECT_TRUE(r.supports_disjoint);
}

TEST(CliqueCoclique, ValidationNamesTheWitness) {
    const ConjugacyScheme s(4);
    const std::vector<Permutation> bad{Permutation::identity(4), Permutation({1, 2, 4, 3})};
    try {
        s.clique_coclique_check(bad, {Permutation::identity(4)}, 0);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.first, Permutation::identity(4));
        EXPECT_EQ(e.second, Permutation({1, 2, 4, 3}));
    }
    const std::vector<Permutation> edge{Permutation::identity(4), Permutation({2, 1, 4, 3})};
    EXPECT_THROW(s.clique_coclique_check({Permutation::identity(4)}, edge, 0), ValidationError);
}
