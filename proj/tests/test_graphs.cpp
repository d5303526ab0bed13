#include <gtest/gtest.h>

#include <set>

#include "ekr/cliques.hpp"
#include "ekr/graphs.hpp"
#include "ekr/search.hpp"
#include "oracles.hpp"

using namespace ekr;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

}  // namespace

TEST(Graph, Degrees) {
    const auto g4 = build_graph(4, 0);
    EXPECT_EQ(g4.vertex_count(), 24u);
    EXPECT_EQ(g4.regular_degree(), 9);
    EXPECT_EQ(build_graph(3, 0).regular_degree(), 2);
    EXPECT_EQ(build_graph(5, 1).regular_degree(), 89);
    for (std::size_t a = 0; a < g4.vertex_count(); ++a) EXPECT_EQ(g4.neighbors(a).size(), 9u);
    EXPECT_THROW(build_graph(4, 3), DegreeError);
}

TEST(Graph, PredicateModeMatchesExplicit) {
    const auto g7 = build_graph(7, 0);
    EXPECT_FALSE(g7.is_explicit());
    EXPECT_EQ(g7.regular_degree(), 1854);
    EXPECT_EQ(g7.neighbors(0).size(), 1854u);
    EXPECT_TRUE(build_graph(6, 0).is_explicit());
}

TEST(LatinClique, Rows) {
    EXPECT_EQ(latin_clique(2).members, (std::vector<Permutation>{P({1, 2}), P({2, 1})}));
    for (int n = 1; n <= 8; ++n) {
        const auto c = latin_clique(n);
        EXPECT_EQ(static_cast<int>(c.members.size()), n);
        EXPECT_TRUE(c.validated);
        EXPECT_TRUE(is_clique(c.members, 0));
    }
}

TEST(LatinClique, CosetsPartitionTheVertices) {
    for (int n = 3; n <= 6; ++n) {
        const auto g = SymmetricGroup::make(n);
        const auto k = latin_clique(n).members;
        std::set<std::size_t> seen;
        std::size_t cosets = 0;
        for (std::size_t r = 0; r < g->order(); ++r) {
            if (seen.count(r)) continue;
            std::vector<Permutation> coset;
            for (const auto& x : k) coset.push_back(compose(x, g->element(r)));
            EXPECT_TRUE(is_clique(coset, 0));
            for (const auto& x : coset) EXPECT_TRUE(seen.insert(g->rank_of(x)).second);
            ++cosets;
        }
        EXPECT_EQ(seen.size(), g->order());
        EXPECT_EQ(cosets, g->order() / n);
    }
}

TEST(OddLatinClique, PrescribedRows) {
    const auto c = odd_n_latin_clique(5);
    ASSERT_EQ(c.members.size(), 5u);
    EXPECT_EQ(c.members[0], P({1, 2, 3, 4, 5}));
    EXPECT_EQ(c.members[1], P({2, 1, 5, 3, 4}));
    EXPECT_TRUE(is_clique(c.members, 0));
    EXPECT_NE(character_sum(IntegerPartition({2, 1, 1, 1, 1, 1}), odd_n_latin_clique(7).members), 0);
    EXPECT_THROW(odd_n_latin_clique(6), UnsupportedConstruction);
}

TEST(LatinRectangle, Completion) {
    const auto sq = complete_latin_rectangle({{1, 2, 3, 4}, {2, 1, 4, 3}}, 4);
    ASSERT_EQ(sq.size(), 4u);
    for (int c = 0; c < 4; ++c) {
        std::set<int> col;
        for (const auto& row : sq) col.insert(row[c]);
        EXPECT_EQ(col.size(), 4u);
    }
}

TEST(CycleClique, Decompositions) {
    for (int n : {3, 5, 7, 8, 9, 10}) {
        const auto c = cycle_decomposition_clique(n);
        EXPECT_EQ(static_cast<int>(c.members.size()), n) << n;
        EXPECT_TRUE(c.members.front().is_identity());
        EXPECT_TRUE(is_hamiltonian_decomposition({c.members.begin() + 1, c.members.end()})) << n;
    }
    EXPECT_THROW(cycle_decomposition_clique(4), UnsupportedConstruction);
    EXPECT_THROW(cycle_decomposition_clique(6), UnsupportedConstruction);
    EXPECT_THROW(cycle_decomposition_clique(12), UnsupportedConstruction);
}

TEST(CycleClique, DecompositionCheckRejectsOverlaps) {
    const auto c = cycle_decomposition_clique(5);
    std::vector<Permutation> cycles(c.members.begin() + 1, c.members.end());
    cycles[1] = cycles[0];
    EXPECT_FALSE(is_hamiltonian_decomposition(cycles));
}

TEST(AffineClique, SharplyTwoTransitive) {
    const auto s3 = affine_clique(3);
    EXPECT_EQ(s3.members.size(), 6u);
    std::vector<Permutation> all;
    for (const auto& p : oracle::all_perms(3)) all.emplace_back(p);
    EXPECT_EQ(s3.members, all);
    for (int q : {4, 5, 7, 8, 9}) {
        const auto c = affine_clique(q);
        EXPECT_EQ(static_cast<int>(c.members.size()), q * (q - 1));
        EXPECT_TRUE(is_clique(c.members, 1));
        // Exactly one member maps (0,1) to any ordered pair of distinct points.
        std::set<std::pair<int, int>> images;
        for (const auto& p : c.members) images.insert({p(1), p(2)});
        EXPECT_EQ(static_cast<int>(images.size()), q * (q - 1));
    }
    EXPECT_THROW(affine_clique(6), UnsupportedConstruction);
}

TEST(Families, Membership) {
    const auto s11 = point_stabiliser_coset(4, 1, 1);
    EXPECT_EQ(s11.members.size(), 6u);
    EXPECT_TRUE(validate_family(s11.members, 0).valid);
    EXPECT_EQ(family(4, {{1, 2}, {2, 1}}).members.size(), 2u);
    const auto snn = point_stabiliser_coset(5, 5, 5).members;
    EXPECT_TRUE(std::binary_search(snn.begin(), snn.end(), Permutation::identity(5)));
    EXPECT_THROW(family(4, {{1, 2}, {3, 2}}), InputError);
    EXPECT_THROW(family(4, {{1, 5}}), InputError);
    EXPECT_TRUE(validate_family(family(5, {{1, 3}, {4, 4}}).members, 1).valid);
}

TEST(Families, ValidationWitness) {
    const auto v = validate_family({Permutation::identity(4), P({2, 1, 4, 3})}, 0);
    EXPECT_FALSE(v.valid);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(v.witness->second, P({2, 1, 4, 3}));
}

TEST(EquitableQuotient, ClosedForm) {
    const auto q4 = equitable_quotient(4);
    EXPECT_TRUE(q4.equitable);
    EXPECT_EQ(q4.matrix, q4.closed_form);
    EXPECT_EQ(q4.matrix(0, 1), 9);
    EXPECT_EQ(q4.matrix(1, 0), 3);
    EXPECT_EQ(q4.matrix(1, 1), 6);
    EXPECT_EQ(q4.eigenvalues, (std::vector<Rational>{9, -3}));
    const auto q5 = equitable_quotient(5);
    EXPECT_EQ(q5.matrix, q5.closed_form);
    EXPECT_EQ(q5.eigenvalues, (std::vector<Rational>{44, -11}));
    for (int n = 3; n <= 7; ++n) {
        const auto q = equitable_quotient(n);
        EXPECT_EQ(q.matrix, q.closed_form) << n;
        EXPECT_EQ(q.matrix(0, 0) + q.matrix(0, 1), Rational(derangement_count(n)));
        EXPECT_EQ(q.matrix(1, 0) + q.matrix(1, 1), Rational(derangement_count(n)));
    }
}

TEST(Search, SmallDegrees) {
    const auto s3 = max_independent_sets(3);
    EXPECT_EQ(s3.alpha, 2u);
    EXPECT_EQ(s3.sets.size(), 9u);
    const auto s4 = max_independent_sets(4);
    EXPECT_EQ(s4.alpha, 6u);
    EXPECT_EQ(s4.sets.size(), 16u);
    EXPECT_TRUE(s4.tight);
    const auto s5 = max_independent_sets(5);
    EXPECT_EQ(s5.alpha, 24u);
    EXPECT_EQ(s5.sets.size(), 25u);
    EXPECT_THROW(max_independent_sets(7), DegreeError);
}

TEST(Search, MatchesGenericEnumeration) {
    for (int t : {0, 1}) {
        const int n = 4;
        const auto perms = oracle::all_perms(n);
        std::vector<std::vector<bool>> adj(perms.size(), std::vector<bool>(perms.size()));
        for (std::size_t i = 0; i < perms.size(); ++i)
            for (std::size_t j = 0; j < perms.size(); ++j) adj[i][j] = i != j && oracle::agree(perms[i], perms[j]) <= t;
        const auto [alpha, ref] = oracle::max_independent_sets(adj);
        const auto ours = max_independent_sets(n, t);
        EXPECT_EQ(ours.alpha, alpha);
        std::vector<std::vector<std::size_t>> ranks;
        for (const auto& s : ours.sets) {
            std::vector<std::size_t> r;
            for (const auto& p : s) r.push_back(rank_permutation(p));
            ranks.push_back(r);
        }
        std::sort(ranks.begin(), ranks.end());
        EXPECT_EQ(ranks, ref) << "t=" << t;
    }
}

TEST(Search, WorkerCountDoesNotChangeResult) {
    const auto a = max_independent_sets(5, 0, 1);
    const auto b = max_independent_sets(5, 0, 4);
    EXPECT_EQ(a.sets, b.sets);
    EXPECT_EQ(a.nodes, b.nodes);
}

TEST(Search, AffineCoverInPOne) {
    const auto s = max_independent_sets(5, 1);
    EXPECT_EQ(s.omega, 20u);
    EXPECT_EQ(s.alpha, 6u);
    EXPECT_TRUE(s.tight);
    for (const auto& set : s.sets) EXPECT_TRUE(validate_family(set, 1).valid);
}
