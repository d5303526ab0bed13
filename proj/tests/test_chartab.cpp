#include <gtest/gtest.h>

#include <sstream>

#include "ekr/chartab.hpp"
#include "oracles.hpp"

using namespace ekr;

namespace {

IntegerPartition L(std::vector<int> v) { return IntegerPartition(std::move(v)); }
CycleType C(std::vector<int> v) { return CycleType(IntegerPartition(std::move(v))); }

}  // namespace

TEST(Dimension, HookLengths) {
    EXPECT_EQ(dimension(L({5})), 1);
    EXPECT_EQ(dimension(L({4, 1})), 4);
    EXPECT_EQ(dimension(L({2, 2})), 2);
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : partitions_of(n)) EXPECT_EQ(dimension(p), oracle::standard_tableaux(p.parts())) << p.str();
}

TEST(Dimension, SquaresSumToOrder) {
    for (int n = 1; n <= 10; ++n) {
        BigInt s = 0;
        for (const auto& p : partitions_of(n)) s += dimension(p) * dimension(p);
        EXPECT_EQ(s, factorial(n));
    }
}

TEST(Characters, KnownValues) {
    EXPECT_EQ(character_value(L({2, 2}), C({2, 2})), 2);
    EXPECT_EQ(character_value(L({2, 2}), C({4})), 0);
    EXPECT_EQ(character_value(L({4}), C({3, 1})), 1);
    EXPECT_EQ(character_value(L({1, 1, 1, 1}), C({2, 1, 1})), -1);
    EXPECT_THROW(character_value(L({3}), C({2, 2})), InputError);
}

TEST(Characters, SmallTables) {
    const auto t2 = character_table(2);
    EXPECT_EQ(t2.values, (std::vector<std::vector<BigInt>>{{1, 1}, {-1, 1}}));  // identity class is the last column
    const auto t8 = character_table(8);
    EXPECT_EQ(t8.partitions.size(), 22u);
    BigInt s = 0;
    for (std::size_t i = 0; i < 22; ++i) s += t8.dimension(i) * t8.dimension(i);
    EXPECT_EQ(s, 40320);
}

TEST(Characters, MatchBruteForceOracle) {
    for (int n = 1; n <= 6; ++n) {
        const auto ours = character_table(n);
        const auto ref = oracle::character_table(n);
        ASSERT_EQ(ours.values.size(), ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i)
            for (std::size_t j = 0; j < ref.size(); ++j) EXPECT_EQ(ours.at(i, j), ref[i][j]) << n << " " << i << " " << j;
    }
}

TEST(Characters, NCycleValues) {
    EXPECT_EQ(n_cycle_character(L({6})), 1);
    EXPECT_EQ(n_cycle_character(L({2, 1, 1, 1, 1, 1})), -1);  // leg length 5
    EXPECT_EQ(n_cycle_character(L({2, 1, 1, 1, 1})), 1);      // leg length 4
    EXPECT_EQ(n_cycle_character(L({2, 2})), 0);
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : partitions_of(n)) {
            const auto v = n_cycle_character(p);
            if (p.is_hook()) {
                const int leg = p.length() - 1;
                EXPECT_EQ(v, leg % 2 == 0 ? 1 : -1) << p.str();
            } else {
                EXPECT_EQ(v, 0) << p.str();
            }
        }
}

TEST(Characters, DegreeCeiling) {
    EXPECT_THROW(character_table(13), DegreeError);
    EXPECT_THROW(character_table(0), DegreeError);
    EXPECT_NO_THROW(character_table(12));
}

TEST(Characters, TableLayout) {
    const auto t = character_table(5);
    EXPECT_EQ(t.partitions.front(), L({5}));
    EXPECT_EQ(t.partitions.back(), L({1, 1, 1, 1, 1}));
    EXPECT_TRUE(t.cycle_types[t.identity_column()].is_identity_class());
    for (std::size_t j = 0; j < t.cycle_types.size(); ++j) EXPECT_EQ(t.at(0, j), 1);
    EXPECT_EQ(t.row_of(L({3, 2})), 2u);
    EXPECT_THROW(t.row_of(L({2, 2})), InputError);
}

TEST(Characters, CsvExport) {
    std::ostringstream os;
    write_csv(os, character_table(3));
    EXPECT_EQ(os.str(),
              "# character table of S(3)\n"
              "# rows: partitions lambda (reverse lexicographic); columns: cycle types mu\n"
              "lambda\\mu,\"[3]\",\"[2,1]\",\"[1,1,1]\"\n"
              "\"[3]\",1,1,1\n"
              "\"[2,1]\",-1,0,2\n"
              "\"[1,1,1]\",1,-1,1\n");
}
