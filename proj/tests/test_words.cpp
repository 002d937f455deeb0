#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracle/oracle.hpp"
#include "skylr/enumgen.hpp"
#include "skylr/error.hpp"
#include "skylr/words.hpp"

using namespace skylr;

namespace {

Word w(std::string_view digits) {
    Word out;
    for (char c : digits) out.push_back(c - '0');
    return out;
}

}  // namespace

TEST(Words, ExampleReadingWords) {
    EXPECT_EQ(render_word(row_word(fixtures::skew_large())), "4212513");
    EXPECT_EQ(render_word(col_word(fixtures::skew_large())), "1254321");
    EXPECT_EQ(render_word(col_word(fixtures::lrs_example())), "3231321");
    EXPECT_EQ(render_word(row_word(fixtures::lrs_example())), "3332211");
    EXPECT_EQ(render_word(col_word(fixtures::lrk_example())), "3323121");
}

TEST(Words, Content) {
    EXPECT_EQ(content(w("3231321")), WeakComposition({2, 2, 3}));
    EXPECT_EQ(content(w("3323121")), WeakComposition({2, 2, 3}));
    EXPECT_EQ(content(Word{}), WeakComposition{});
    EXPECT_THROW(content(Word{0}), Error);
}

TEST(Words, ContreLattice) {
    EXPECT_TRUE(is_contre_lattice(w("3231321")));
    EXPECT_TRUE(is_regular_contre_lattice(w("3231321")));
    EXPECT_TRUE(is_contre_lattice(Word{}));
    EXPECT_FALSE(is_regular_contre_lattice(Word{}));
    EXPECT_FALSE(is_contre_lattice(w("12")));
    EXPECT_FALSE(is_contre_lattice(w("132")));
    EXPECT_TRUE(is_contre_lattice(w("332")));
    EXPECT_FALSE(is_regular_contre_lattice(w("332")));
    EXPECT_TRUE(is_regular_contre_lattice(w("3321321")));
}

TEST(Words, ContreLatticeMatchesOracle) {
    for (int len = 0; len <= 6; ++len)
        oracle::for_each_word(len, 3, [](const std::vector<int>& word) {
            EXPECT_EQ(is_contre_lattice(word), oracle::contre_lattice(word));
        });
}

TEST(Words, ColumnSets) {
    const ColumnSets c = column_sets(fixtures::lrs_example());
    ASSERT_EQ(c.size(), 5u);
    EXPECT_EQ(c[0], (std::vector<int>{1}));
    EXPECT_EQ(c[1], (std::vector<int>{2}));
    EXPECT_EQ(c[2], (std::vector<int>{3, 1}));
    EXPECT_EQ(c[3], (std::vector<int>{3, 2}));
    EXPECT_EQ(c[4], (std::vector<int>{3}));
    EXPECT_EQ(column_sets(fixtures::lrk_example()), column_sets(fixtures::reshaped_lrk()));
    EXPECT_TRUE(is_loosely_contre_lattice(fixtures::lrs_example()));

    Filling attack(SkewShape(WeakComposition{1, 1}), Basement::of(BasementKind::Large, 2), 2, {{1}, {1}});
    try {
        column_sets(attack);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DuplicateInColumn);
    }
    Filling single(SkewShape(WeakComposition{1}), Basement::of(BasementKind::Large, 1), 1, {{1}});
    EXPECT_TRUE(is_loosely_contre_lattice(single));
}

TEST(Words, RenderWideEntries) { EXPECT_EQ(render_word(Word{12, 3}), "12,3"); }

TEST(Words, ContentAgreesAcrossReadings) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (int size = 0; size <= 4; ++size)
            for (const WeakComposition& d : weak_compositions(n, size))
                for_each_ssk(EnumQuery::of(SkewShape(d), BasementKind::Large), [&](const Filling& f) {
                    const auto e = weight_monomial(f);
                    WeakComposition expect(std::vector<int>(e.begin(), e.end()));
                    const auto c1 = content(row_word(f)).vec(), c2 = content(col_word(f)).vec();
                    EXPECT_EQ(c1, c2);
                    std::vector<int> padded = c1;
                    padded.resize(n, 0);
                    EXPECT_EQ(padded, e);
                });
}

TEST(Words, SortingColumnSegmentsKeepsContreLattice) {
    for (int len = 1; len <= 6; ++len)
        oracle::for_each_word(len, 3, [&](const std::vector<int>& word) {
            if (!is_contre_lattice(word)) return;
            for (int a = 0; a < len; ++a)
                for (int b = a + 1; b <= len; ++b) {
                    std::vector<int> seg(word.begin() + a, word.begin() + b);
                    std::sort(seg.begin(), seg.end());
                    if (std::adjacent_find(seg.begin(), seg.end()) != seg.end()) continue;
                    Word sorted = word;
                    std::sort(sorted.begin() + a, sorted.begin() + b, std::greater<>());
                    EXPECT_TRUE(is_contre_lattice(sorted));
                }
        });
}
