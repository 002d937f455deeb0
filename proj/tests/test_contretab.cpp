#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle/oracle.hpp"
#include "skylr/contretab.hpp"
#include "skylr/enumgen.hpp"
#include "skylr/error.hpp"

using namespace skylr;

TEST(Contretab, ExampleTableaux) {
    EXPECT_TRUE(is_ct(fixtures::ct_example()));
    EXPECT_TRUE(is_ct(fixtures::skew_ct()));
    EXPECT_TRUE(is_ct(fixtures::lr_ct()));
    EXPECT_FALSE(is_ct(ContreTableau(Partition{1, 1}, {{2}, {2}})));
    EXPECT_FALSE(is_ct(ContreTableau(Partition{2}, {{1, 2}})));
    EXPECT_FALSE(is_ct(fixtures::ct_example(), 6));
}

TEST(Contretab, SuperCt) {
    EXPECT_EQ(super_ct(Partition{4, 4, 2, 1}),
              ContreTableau(Partition{4, 4, 2, 1}, {{4, 4, 4, 4}, {3, 3, 3, 3}, {2, 2}, {1}}));
    EXPECT_EQ(super_ct(Partition{1}), ContreTableau(Partition{1}, {{1}}));
    EXPECT_EQ(content(super_ct(Partition{2, 2})), WeakComposition({2, 2}));
    for (int size = 1; size <= 6; ++size)
        for (const Partition& lam : partitions(size, 6)) {
            const ContreTableau u = super_ct(lam);
            EXPECT_TRUE(is_ct(u));
            EXPECT_EQ(content(u), reverse(lam));
            EXPECT_TRUE(is_lr_skew_ct(u));
        }
}

TEST(Contretab, LrSkewCt) {
    const ContreTableau t = fixtures::lr_ct();
    EXPECT_TRUE(is_lr_skew_ct(t));
    EXPECT_EQ(content(t), WeakComposition({1, 2, 3}));
    EXPECT_FALSE(is_lr_skew_ct(fixtures::skew_ct()));
}

TEST(Contretab, RhoExample) {
    const Filling y = fixtures::ssk_ident();
    const ContreTableau t = rho(y);
    EXPECT_EQ(t, fixtures::rho_example());
    EXPECT_TRUE(is_ct(t));
    EXPECT_EQ(rho_inv(t, 5), y);
}

TEST(Contretab, RhoEdgeCases) {
    Filling empty(SkewShape(WeakComposition{0, 0}), Basement::of(BasementKind::Ident, 2), 2, {{}, {}});
    EXPECT_EQ(rho(empty).rows(), 0u);
    EXPECT_EQ(rho_inv(ContreTableau(Partition{}, {}), 2), empty);
    for (int k = 1; k <= 4; ++k) {
        const Filling f = rho_inv(ContreTableau(Partition{1}, {{k}}), 4);
        std::vector<int> shape(4, 0);
        shape[static_cast<std::size_t>(k - 1)] = 1;
        EXPECT_EQ(f.shape().outer().vec(), shape);
        EXPECT_EQ(f.value(k, 1), k);
    }
    Filling bad(SkewShape(WeakComposition{0, 1}), Basement::of(BasementKind::Ident, 2), 2, {{}, {1}});
    try {
        rho(bad);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSSK);
    }
}

TEST(Contretab, EnumCtMatchesOracle) {
    for (int size = 0; size <= 5; ++size)
        for (const Partition& lam : partitions(size, 4))
            for (int n = 1; n <= 4; ++n) {
                const auto mine = enum_ct(lam, Partition{}, n);
                const auto brute = oracle::brute_ct(lam.vec(), {}, n);
                ASSERT_EQ(mine.size(), brute.size()) << to_string(lam) << " n=" << n;
                for (std::size_t i = 0; i < mine.size(); ++i) EXPECT_TRUE(is_ct(mine[i], n));
            }
    EXPECT_EQ(enum_ct(Partition{2, 1}, Partition{}, 3).size(), 8u);
    for (int n = 1; n <= 4; ++n) {
        const auto brute = oracle::brute_ct({4, 4, 2, 1}, {3, 2}, n);
        EXPECT_EQ(enum_ct(Partition{4, 4, 2, 1}, Partition{3, 2}, n).size(), brute.size());
        std::size_t with_content = 0;
        for (const auto& rows : brute) {
            std::vector<int> c(static_cast<std::size_t>(n), 0);
            for (const auto& row : rows)
                for (int v : row) ++c[static_cast<std::size_t>(v - 1)];
            if (c == pad(Composition{1, 2, 3}, static_cast<std::size_t>(std::max(n, 3))).vec()) ++with_content;
        }
        if (n >= 3) EXPECT_EQ(enum_ct(Partition{4, 4, 2, 1}, Partition{3, 2}, n, WeakComposition{1, 2, 3}).size(), with_content);
    }
}

TEST(Contretab, RhoRoundTripOnSskI) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (int size = 0; size <= 6 && (n < 4 || size <= 5); ++size)
            for (const WeakComposition& g : weak_compositions(n, size))
                for_each_ssk(EnumQuery::of(SkewShape(g), BasementKind::Ident), [&](const Filling& f) {
                    const ContreTableau t = rho(f);
                    ASSERT_TRUE(is_ct(t, static_cast<int>(n)));
                    EXPECT_EQ(column_sets(f), column_sets(rho_inv(t, static_cast<int>(n))));
                    EXPECT_EQ(rho_inv(t, static_cast<int>(n)), f);
                    const Word cw = col_word(t);
                    std::vector<int> e = weight_monomial(f), c = content(cw).vec();
                    c.resize(n, 0);
                    EXPECT_EQ(c, e);
                });
}

TEST(Contretab, RhoInvRoundTripOnCt) {
    for (int n = 1; n <= 4; ++n)
        for (int size = 0; size <= 6; ++size)
            for (const Partition& lam : partitions(size, static_cast<std::size_t>(n)))
                for (const ContreTableau& t : enum_ct(lam, Partition{}, n)) {
                    const Filling f = rho_inv(t, n);
                    EXPECT_TRUE(is_ssk(f));
                    EXPECT_EQ(rho(f), t);
                }
}

TEST(Contretab, RowAndColumnReadingsAgreeOnLrProperty) {
    // reverse(row word) regular contre-lattice <=> column word regular contre-lattice
    for (int size = 1; size <= 7; ++size)
        for (const Partition& lam : partitions(size, 4))
            for (int inner = 0; inner < size; ++inner)
                for (const Partition& mu : partitions(inner, lam.length())) {
                    bool inside = true;
                    for (std::size_t r = 0; r < mu.length(); ++r) inside = inside && mu[r] <= lam[r];
                    if (!inside || size - inner > 6) continue;
                    for (const ContreTableau& t : enum_ct(lam, mu, 3))
                        EXPECT_EQ(is_lr_skew_ct(t), is_regular_contre_lattice(col_word(t)));
                }
}
