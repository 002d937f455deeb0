#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "skylr/contretab.hpp"
#include "skylr/shapes.hpp"
#include "skylr/skyline.hpp"

namespace skylr {

struct EnumQuery {
    SkewShape shape;
    Basement basement;
    int n = 0;
    /// Exact content (padded with zeros up to n) when present.
    std::optional<WeakComposition> content;
    bool contre_lattice = false;
    bool regular = false;

    /// Standard basement on shape.rows() rows with n = rows.
    static EnumQuery of(SkewShape shape, BasementKind kind);
};

using FillingVisitor = std::function<void(const Filling&)>;

/// Visits every SSK of the query exactly once. Cells are filled in row
/// reading order, each trying entries from largest to smallest, so the order
/// is deterministic. The visited reference is only valid during the call.
void for_each_ssk(const EnumQuery& q, const FillingVisitor& visit);
std::vector<Filling> enum_ssk(const EnumQuery& q);
std::uint64_t count_ssk(const EnumQuery& q);

/// SSK on the large basement with regular contre-lattice column word.
std::vector<Filling> enum_lrs(const WeakComposition& delta, const WeakComposition& gamma, const WeakComposition& content);
std::uint64_t count_lrs(const WeakComposition& delta, const WeakComposition& gamma, const WeakComposition& content);
/// Same with the shifted basement.
std::vector<Filling> enum_lrk(const WeakComposition& delta, const WeakComposition& gamma, const WeakComposition& content);
std::uint64_t count_lrk(const WeakComposition& delta, const WeakComposition& gamma, const WeakComposition& content);

/// Smallest admissible number of rows for a class count of shape beta/alpha.
std::size_t lrc_rows(const Composition& beta, const Composition& alpha, const WeakComposition& content);

/// One LRS per class: overall shape beta padded to `rows`, basement shapes
/// ranging over the zero paddings of alpha. rows = 0 picks lrc_rows.
std::vector<Filling> lrc_representatives(const Composition& beta, const Composition& alpha,
                                         const WeakComposition& content, std::size_t rows = 0);
std::uint64_t count_lrc(const Composition& beta, const Composition& alpha, const WeakComposition& content,
                        std::size_t rows = 0);

/// The contre-lattice SSK on the large basement with overall shape sigma and
/// the column sets of y. Entries go in smallest first, each into the lowest
/// row whose current end sits in its column.
Filling reshape(const Filling& y, const WeakComposition& sigma);

using TableauVisitor = std::function<void(const ContreTableau&)>;

/// All contretableaux of shape lambda/mu with entries in [n], optionally of
/// fixed content.
void for_each_ct(const Partition& lambda, const Partition& mu, int n, const std::optional<WeakComposition>& content,
                 const TableauVisitor& visit);
std::vector<ContreTableau> enum_ct(const Partition& lambda, const Partition& mu, int n,
                                   const std::optional<WeakComposition>& content = std::nullopt);

}  // namespace skylr
