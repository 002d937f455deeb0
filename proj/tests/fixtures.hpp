#pragma once

// Worked examples, cell by cell. Rows are listed top to bottom and
// hold only the entries right of the inner shape.

#include "skylr/contretab.hpp"
#include "skylr/skyline.hpp"

namespace fixtures {

using namespace skylr;

/// SSK of shape (2,0,3,2,1) on the identity basement.
inline Filling ssk_ident() {
    return Filling(SkewShape(WeakComposition{2, 0, 3, 2, 1}), Basement::of(BasementKind::Ident, 5), 5,
                   {{1, 1}, {}, {3, 3, 2}, {4, 2}, {5}});
}

/// Skew SSK on the large basement.
inline Filling skew_large() {
    return Filling(SkewShape(WeakComposition{3, 1, 4, 2, 6}, WeakComposition{2, 0, 3, 1, 3}),
                   Basement::of(BasementKind::Large, 5), 5, {{3}, {1}, {5}, {2}, {4, 2, 1}});
}

/// An LRS with content (2,2,3).
inline Filling lrs_example() {
    return Filling(SkewShape(WeakComposition{3, 1, 4, 2, 5}, WeakComposition{2, 0, 3, 1, 2}),
                   Basement::of(BasementKind::Large, 5), 5, {{1}, {1}, {2}, {2}, {3, 3, 3}});
}

/// An LRK on the shifted basement, content (2,2,3).
inline Filling lrk_example() {
    return Filling(SkewShape(WeakComposition{5, 1, 3, 2, 4}, WeakComposition{2, 0, 1, 2, 3}),
                   Basement::of(BasementKind::Shifted, 5), 5, {{3, 3, 3}, {1}, {2, 1}, {}, {2}});
}

/// reshape(lrk_example(), (5,3,2,4,1)).
inline Filling reshaped_lrk() {
    return Filling(SkewShape(WeakComposition{5, 3, 2, 4, 1}, WeakComposition{3, 2, 1, 2, 0}),
                   Basement::of(BasementKind::Large, 5), 5, {{3, 3}, {1}, {2}, {3, 2}, {1}});
}

/// The contretableau paired with ssk_ident by rho.
inline ContreTableau rho_example() {
    return ContreTableau(Partition{3, 2, 2, 1}, {{5, 3, 2}, {4, 2}, {3, 1}, {1}});
}

/// A contretableau, a skew one, and an LR skew contretableau.
inline ContreTableau ct_example() { return ContreTableau(Partition{4, 4, 2, 1}, {{7, 7, 5, 2}, {6, 4, 4, 1}, {4, 2}, {1}}); }
inline ContreTableau skew_ct() {
    return ContreTableau(Partition{4, 4, 2, 1}, Partition{3, 2}, {{8}, {7, 6}, {5, 4}, {2}});
}
inline ContreTableau lr_ct() {
    return ContreTableau(Partition{4, 4, 2, 1}, Partition{3, 2}, {{3}, {3, 2}, {3, 1}, {2}});
}

}  // namespace fixtures
