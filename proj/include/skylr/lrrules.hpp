#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skylr/poly.hpp"
#include "skylr/shapes.hpp"

namespace skylr {

/// Number of LRS of shape delta/gamma with content reverse(lam).
std::uint64_t coeff_a(const WeakComposition& gamma, const Partition& lam, const WeakComposition& delta);
/// Number of LRK of shape reverse(delta)/reverse(gamma) with content reverse(lam).
std::uint64_t coeff_b(const WeakComposition& gamma, const Partition& lam, const WeakComposition& delta);
/// Number of LRC classes of shape beta/alpha with content reverse(lam).
std::uint64_t coeff_qs(const Composition& alpha, const Partition& lam, const Composition& beta);
/// Number of LR skew contretableaux of shape nu/mu with content reverse(lam).
std::uint64_t coeff_classical(const Partition& mu, const Partition& lam, const Partition& nu);

/// Every delta of the same length with rem_k(delta) = gamma for some k.
std::vector<WeakComposition> pieri_single_box(const WeakComposition& gamma);
/// Every composition beta with rem_k(beta) = alpha for some k.
std::vector<Composition> pieri_single_box(const Composition& alpha);

enum class Rule { Atom, Character, QuasiSchur };
std::string_view to_string(Rule r);

/// One product expansion checked two ways: coefficients counted from
/// tableaux, and coefficients solved from the product polynomial.
struct ExpansionReport {
    Rule rule = Rule::Atom;
    std::vector<int> shape;
    std::vector<int> lambda;
    std::size_t n = 0;
    Polynomial product;
    std::map<std::vector<int>, Coeff> counted;
    std::map<std::vector<int>, Coeff> solved;
    bool identity_holds = false;
    bool coefficients_agree = false;
    std::optional<std::string> first_discrepancy;

    bool pass() const noexcept { return identity_holds && coefficients_agree; }
    std::string label() const;
};

ExpansionReport verify_atom_theorem(const WeakComposition& gamma, const Partition& lam, std::size_t n);
ExpansionReport verify_char_theorem(const WeakComposition& gamma, const Partition& lam, std::size_t n);
ExpansionReport verify_qs_theorem(const Composition& alpha, const Partition& lam, std::size_t n);

/// How the two Bruhat sums of the character/atom consistency identity are indexed.
/// Literal:  sum over alpha with delta >= alpha*, alpha* contains gamma*, of b^alpha,
///           against sum over beta with delta contains beta, beta >= gamma*, of a^delta_beta.
/// Derived:  the same with alpha and gamma unreversed, which is what expanding
///           kappa_gamma = sum_{beta >= gamma} A_beta on both sides of the product gives.
enum class IdentityForm { Literal, Derived };

struct ConsistencySides {
    Coeff character_side = 0;
    Coeff atom_side = 0;
    bool holds() const { return character_side == atom_side; }
};

ConsistencySides consistency_sides(const WeakComposition& delta, const WeakComposition& gamma, const Partition& lam,
                                   IdentityForm form);
bool verify_consistency_identity(const WeakComposition& delta, const WeakComposition& gamma, const Partition& lam,
                                 IdentityForm form = IdentityForm::Derived);

struct SweepBounds {
    std::size_t max_n = 3;
    int max_size = 3;
    int max_lambda = 2;
};

struct ConsistencyCase {
    WeakComposition delta;
    WeakComposition gamma;
    Partition lambda;
    ConsistencySides sides;
};

/// Worker count: SKYLINE_THREADS if set, else the hardware concurrency.
std::size_t default_threads();

/// Runs `job(i)` for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& job);

/// Reports in a fixed order independent of the thread count.
std::vector<ExpansionReport> sweep(Rule rule, const SweepBounds& bounds, std::size_t threads = default_threads());
std::vector<ConsistencyCase> sweep_consistency(const SweepBounds& bounds, IdentityForm form,
                                               std::size_t threads = default_threads());

}  // namespace skylr
