#include "skylr/lrrules.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "skylr/contretab.hpp"
#include "skylr/enumgen.hpp"
#include "skylr/error.hpp"

namespace skylr {

namespace {

void check_skew(const WeakComposition& gamma, const Partition& lam, const WeakComposition& delta) {
    if (gamma.length() != delta.length())
        throw Error(ErrorCode::ShapeMismatch, to_string(gamma) + " and " + to_string(delta) + " differ in length");
    if (!contains(delta, gamma))
        throw Error(ErrorCode::ShapeMismatch, to_string(gamma) + " is not contained in " + to_string(delta));
    if (delta.sum() - gamma.sum() != lam.sum())
        throw Error(ErrorCode::ShapeMismatch, "|" + to_string(delta) + "| - |" + to_string(gamma) + "| != |" +
                                                  to_string(lam) + "|");
}

/// Coefficient in the product expansion; lam = () means multiplying by 1.
Coeff atom_coefficient(const WeakComposition& beta, const Partition& lam, const WeakComposition& delta) {
    if (lam.empty()) return beta == delta ? 1 : 0;
    if (!contains(delta, beta) || delta.sum() - beta.sum() != lam.sum()) return 0;
    return coeff_a(beta, lam, delta);
}

Coeff char_coefficient(const WeakComposition& gamma, const Partition& lam, const WeakComposition& alpha) {
    if (lam.empty()) return gamma == alpha ? 1 : 0;
    if (!contains(alpha, gamma) || alpha.sum() - gamma.sum() != lam.sum()) return 0;
    return coeff_b(gamma, lam, alpha);
}

}  // namespace

std::uint64_t coeff_a(const WeakComposition& gamma, const Partition& lam, const WeakComposition& delta) {
    check_skew(gamma, lam, delta);
    return count_lrs(delta, gamma, reverse(lam));
}

std::uint64_t coeff_b(const WeakComposition& gamma, const Partition& lam, const WeakComposition& delta) {
    check_skew(gamma, lam, delta);
    return count_lrk(reverse(delta), reverse(gamma), reverse(lam));
}

std::uint64_t coeff_qs(const Composition& alpha, const Partition& lam, const Composition& beta) {
    return count_lrc(beta, alpha, reverse(lam));
}

std::uint64_t coeff_classical(const Partition& mu, const Partition& lam, const Partition& nu) {
    if (mu.length() > nu.length())
        throw Error(ErrorCode::ShapeMismatch, to_string(mu) + " is not contained in " + to_string(nu));
    for (std::size_t r = 0; r < mu.length(); ++r)
        if (mu[r] > nu[r]) throw Error(ErrorCode::ShapeMismatch, to_string(mu) + " is not contained in " + to_string(nu));
    if (nu.sum() != mu.sum() + lam.sum())
        throw Error(ErrorCode::ShapeMismatch, "|" + to_string(nu) + "| != |" + to_string(mu) + "| + |" + to_string(lam) + "|");
    std::uint64_t count = 0;
    for_each_ct(nu, mu, static_cast<int>(lam.length()), reverse(lam), [&](const ContreTableau& t) {
        if (is_lr_skew_ct(t)) ++count;
    });
    return count;
}

std::vector<WeakComposition> pieri_single_box(const WeakComposition& gamma) {
    std::vector<WeakComposition> out;
    for (std::size_t i = 0; i < gamma.length(); ++i) {
        std::vector<int> d = gamma.vec();
        ++d[i];
        WeakComposition delta(d);
        if (rem_k(delta, d[i]) == gamma) out.push_back(std::move(delta));
    }
    return out;
}

std::vector<Composition> pieri_single_box(const Composition& alpha) {
    std::vector<Composition> candidates;
    for (std::size_t i = 0; i <= alpha.length(); ++i) {
        std::vector<int> b = alpha.vec();
        b.insert(b.begin() + static_cast<std::ptrdiff_t>(i), 1);
        candidates.emplace_back(std::move(b));
        if (i < alpha.length()) {
            std::vector<int> c = alpha.vec();
            ++c[i];
            candidates.emplace_back(std::move(c));
        }
    }
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Composition> out;
    for (const Composition& beta : candidates) {
        std::vector<int> parts = beta.vec();
        std::sort(parts.begin(), parts.end());
        parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
        for (int k : parts)
            if (rem_k(beta, k) == alpha) {
                out.push_back(beta);
                break;
            }
    }
    return out;
}

std::string_view to_string(Rule r) {
    switch (r) {
        case Rule::Atom: return "atom";
        case Rule::Character: return "char";
        case Rule::QuasiSchur: return "qs";
    }
    return "atom";
}

std::string ExpansionReport::label() const {
    return std::string(to_string(rule)) + " shape=" + to_string(std::span<const int>(shape)) +
           " lambda=" + to_string(std::span<const int>(lambda)) + " n=" + std::to_string(n);
}

namespace {

template <class Key>
void finish_report(ExpansionReport& r, const std::map<Key, Coeff>& counted, const std::map<Key, Coeff>& solved,
                   GenKind basis) {
    Polynomial rebuilt(r.n);
    for (const auto& [key, c] : counted) {
        r.counted.emplace(key.vec(), c);
        rebuilt += cached(basis, key.vec(), r.n) * c;
    }
    for (const auto& [key, c] : solved) r.solved.emplace(key.vec(), c);
    r.identity_holds = rebuilt == r.product;
    r.coefficients_agree = r.counted == r.solved;
    if (!r.coefficients_agree) {
        std::vector<std::vector<int>> keys;
        for (const auto& [k, c] : r.counted) keys.push_back(k);
        for (const auto& [k, c] : r.solved) keys.push_back(k);
        std::sort(keys.begin(), keys.end());
        for (const auto& k : keys) {
            const auto a = r.counted.find(k), b = r.solved.find(k);
            const Coeff ca = a == r.counted.end() ? Coeff(0) : a->second;
            const Coeff cb = b == r.solved.end() ? Coeff(0) : b->second;
            if (ca != cb) {
                r.first_discrepancy = "shape " + to_string(std::span<const int>(k)) + ": counted " + ca.str() +
                                      ", solved " + cb.str();
                break;
            }
        }
    } else if (!r.identity_holds) {
        r.first_discrepancy = "expansion does not reproduce the product";
    }
}

ExpansionReport start(Rule rule, const std::vector<int>& shape, const Partition& lam, std::size_t n) {
    ExpansionReport r;
    r.rule = rule;
    r.shape = shape;
    r.lambda = lam.vec();
    r.n = n;
    return r;
}

}  // namespace

ExpansionReport verify_atom_theorem(const WeakComposition& gamma, const Partition& lam, std::size_t n) {
    ExpansionReport r = start(Rule::Atom, gamma.vec(), lam, n);
    r.product = cached(GenKind::Atom, gamma.vec(), n) * cached(GenKind::Schur, lam.vec(), n);
    std::map<WeakComposition, Coeff> counted;
    for (const WeakComposition& delta : weak_compositions(n, gamma.sum() + lam.sum()))
        if (contains(delta, gamma))
            if (Coeff c = atom_coefficient(gamma, lam, delta); c != 0) counted.emplace(delta, c);
    finish_report(r, counted, expand_in_atoms(r.product), GenKind::Atom);
    return r;
}

ExpansionReport verify_char_theorem(const WeakComposition& gamma, const Partition& lam, std::size_t n) {
    ExpansionReport r = start(Rule::Character, gamma.vec(), lam, n);
    r.product = cached(GenKind::Character, gamma.vec(), n) * cached(GenKind::Schur, lam.vec(), n);
    std::map<WeakComposition, Coeff> counted;
    for (const WeakComposition& delta : weak_compositions(n, gamma.sum() + lam.sum()))
        if (contains(delta, gamma))
            if (Coeff c = char_coefficient(gamma, lam, delta); c != 0) counted.emplace(delta, c);
    finish_report(r, counted, expand_in_chars(r.product), GenKind::Character);
    return r;
}

ExpansionReport verify_qs_theorem(const Composition& alpha, const Partition& lam, std::size_t n) {
    ExpansionReport r = start(Rule::QuasiSchur, alpha.vec(), lam, n);
    r.product = cached(GenKind::QuasiSchur, alpha.vec(), n) * cached(GenKind::Schur, lam.vec(), n);
    std::map<Composition, Coeff> counted;
    if (lam.empty()) {
        counted.emplace(alpha, 1);
    } else {
        for (const Composition& beta : compositions(alpha.sum() + lam.sum(), n))
            if (Coeff c = coeff_qs(alpha, lam, beta); c != 0) counted.emplace(beta, c);
    }
    finish_report(r, counted, expand_in_qs(r.product), GenKind::QuasiSchur);
    return r;
}

ConsistencySides consistency_sides(const WeakComposition& delta, const WeakComposition& gamma, const Partition& lam,
                                   IdentityForm form) {
    if (delta.length() != gamma.length())
        throw Error(ErrorCode::ShapeMismatch, to_string(delta) + " and " + to_string(gamma) + " differ in length");
    const bool literal = form == IdentityForm::Literal;
    const WeakComposition g_ref = literal ? reverse(gamma) : gamma;
    ConsistencySides s;
    for (const WeakComposition& r : rearrangements(delta)) {
        // literal: r plays alpha*, so alpha = reverse(r); derived: r is alpha.
        if (!comp_bruhat_geq(delta, r) || !contains(r, g_ref)) continue;
        const WeakComposition alpha = literal ? reverse(r) : r;
        s.character_side += char_coefficient(gamma, lam, alpha);
    }
    for (const WeakComposition& beta : rearrangements(g_ref)) {
        if (!comp_bruhat_geq(beta, g_ref) || !contains(delta, beta)) continue;
        s.atom_side += atom_coefficient(beta, lam, delta);
    }
    return s;
}

bool verify_consistency_identity(const WeakComposition& delta, const WeakComposition& gamma, const Partition& lam,
                                 IdentityForm form) {
    return consistency_sides(delta, gamma, lam, form).holds();
}

std::size_t default_threads() {
    std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SKYLINE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return std::min<std::size_t>(static_cast<std::size_t>(v), hw);
    }
    return hw;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& job) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<ExpansionReport> sweep(Rule rule, const SweepBounds& bounds, std::size_t threads) {
    struct Instance {
        std::vector<int> shape;
        Partition lam;
        std::size_t n;
    };
    std::vector<Instance> todo;
    for (std::size_t n = 1; n <= bounds.max_n; ++n)
        for (int size = 0; size <= bounds.max_size; ++size) {
            std::vector<std::vector<int>> shapes;
            if (rule == Rule::QuasiSchur)
                for (const Composition& a : compositions(size, n)) shapes.push_back(a.vec());
            else
                for (const WeakComposition& g : weak_compositions(n, size)) shapes.push_back(g.vec());
            for (const auto& shape : shapes)
                for (int l = 0; l <= bounds.max_lambda; ++l)
                    for (const Partition& lam : partitions(l, n)) todo.push_back({shape, lam, n});
        }
    std::vector<ExpansionReport> out(todo.size());
    parallel_for(todo.size(), threads, [&](std::size_t i) {
        const Instance& in = todo[i];
        switch (rule) {
            case Rule::Atom: out[i] = verify_atom_theorem(WeakComposition(in.shape), in.lam, in.n); break;
            case Rule::Character: out[i] = verify_char_theorem(WeakComposition(in.shape), in.lam, in.n); break;
            case Rule::QuasiSchur: out[i] = verify_qs_theorem(Composition(in.shape), in.lam, in.n); break;
        }
    });
    return out;
}

std::vector<ConsistencyCase> sweep_consistency(const SweepBounds& bounds, IdentityForm form, std::size_t threads) {
    std::vector<ConsistencyCase> out;
    for (std::size_t n = 1; n <= bounds.max_n; ++n)
        for (int size = 0; size <= bounds.max_size; ++size)
            for (const WeakComposition& gamma : weak_compositions(n, size))
                for (int l = 0; l <= bounds.max_lambda; ++l)
                    for (const Partition& lam : partitions(l, n))
                        for (const WeakComposition& delta : weak_compositions(n, size + l))
                            out.push_back({delta, gamma, lam, {}});
    parallel_for(out.size(), threads, [&](std::size_t i) {
        out[i].sides = consistency_sides(out[i].delta, out[i].gamma, out[i].lambda, form);
    });
    return out;
}

}  // namespace skylr
