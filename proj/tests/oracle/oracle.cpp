#include "oracle/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

void for_each_word(int len, int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> w(static_cast<std::size_t>(len), 1);
    if (len > 0 && n < 1) return;
    while (true) {
        visit(w);
        int i = len - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == n) w[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) return;
        ++w[static_cast<std::size_t>(i)];
    }
}

Grid make_grid(const std::vector<int>& delta, const std::vector<int>& gamma, const std::vector<int>& basement,
               const std::vector<int>& data) {
    Grid g(delta.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < delta.size(); ++i) {
        g[i].push_back(basement[i]);
        for (int k = 1; k <= delta[i]; ++k) g[i].push_back(k <= gamma[i] ? basement[i] : data[next++]);
    }
    return g;
}

namespace {

int len(const Grid& g, std::size_t i) { return static_cast<int>(g[i].size()) - 1; }

bool coinv(int a, int b, int c) { return a <= b && b <= c; }

}  // namespace

bool is_ssk(const Grid& g) {
    for (const auto& row : g)
        for (std::size_t k = 1; k < row.size(); ++k)
            if (row[k] > row[k - 1]) return false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const int li = len(g, i), lj = len(g, j);
            if (li >= lj) {
                // upper row at least as long: a above b, c left of a
                for (int k = 1; k <= lj; ++k)
                    if (coinv(g[i][k], g[j][k], g[i][k - 1])) return false;
            } else {
                // lower row longer: a right of c in the lower row, b above c
                for (int k = 0; k <= li; ++k)
                    if (coinv(g[j][k + 1], g[i][k], g[j][k])) return false;
            }
        }
    }
    return true;
}

std::vector<Grid> brute_ssk(const std::vector<int>& delta, const std::vector<int>& gamma,
                            const std::vector<int>& basement, int n) {
    int cells = 0;
    for (std::size_t i = 0; i < delta.size(); ++i) cells += delta[i] - gamma[i];
    std::vector<Grid> out;
    for_each_word(cells, n, [&](const std::vector<int>& w) {
        Grid g = make_grid(delta, gamma, basement, w);
        if (is_ssk(g)) out.push_back(std::move(g));
    });
    return out;
}

std::vector<int> column_word(const Grid& g, const std::vector<int>& gamma) {
    int width = 0;
    for (std::size_t i = 0; i < g.size(); ++i) width = std::max(width, len(g, i));
    std::vector<int> w;
    for (int k = width; k >= 1; --k)
        for (std::size_t i = 0; i < g.size(); ++i)
            if (k <= len(g, i) && k > gamma[i]) w.push_back(g[i][static_cast<std::size_t>(k)]);
    return w;
}

bool contre_lattice(const std::vector<int>& w) {
    int r = 0;
    for (int x : w) r = std::max(r, x);
    std::vector<int> seen(static_cast<std::size_t>(r) + 2, 0);
    for (int x : w) {
        ++seen[static_cast<std::size_t>(x)];
        for (int j = 2; j <= r; ++j)
            if (seen[static_cast<std::size_t>(j)] < seen[static_cast<std::size_t>(j - 1)]) return false;
    }
    return true;
}

Poly weight(const Grid& g, const std::vector<int>& gamma, int n) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (int k = gamma[i] + 1; k <= len(g, i); ++k) ++e[static_cast<std::size_t>(g[i][static_cast<std::size_t>(k)] - 1)];
    return {{e, 1}};
}

Poly add(const Poly& p, const Poly& q) {
    Poly r = p;
    for (const auto& [e, c] : q)
        if ((r[e] += c) == 0) r.erase(e);
    return r;
}

Poly mul(const Poly& p, const Poly& q) {
    Poly r;
    for (const auto& [e1, c1] : p)
        for (const auto& [e2, c2] : q) {
            std::vector<int> e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            if ((r[e] += c1 * c2) == 0) r.erase(e);
        }
    return r;
}

Poly schur(const std::vector<int>& lambda, int n) {
    const int cells = std::accumulate(lambda.begin(), lambda.end(), 0);
    Poly out;
    for_each_word(cells, n, [&](const std::vector<int>& w) {
        std::vector<std::vector<int>> t;
        std::size_t next = 0;
        for (int p : lambda) {
            t.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(next), w.begin() + static_cast<std::ptrdiff_t>(next + p));
            next += static_cast<std::size_t>(p);
        }
        for (std::size_t r = 0; r < t.size(); ++r)
            for (std::size_t c = 0; c < t[r].size(); ++c) {
                if (c > 0 && t[r][c] < t[r][c - 1]) return;
                if (r > 0 && t[r][c] <= t[r - 1][c]) return;
            }
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int x : w) ++e[static_cast<std::size_t>(x - 1)];
        ++out[e];
    });
    return out;
}

Poly atom(const std::vector<int>& gamma) {
    const int n = static_cast<int>(gamma.size());
    std::vector<int> b(gamma.size()), zero(gamma.size(), 0);
    std::iota(b.begin(), b.end(), 1);
    Poly out;
    for (const Grid& g : brute_ssk(gamma, zero, b, n)) out = add(out, weight(g, zero, n));
    return out;
}

Poly character(const std::vector<int>& gamma) {
    const int n = static_cast<int>(gamma.size());
    std::vector<int> shape(gamma.rbegin(), gamma.rend()), b(gamma.size()), zero(gamma.size(), 0);
    for (int k = 1; k <= n; ++k) b[static_cast<std::size_t>(k - 1)] = n - k + 1;
    Poly out;
    for (const Grid& g : brute_ssk(shape, zero, b, n)) out = add(out, weight(g, zero, n));
    return out;
}

bool bruhat_leq(const std::vector<int>& u, const std::vector<int>& v) {
    for (std::size_t i = 1; i <= u.size(); ++i) {
        std::vector<int> a(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<int> b(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t k = 0; k < i; ++k)
            if (a[k] > b[k]) return false;
    }
    return true;
}

std::vector<int> sorting_perm(const std::vector<int>& g) {
    // Track where each original position ends up while bubble sorting into
    // descending order; only strict inversions are swapped.
    std::vector<int> vals = g, where(g.size());
    std::iota(where.begin(), where.end(), 0);
    for (std::size_t pass = 0; pass < vals.size(); ++pass)
        for (std::size_t k = 0; k + 1 < vals.size(); ++k)
            if (vals[k] < vals[k + 1]) {
                std::swap(vals[k], vals[k + 1]);
                std::swap(where[k], where[k + 1]);
            }
    std::vector<int> pi(g.size());
    for (std::size_t r = 0; r < where.size(); ++r) pi[static_cast<std::size_t>(where[r])] = static_cast<int>(r) + 1;
    return pi;
}

std::int64_t lr_classical(const std::vector<int>& mu, const std::vector<int>& lambda, const std::vector<int>& nu) {
    std::vector<int> in(nu.size(), 0);
    for (std::size_t r = 0; r < mu.size(); ++r) {
        if (r >= nu.size() || mu[r] > nu[r]) return 0;
        in[r] = mu[r];
    }
    int cells = 0;
    for (std::size_t r = 0; r < nu.size(); ++r) cells += nu[r] - in[r];
    if (cells != std::accumulate(lambda.begin(), lambda.end(), 0)) return 0;
    const int n = static_cast<int>(lambda.size());
    std::int64_t count = 0;
    for_each_word(cells, std::max(n, 1), [&](const std::vector<int>& w) {
        if (cells > 0 && n == 0) return;
        std::vector<std::vector<int>> t(nu.size());
        std::size_t next = 0;
        for (std::size_t r = 0; r < nu.size(); ++r)
            for (int c = 0; c < nu[r]; ++c) t[r].push_back(c < in[r] ? 0 : w[next++]);
        for (std::size_t r = 0; r < t.size(); ++r)
            for (std::size_t c = static_cast<std::size_t>(in[r]); c < t[r].size(); ++c) {
                if (c > static_cast<std::size_t>(in[r]) && t[r][c] < t[r][c - 1]) return;
                if (r > 0 && c < t[r - 1].size() && c >= static_cast<std::size_t>(in[r - 1]) && t[r][c] <= t[r - 1][c])
                    return;
            }
        std::vector<int> seen(static_cast<std::size_t>(n) + 2, 0);
        for (std::size_t r = 0; r < t.size(); ++r)
            for (std::size_t c = t[r].size(); c-- > static_cast<std::size_t>(in[r]);) {
                const int x = t[r][c];
                ++seen[static_cast<std::size_t>(x)];
                if (x > 1 && seen[static_cast<std::size_t>(x)] > seen[static_cast<std::size_t>(x - 1)]) return;
            }
        for (int j = 1; j <= n; ++j)
            if (seen[static_cast<std::size_t>(j)] != lambda[static_cast<std::size_t>(j - 1)]) return;
        ++count;
    });
    return count;
}

std::vector<std::vector<std::vector<int>>> brute_ct(const std::vector<int>& lambda, const std::vector<int>& mu, int n) {
    std::vector<int> in(lambda.size(), 0);
    for (std::size_t r = 0; r < mu.size(); ++r) in[r] = mu[r];
    int cells = 0;
    for (std::size_t r = 0; r < lambda.size(); ++r) cells += lambda[r] - in[r];
    std::vector<std::vector<std::vector<int>>> out;
    for_each_word(cells, n, [&](const std::vector<int>& w) {
        std::vector<std::vector<int>> t(lambda.size());
        std::size_t next = 0;
        for (std::size_t r = 0; r < lambda.size(); ++r)
            for (int c = 0; c < lambda[r]; ++c) t[r].push_back(c < in[r] ? 0 : w[next++]);
        for (std::size_t r = 0; r < t.size(); ++r)
            for (std::size_t c = static_cast<std::size_t>(in[r]); c < t[r].size(); ++c) {
                if (c > static_cast<std::size_t>(in[r]) && t[r][c] > t[r][c - 1]) return;
                if (r > 0 && c < t[r - 1].size() && c >= static_cast<std::size_t>(in[r - 1]) && t[r][c] >= t[r - 1][c])
                    return;
            }
        std::vector<std::vector<int>> rows(lambda.size());
        for (std::size_t r = 0; r < t.size(); ++r) rows[r].assign(t[r].begin() + in[r], t[r].end());
        out.push_back(std::move(rows));
    });
    return out;
}

}  // namespace oracle
