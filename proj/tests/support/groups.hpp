#pragma once

#include "flk/galois.hpp"

#include <map>
#include <set>

namespace flk::testing {

// G = <N, t> with t x t^-1 = alpha(x) and t^p = c. Element (x, i) is x t^i,
// indexed i |N| + x.
inline FiniteGroup cyclic_extension(const FiniteGroup& n, const GroupMap& alpha, int c, int p) {
    const int m = n.size();
    std::vector<GroupMap> alpha_pow{identity_map(n)};
    for (int i = 1; i < p; ++i) alpha_pow.push_back(compose(alpha, alpha_pow.back()));
    std::vector<std::vector<int>> t(m * p, std::vector<int>(m * p));
    for (int i = 0; i < p; ++i)
        for (int x = 0; x < m; ++x)
            for (int j = 0; j < p; ++j)
                for (int y = 0; y < m; ++y) {
                    int z = n.mul(x, alpha_pow[i][y]);
                    int k = i + j;
                    if (k >= p) {
                        z = n.mul(z, c);
                        k -= p;
                    }
                    t[i * m + x][j * m + y] = k * m + z;
                }
    return FiniteGroup(std::move(t));
}

// Per element: order, conjugacy class size, number of square roots.
inline std::vector<std::tuple<int, int, int>> group_fingerprint(const FiniteGroup& g) {
    std::vector<int> class_size(g.size()), roots(g.size(), 0);
    for (const auto& cls : conjugacy_classes(g))
        for (int x : cls) class_size[x] = static_cast<int>(cls.size());
    for (int x = 0; x < g.size(); ++x) ++roots[g.mul(x, x)];
    std::vector<std::tuple<int, int, int>> f;
    for (int x = 0; x < g.size(); ++x) f.emplace_back(g.order(x), class_size[x], roots[x]);
    std::sort(f.begin(), f.end());
    return f;
}

// One group per isomorphism class for each order up to max_order. Every
// finite solvable group is a cyclic extension of prime degree of a smaller
// one, which covers all orders below 60.
inline std::map<int, std::vector<FiniteGroup>> all_small_groups(int max_order) {
    std::map<int, std::vector<FiniteGroup>> out;
    out[1].push_back(FiniteGroup::cyclic(1));
    for (int n = 2; n <= max_order; ++n) {
        std::vector<FiniteGroup>& found = out[n];
        std::vector<std::vector<std::tuple<int, int, int>>> prints;
        for (int p = 2; p <= n; ++p) {
            if (n % p) continue;
            bool prime = true;
            for (int d = 2; d * d <= p; ++d) prime = prime && p % d;
            if (!prime) continue;
            for (const auto& base : out[n / p]) {
                for (const auto& alpha : automorphisms(base)) {
                    GroupMap alpha_p = identity_map(base);
                    for (int i = 0; i < p; ++i) alpha_p = compose(alpha, alpha_p);
                    for (int c = 0; c < base.size(); ++c) {
                        if (alpha[c] != c) continue;
                        // alpha^p must be conjugation by c: x -> c x c^-1.
                        if (alpha_p != inner_automorphism(base, base.inv(c))) continue;
                        FiniteGroup g = cyclic_extension(base, alpha, c, p);
                        auto fp = group_fingerprint(g);
                        bool known = false;
                        for (size_t k = 0; k < found.size() && !known; ++k)
                            known = prints[k] == fp && find_isomorphism(g, found[k]).has_value();
                        if (!known) {
                            found.push_back(g);
                            prints.push_back(fp);
                        }
                    }
                }
            }
        }
    }
    return out;
}

// Number of groups of each order 1..24 up to isomorphism.
inline const std::vector<int>& known_group_counts() {
    static const std::vector<int> counts{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
    return counts;
}

// Twisted classes by listing each orbit {h^-1 x phi(h)} explicitly.
inline size_t twisted_class_oracle(const FiniteGroup& g, const GroupMap& phi) {
    std::set<std::set<int>> orbits;
    for (int x = 0; x < g.size(); ++x) {
        std::set<int> orbit;
        for (int h = 0; h < g.size(); ++h) orbit.insert(g.mul(g.mul(g.inv(h), x), phi[h]));
        orbits.insert(orbit);
    }
    return orbits.size();
}

inline FiniteGroup symmetric_group(int k) {
    std::vector<int> cycle(k), swap(k);
    for (int i = 0; i < k; ++i) cycle[i] = (i + 1) % k, swap[i] = i;
    if (k >= 2) std::swap(swap[0], swap[1]);
    return FiniteGroup::from_permutations({cycle, swap});
}

inline FiniteGroup alternating_group(int k) {
    std::vector<std::vector<int>> gens;
    for (int i = 2; i < k; ++i) {
        std::vector<int> p(k);
        for (int j = 0; j < k; ++j) p[j] = j;
        p[0] = 1, p[1] = i, p[i] = 0;
        gens.push_back(p);
    }
    if (gens.empty()) {
        std::vector<int> id(k);
        for (int j = 0; j < k; ++j) id[j] = j;
        gens.push_back(id);
    }
    return FiniteGroup::from_permutations(gens);
}

}  // namespace flk::testing
