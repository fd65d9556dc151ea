#include "flk/galois.hpp"

#include "flk/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace flk {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<char> in(g.size(), 0);
    std::vector<int> elems{g.identity()};
    in[g.identity()] = 1;
    for (size_t i = 0; i < elems.size(); ++i)
        for (int s : gens) {
            int y = g.mul(elems[i], s);
            if (!in[y]) {
                in[y] = 1;
                elems.push_back(y);
            }
        }
    return elems;
}

// Classes of x ~ h^-1 x phi(h) over the given elements.
H1Result twisted_classes(const FiniteGroup& g, const GroupMap& phi, const std::vector<char>& cocycle) {
    UnionFind uf(g.size());
    for (int x = 0; x < g.size(); ++x) {
        if (!cocycle[x]) continue;
        for (int h = 0; h < g.size(); ++h) uf.unite(x, g.mul(g.mul(g.inv(h), x), phi[h]));
    }
    H1Result r;
    for (int x = 0; x < g.size(); ++x) {
        if (!cocycle[x]) continue;
        ++r.cocycles;
        if (uf.find(x) == x) r.representatives.push_back(x);
    }
    r.count = r.representatives.size();
    return r;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
    const int n = size();
    if (n == 0) throw PreconditionError("group table is empty");
    if (n > kMaxGroupOrder)
        throw PreconditionError("group order " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroupOrder));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table_[i].size()) != n)
            throw PreconditionError("group table row " + std::to_string(i) + " has " +
                                    std::to_string(table_[i].size()) + " entries, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j)
            if (table_[i][j] < 0 || table_[i][j] >= n)
                throw PreconditionError("group table entry (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw PreconditionError("group table has no identity");
    inverse_.assign(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (table_[x][y] == identity_ && table_[y][x] == identity_) inverse_[x] = y;
    for (int x = 0; x < n; ++x)
        if (inverse_[x] < 0) throw PreconditionError("element " + std::to_string(x) + " has no inverse");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = table_[a][b];
            for (int c = 0; c < n; ++c)
                if (table_[ab][c] != table_[a][table_[b][c]])
                    throw PreconditionError("group table is not associative at (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")");
        }
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens) {
    size_t k = gens.empty() ? 0 : gens[0].size();
    for (const auto& p : gens) {
        if (p.size() != k) throw PreconditionError("permutations of different degrees");
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < k; ++i)
            if (sorted[i] != static_cast<int>(i)) throw PreconditionError("not a permutation");
    }
    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> index{{id, 0}};
    std::vector<std::vector<int>> elems{id};
    auto compose_perm = [&](const std::vector<int>& p, const std::vector<int>& q) {
        // Apply p first, then q.
        std::vector<int> r(k);
        for (size_t i = 0; i < k; ++i) r[i] = q[p[i]];
        return r;
    };
    for (size_t i = 0; i < elems.size(); ++i)
        for (const auto& s : gens) {
            auto y = compose_perm(elems[i], s);
            if (index.emplace(y, static_cast<int>(elems.size())).second) {
                elems.push_back(y);
                if (static_cast<int>(elems.size()) > kMaxGroupOrder)
                    throw PreconditionError("permutation group exceeds order " + std::to_string(kMaxGroupOrder));
            }
        }
    const size_t n = elems.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) t[a][b] = index.at(compose_perm(elems[a], elems[b]));
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw PreconditionError("cyclic group of order < 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

int FiniteGroup::pow(int a, long k) const {
    if (k < 0) return pow(inv(a), -k);
    int r = identity_;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

int FiniteGroup::order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int n = a.size(), m = b.size();
    std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
    for (int x = 0; x < n * m; ++x)
        for (int y = 0; y < n * m; ++y) t[x][y] = a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
    return FiniteGroup(std::move(t));
}

GroupMap identity_map(const FiniteGroup& g) {
    GroupMap m(g.size());
    std::iota(m.begin(), m.end(), 0);
    return m;
}

GroupMap inner_automorphism(const FiniteGroup& grp, int g) {
    if (g < 0 || g >= grp.size()) throw PreconditionError("element " + std::to_string(g) + " not in the group");
    GroupMap m(grp.size());
    for (int x = 0; x < grp.size(); ++x) m[x] = grp.mul(grp.mul(grp.inv(g), x), g);
    return m;
}

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, const GroupMap& f) {
    if (static_cast<int>(f.size()) != g.size()) return false;
    for (int x : f)
        if (x < 0 || x >= h.size()) return false;
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            if (f[g.mul(a, b)] != h.mul(f[a], f[b])) return false;
    return true;
}

void validate_automorphism(const FiniteGroup& g, const GroupMap& phi) {
    if (static_cast<int>(phi.size()) != g.size())
        throw PreconditionError("automorphism has " + std::to_string(phi.size()) + " images, expected " +
                                std::to_string(g.size()));
    std::vector<char> hit(g.size(), 0);
    for (int x : phi) {
        if (x < 0 || x >= g.size()) throw PreconditionError("automorphism image out of range");
        if (hit[x]) throw PreconditionError("automorphism is not bijective");
        hit[x] = 1;
    }
    if (!is_homomorphism(g, g, phi)) throw PreconditionError("automorphism is not a homomorphism");
}

int map_order(const GroupMap& phi) {
    GroupMap cur = phi;
    int k = 1;
    for (;;) {
        bool id = true;
        for (size_t i = 0; i < cur.size() && id; ++i) id = cur[i] == static_cast<int>(i);
        if (id) return k;
        cur = compose(phi, cur);
        ++k;
    }
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
    GroupMap r(inner.size());
    for (size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
    return r;
}

std::vector<int> generators(const FiniteGroup& g) {
    std::vector<int> by_order(g.size());
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](int a, int b) { return g.order(a) > g.order(b); });
    std::vector<int> gens;
    std::vector<char> in(g.size(), 0);
    in[g.identity()] = 1;
    for (int x : by_order) {
        if (in[x]) continue;
        gens.push_back(x);
        for (int y : subgroup_closure(g, gens)) in[y] = 1;
    }
    return gens;
}

std::optional<GroupMap> extend_homomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
                                            const std::vector<int>& images) {
    GroupMap f(g.size(), -1);
    f[g.identity()] = h.identity();
    std::vector<int> queue{g.identity()};
    for (size_t i = 0; i < queue.size(); ++i) {
        const int x = queue[i];
        for (size_t k = 0; k < gens.size(); ++k) {
            const int y = g.mul(x, gens[k]);
            const int fy = h.mul(f[x], images[k]);
            if (f[y] < 0) {
                f[y] = fy;
                queue.push_back(y);
            } else if (f[y] != fy) {
                return std::nullopt;
            }
        }
    }
    if (static_cast<int>(queue.size()) != g.size()) throw PreconditionError("elements do not generate the group");
    if (!is_homomorphism(g, h, f)) return std::nullopt;
    return f;
}

namespace {

// Calls visit on every bijective homomorphism g -> h; stops when it returns false.
template <class Visit>
void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h, Visit visit) {
    if (g.size() != h.size()) return;
    const auto gens = generators(g);
    std::vector<std::vector<int>> choices(gens.size());
    for (size_t k = 0; k < gens.size(); ++k)
        for (int y = 0; y < h.size(); ++y)
            if (h.order(y) == g.order(gens[k])) choices[k].push_back(y);
    std::vector<int> images(gens.size());
    std::vector<size_t> idx(gens.size(), 0);
    for (const auto& c : choices)
        if (c.empty()) return;
    for (;;) {
        for (size_t k = 0; k < gens.size(); ++k) images[k] = choices[k][idx[k]];
        if (auto f = extend_homomorphism(g, h, gens, images)) {
            std::vector<char> hit(h.size(), 0);
            bool bijective = true;
            for (int x : *f) {
                if (hit[x]) bijective = false;
                hit[x] = 1;
            }
            if (bijective && !visit(*f)) return;
        }
        size_t k = 0;
        while (k < gens.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == gens.size()) return;
    }
}

}  // namespace

std::vector<GroupMap> automorphisms(const FiniteGroup& g) {
    std::vector<GroupMap> out;
    for_each_isomorphism(g, g, [&](const GroupMap& f) {
        out.push_back(f);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<GroupMap> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
    std::optional<GroupMap> out;
    for_each_isomorphism(g, h, [&](const GroupMap& f) {
        out = f;
        return false;
    });
    return out;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<char> seen(g.size(), 0);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < g.size(); ++x) {
        if (seen[x]) continue;
        std::set<int> cls;
        for (int h = 0; h < g.size(); ++h) cls.insert(g.mul(g.mul(g.inv(h), x), h));
        for (int y : cls) seen[y] = 1;
        out.emplace_back(cls.begin(), cls.end());
    }
    return out;
}

H1Result h1_bruteforce(const FiniteGroup& g, const GroupMap& phi) {
    validate_automorphism(g, phi);
    const long n = static_cast<long>(g.size()) * map_order(phi);
    std::vector<char> cocycle(g.size(), 0);
    for (int x = 0; x < g.size(); ++x) {
        // x phi(x) ... phi^(n-1)(x)
        int acc = g.identity(), cur = x;
        for (long k = 0; k < n; ++k) {
            acc = g.mul(acc, cur);
            cur = phi[cur];
        }
        cocycle[x] = acc == g.identity();
    }
    H1Result r = twisted_classes(g, phi, cocycle);
    r.exponent = n;
    return r;
}

H1Result h1_inner(const FiniteGroup& grp, int g) {
    if (g < 0 || g >= grp.size()) throw PreconditionError("element " + std::to_string(g) + " not in the group");
    H1Result r;
    for (const auto& cls : conjugacy_classes(grp)) r.representatives.push_back(grp.mul(cls.front(), g));
    r.count = r.representatives.size();
    r.cocycles = grp.size();
    r.exponent = static_cast<long>(grp.size()) * grp.order(g);
    return r;
}

ReductionReport h1_reduction_check(const FiniteGroup& g, const GroupMap& phi, const FiniteGroup& h,
                                   const GroupMap& psi, const GroupMap& f) {
    validate_automorphism(g, phi);
    validate_automorphism(h, psi);
    if (!is_homomorphism(g, h, f)) throw PreconditionError("f is not a homomorphism");
    for (int x = 0; x < g.size(); ++x)
        if (f[phi[x]] != psi[f[x]])
            throw PreconditionError("f is not equivariant at element " + std::to_string(x));
    ReductionReport rep;
    H1Result src = h1_bruteforce(g, phi), dst = h1_bruteforce(h, psi);
    rep.source_classes = src.count;
    rep.target_classes = dst.count;
    std::vector<char> image(h.size(), 0);
    for (int x = 0; x < g.size(); ++x) {
        image[f[x]] = 1;
        if (f[x] == h.identity()) ++rep.kernel;
    }
    // Left cosets w f(G); y runs over inverses of their smallest elements.
    std::vector<char> covered(h.size(), 0);
    std::vector<int> ys;
    for (int w = 0; w < h.size(); ++w) {
        if (covered[w]) continue;
        for (int s = 0; s < h.size(); ++s)
            if (image[s]) covered[h.mul(w, s)] = 1;
        ys.push_back(h.inv(w));
    }
    rep.index = ys.size();
    std::set<int> predicted;
    for (int y : ys)
        for (int x : dst.representatives) predicted.insert(h.mul(h.mul(y, x), h.inv(psi[y])));
    rep.predicted.assign(predicted.begin(), predicted.end());
    rep.passes = true;
    for (int x : src.representatives) {
        int hit = -1;
        for (int z = 0; z < g.size() && hit < 0; ++z) {
            int moved = f[g.mul(g.mul(g.inv(z), x), phi[z])];
            if (predicted.count(moved)) hit = moved;
        }
        rep.cover.emplace_back(x, hit);
        if (hit < 0) rep.passes = false;
    }
    return rep;
}

DescentDegree descent_degree(unsigned long bound) {
    if (bound < 1) throw PreconditionError("bound must be at least 1");
    if (bound > kMaxDescentBound)
        throw PreconditionError("bound " + std::to_string(bound) + " exceeds " + std::to_string(kMaxDescentBound));
    DescentDegree d;
    d.cutoff = 2 * bound * bound;
    // Totient sieve up to the cutoff.
    std::vector<unsigned long> phi(d.cutoff + 1);
    std::iota(phi.begin(), phi.end(), 0UL);
    for (unsigned long q = 2; q <= d.cutoff; ++q)
        if (phi[q] == q)
            for (unsigned long m = q; m <= d.cutoff; m += q) phi[m] -= phi[m] / q;
    d.value = 1;
    for (unsigned long m = 1; m <= d.cutoff; ++m)
        if (phi[m] <= bound) {
            d.moduli.push_back(m);
            d.value = lcm(d.value, Int(m));
        }
    return d;
}

}  // namespace flk
