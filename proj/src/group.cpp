#include "hforge/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hforge {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<GroupIndex>> table)
    : labels_(std::move(labels))
{
    const std::size_t n = labels_.size();
    if (n == 0) throw InputError("a group needs at least one element");
    {
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw InputError("duplicate group element labels");
        }
    }
    if (table.size() != n) throw InputError("Cayley table has the wrong number of rows");
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) throw InputError("Cayley table row has the wrong length");
        for (std::size_t b = 0; b < n; ++b) {
            if (table[a][b] >= n) throw InputError("Cayley table entry out of range");
            table_[a * n + b] = table[a][b];
        }
    }
    // Latin square
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<bool> row(n), col(n);
        for (std::size_t b = 0; b < n; ++b) {
            row[table_[a * n + b]] = true;
            col[table_[b * n + a]] = true;
        }
        if (std::count(row.begin(), row.end(), false) || std::count(col.begin(), col.end(), false)) {
            throw MathError("Cayley table is not a Latin square");
        }
    }
    // identity
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e * n + a] == a && table_[a * n + e] == a;
        if (ok) {
            identity_ = static_cast<GroupIndex>(e);
            found = true;
        }
    }
    if (!found) throw MathError("Cayley table has no identity element");
    inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        bool ok = false;
        for (std::size_t b = 0; b < n; ++b) {
            if (table_[a * n + b] == identity_) {
                if (table_[b * n + a] != identity_) throw MathError("left and right inverses differ");
                inverse_[a] = static_cast<GroupIndex>(b);
                ok = true;
                break;
            }
        }
        if (!ok) throw MathError("element without inverse");
    }
    if (n <= 64) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (table_[table_[a * n + b] * n + c] != table_[a * n + table_[b * n + c]]) {
                        throw MathError("Cayley table is not associative at (" + labels_[a] + "," + labels_[b] +
                                        "," + labels_[c] + ")");
                    }
    }
}

GroupIndex FiniteGroup::pow(GroupIndex a, long long e) const
{
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    GroupIndex r = identity_;
    for (long long i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

std::size_t FiniteGroup::element_order(GroupIndex a) const
{
    std::size_t k = 1;
    GroupIndex x = a;
    while (x != identity_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

GroupIndex FiniteGroup::index_of(const std::string& label) const
{
    auto f = find(label);
    if (!f) throw InputError("unknown group element '" + label + "'");
    return *f;
}

std::optional<GroupIndex> FiniteGroup::find(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<GroupIndex>(it - labels_.begin());
}

bool FiniteGroup::is_abelian() const
{
    const std::size_t n = order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (table_[a * n + b] != table_[b * n + a]) return false;
    return true;
}

std::optional<GroupIndex> FiniteGroup::cyclic_generator() const
{
    for (GroupIndex a = 0; a < order(); ++a) {
        if (element_order(a) == order()) return a;
    }
    return std::nullopt;
}

std::size_t FiniteGroup::exponent() const
{
    std::size_t e = 1;
    for (GroupIndex a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
    return e;
}

const std::vector<std::vector<GroupIndex>> FiniteGroup::table_rows() const
{
    const std::size_t n = order();
    std::vector<std::vector<GroupIndex>> rows(n, std::vector<GroupIndex>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) rows[a][b] = table_[a * n + b];
    return rows;
}

FiniteGroup make_abelian(const std::vector<long long>& invariants)
{
    if (invariants.empty()) throw InputError("abelian group needs at least one invariant");
    for (long long d : invariants) {
        if (d < 2) throw InputError("abelian invariants must be >= 2");
    }
    std::size_t n = 1;
    for (long long d : invariants) n *= static_cast<std::size_t>(d);
    const std::size_t r = invariants.size();
    auto digits = [&](std::size_t idx) {
        std::vector<long long> e(r);
        for (std::size_t i = r; i-- > 0;) {
            e[i] = static_cast<long long>(idx % static_cast<std::size_t>(invariants[i]));
            idx /= static_cast<std::size_t>(invariants[i]);
        }
        return e;
    };
    auto index = [&](const std::vector<long long>& e) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < r; ++i) idx = idx * static_cast<std::size_t>(invariants[i]) + static_cast<std::size_t>(e[i]);
        return static_cast<GroupIndex>(idx);
    };
    std::vector<std::string> labels(n);
    std::vector<std::vector<GroupIndex>> table(n, std::vector<GroupIndex>(n));
    for (std::size_t a = 0; a < n; ++a) {
        const auto ea = digits(a);
        std::string s;
        for (std::size_t i = 0; i < r; ++i) {
            if (i) s += ",";
            s += std::to_string(ea[i]);
        }
        labels[a] = s;
        for (std::size_t b = 0; b < n; ++b) {
            auto eb = digits(b);
            for (std::size_t i = 0; i < r; ++i) eb[i] = (ea[i] + eb[i]) % invariants[i];
            table[a][b] = index(eb);
        }
    }
    FiniteGroup g(std::move(labels), std::move(table));
    g.invariants_ = invariants;
    return g;
}

FiniteGroup semidirect_inversion(const FiniteGroup& g)
{
    if (!g.is_abelian()) throw MathError("semidirect_inversion needs an abelian group");
    const std::size_t n = g.order();
    std::vector<std::string> labels(2 * n);
    std::vector<std::vector<GroupIndex>> table(2 * n, std::vector<GroupIndex>(2 * n));
    for (std::size_t e = 0; e < 2; ++e)
        for (GroupIndex s = 0; s < n; ++s) labels[e * n + s] = std::to_string(e) + ":" + g.label(s);
    for (std::size_t e1 = 0; e1 < 2; ++e1)
        for (GroupIndex s1 = 0; s1 < n; ++s1)
            for (std::size_t e2 = 0; e2 < 2; ++e2)
                for (GroupIndex s2 = 0; s2 < n; ++s2) {
                    const GroupIndex left = e2 == 1 ? g.inv(s1) : s1;
                    table[e1 * n + s1][e2 * n + s2] =
                        static_cast<GroupIndex>(((e1 + e2) % 2) * n + g.mul(left, s2));
                }
    return FiniteGroup(std::move(labels), std::move(table));
}

GroupIndex CentralExtensionGroup::pair_index(GroupIndex sigma, long long i) const
{
    const long long r = ((i % m) + m) % m;
    return static_cast<GroupIndex>(sigma * static_cast<GroupIndex>(m) + static_cast<GroupIndex>(r));
}

CentralExtensionGroup central_extension(const FiniteGroup& g, const std::vector<long long>& c_in, long long m)
{
    const std::size_t n = g.order();
    if (m < 1) throw MathError("central extension needs m >= 1");
    if (c_in.size() != n * n) throw InputError("exponent cocycle has the wrong size");
    std::vector<long long> c(c_in.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ((c_in[i] % m) + m) % m;
    const GroupIndex e = g.identity();
    for (GroupIndex s = 0; s < n; ++s) {
        if (c[s * n + e] != 0 || c[e * n + s] != 0) {
            throw MathError("exponent cocycle is not normalised at " + g.label(s));
        }
    }
    for (GroupIndex a = 0; a < n; ++a)
        for (GroupIndex b = 0; b < n; ++b)
            for (GroupIndex d = 0; d < n; ++d) {
                const long long lhs = c[a * n + b] + c[g.mul(a, b) * n + d];
                const long long rhs = c[a * n + g.mul(b, d)] + c[b * n + d];
                if ((lhs - rhs) % m != 0) {
                    throw MathError("not an additive 2-cocycle at (" + g.label(a) + "," + g.label(b) + "," +
                                    g.label(d) + ")");
                }
            }
    const std::size_t mm = static_cast<std::size_t>(m);
    std::vector<std::string> labels(n * mm);
    std::vector<std::vector<GroupIndex>> table(n * mm, std::vector<GroupIndex>(n * mm));
    for (GroupIndex s = 0; s < n; ++s)
        for (std::size_t i = 0; i < mm; ++i) labels[s * mm + i] = g.label(s) + "#" + std::to_string(i);
    for (GroupIndex s = 0; s < n; ++s)
        for (std::size_t i = 0; i < mm; ++i)
            for (GroupIndex t = 0; t < n; ++t)
                for (std::size_t j = 0; j < mm; ++j) {
                    const long long k = (static_cast<long long>(i + j) + c[s * n + t]) % m;
                    table[s * mm + i][t * mm + j] = static_cast<GroupIndex>(g.mul(s, t) * mm + static_cast<std::size_t>(k));
                }
    CentralExtensionGroup out{FiniteGroup(std::move(labels), std::move(table)), {}, {}, m};
    out.projection.resize(n * mm);
    for (GroupIndex s = 0; s < n; ++s)
        for (std::size_t i = 0; i < mm; ++i) out.projection[s * mm + i] = s;
    for (std::size_t i = 0; i < mm; ++i) out.kernel.push_back(static_cast<GroupIndex>(e * mm + i));
    return out;
}

bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<GroupIndex>& map)
{
    if (a.order() != b.order() || map.size() != a.order()) return false;
    std::vector<bool> hit(b.order());
    for (GroupIndex x : map) {
        if (x >= b.order() || hit[x]) return false;
        hit[x] = true;
    }
    for (GroupIndex x = 0; x < a.order(); ++x)
        for (GroupIndex y = 0; y < a.order(); ++y)
            if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
    return true;
}

namespace {

// Greedy generating set: add elements not yet in the generated subgroup.
std::vector<GroupIndex> generating_set(const FiniteGroup& g)
{
    std::vector<GroupIndex> gens;
    std::vector<bool> in(g.order());
    in[g.identity()] = true;
    std::size_t count = 1;
    // prefer high-order elements first for a short list
    std::vector<GroupIndex> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](GroupIndex x, GroupIndex y) { return g.element_order(x) > g.element_order(y); });
    for (GroupIndex cand : order) {
        if (in[cand]) continue;
        gens.push_back(cand);
        // closure
        std::vector<GroupIndex> frontier;
        for (GroupIndex x = 0; x < g.order(); ++x)
            if (in[x]) frontier.push_back(x);
        while (!frontier.empty()) {
            std::vector<GroupIndex> next;
            for (GroupIndex x : frontier)
                for (GroupIndex s : gens) {
                    GroupIndex y = g.mul(x, s);
                    if (!in[y]) {
                        in[y] = true;
                        ++count;
                        next.push_back(y);
                    }
                }
            frontier = std::move(next);
        }
        if (count == g.order()) break;
    }
    return gens;
}

// Extend generator images to a full map by BFS over words; nullopt on conflict.
std::optional<std::vector<GroupIndex>> extend(const FiniteGroup& a, const FiniteGroup& b,
                                              const std::vector<GroupIndex>& gens,
                                              const std::vector<GroupIndex>& images)
{
    constexpr GroupIndex unset = static_cast<GroupIndex>(-1);
    std::vector<GroupIndex> map(a.order(), unset);
    map[a.identity()] = b.identity();
    std::vector<GroupIndex> frontier{a.identity()};
    while (!frontier.empty()) {
        std::vector<GroupIndex> next;
        for (GroupIndex x : frontier)
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const GroupIndex y = a.mul(x, gens[k]);
                const GroupIndex img = b.mul(map[x], images[k]);
                if (map[y] == unset) {
                    map[y] = img;
                    next.push_back(y);
                } else if (map[y] != img) {
                    return std::nullopt;
                }
            }
        frontier = std::move(next);
    }
    return map;
}

}  // namespace

std::optional<std::vector<GroupIndex>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b)
{
    if (a.order() != b.order()) return std::nullopt;
    // order statistics must match
    auto stats = [](const FiniteGroup& g) {
        std::vector<std::size_t> s;
        for (GroupIndex x = 0; x < g.order(); ++x) s.push_back(g.element_order(x));
        std::sort(s.begin(), s.end());
        return s;
    };
    if (stats(a) != stats(b)) return std::nullopt;
    const auto gens = generating_set(a);
    std::vector<std::vector<GroupIndex>> candidates(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (GroupIndex y = 0; y < b.order(); ++y)
            if (b.element_order(y) == a.element_order(gens[k])) candidates[k].push_back(y);
    std::vector<GroupIndex> images(gens.size());
    std::optional<std::vector<GroupIndex>> result;
    std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
        if (k == gens.size()) {
            auto map = extend(a, b, gens, images);
            if (map && is_isomorphism(a, b, *map)) {
                result = std::move(map);
                return true;
            }
            return false;
        }
        for (GroupIndex y : candidates[k]) {
            images[k] = y;
            if (search(k + 1)) return true;
        }
        return false;
    };
    search(0);
    return result;
}

}  // namespace hforge
