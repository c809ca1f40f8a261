#include <orbitcalc/special.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <orbitcalc/errors.hpp>
#include <orbitcalc/schubert.hpp>

namespace orbitcalc
{

VanishingSequence complementary(const VanishingSequence &seq, int d)
{
    seq.check_fits(seq.rank(), d);
    std::vector<int> out;
    for (auto it = seq.orders().rbegin(); it != seq.orders().rend(); ++it) {
        out.push_back(d - *it);
    }
    return VanishingSequence(std::move(out));
}

bool TreeReport::has(Failure f) const
{
    return std::any_of(failures.begin(), failures.end(), [&](const auto &x) { return x.first == f; });
}

std::string to_string(TreeReport::Failure f)
{
    switch (f) {
        case TreeReport::Failure::unknown_vertex:
            return "unknown vertex";
        case TreeReport::Failure::not_a_tree:
            return "not a tree";
        case TreeReport::Failure::bad_label:
            return "bad label";
        case TreeReport::Failure::complementarity:
            return "complementarity";
        case TreeReport::Failure::weight:
            return "weight";
        case TreeReport::Failure::nonexistent:
            return "nonexistent vertex profile";
    }
    return "unknown";
}

namespace
{

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

// Labels of all half-edges at each vertex, in vertex order.
std::vector<std::vector<VanishingSequence>> vertex_labels(const LabelledTree &tree,
                                                          const std::map<std::string, std::size_t> &index)
{
    std::vector<std::vector<VanishingSequence>> out(tree.vertices.size());
    for (const auto &e : tree.edges) {
        out[index.at(e.u)].push_back(e.label_u);
        out[index.at(e.v)].push_back(e.label_v);
    }
    for (const auto &h : tree.dangling) {
        out[index.at(h.vertex)].push_back(h.label);
    }
    return out;
}

std::vector<VanishingSequence> drop_unramified(std::vector<VanishingSequence> labels)
{
    std::erase_if(labels, [](const VanishingSequence &s) { return s.is_generic(); });
    return labels;
}

Integer predegree_of(const std::vector<long> &weights)
{
    std::vector<int> positive;
    for (long w : weights) {
        if (w > 0) {
            positive.push_back(static_cast<int>(w));
        }
    }
    return predegree(DivisorMultiplicities(std::move(positive)));
}

} // namespace

TreeReport validate_tree(const LabelledTree &tree)
{
    using Failure = TreeReport::Failure;
    TreeReport report;
    auto fail = [&](Failure f, std::string what) { report.failures.emplace_back(f, std::move(what)); };

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
        if (!index.emplace(tree.vertices[i], i).second) {
            fail(Failure::not_a_tree, "duplicate vertex '" + tree.vertices[i] + "'");
        }
    }
    if (tree.vertices.empty()) {
        fail(Failure::not_a_tree, "tree has no vertices");
    }
    for (const auto &e : tree.edges) {
        for (const auto *name : {&e.u, &e.v}) {
            if (!index.contains(*name)) {
                fail(Failure::unknown_vertex, "edge refers to unknown vertex '" + *name + "'");
            }
        }
    }
    for (const auto &h : tree.dangling) {
        if (!index.contains(h.vertex)) {
            fail(Failure::unknown_vertex, "dangling edge refers to unknown vertex '" + h.vertex + "'");
        }
    }
    if (!report.ok()) {
        return report;
    }

    if (tree.edges.size() + 1 != tree.vertices.size()) {
        fail(Failure::not_a_tree, std::to_string(tree.vertices.size()) + " vertices need "
                                      + std::to_string(tree.vertices.size() - 1) + " edges, got "
                                      + std::to_string(tree.edges.size()));
    }
    std::vector<std::size_t> parent(tree.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto &e : tree.edges) {
        const std::size_t a = find_root(parent, index.at(e.u));
        const std::size_t b = find_root(parent, index.at(e.v));
        if (a == b) {
            fail(Failure::not_a_tree, "edge " + e.u + "-" + e.v + " closes a cycle");
        }
        parent[a] = b;
    }

    bool labels_ok = true;
    auto check_label = [&](const VanishingSequence &s, const std::string &where) {
        try {
            s.check_fits(tree.r, tree.d);
        } catch (const InvalidSequence &ex) {
            labels_ok = false;
            fail(Failure::bad_label, where + ": " + ex.what());
        }
    };
    for (const auto &e : tree.edges) {
        check_label(e.label_u, "edge " + e.u + "-" + e.v);
        check_label(e.label_v, "edge " + e.u + "-" + e.v);
    }
    for (const auto &h : tree.dangling) {
        check_label(h.label, "dangling edge at " + h.vertex);
    }
    if (!labels_ok) {
        return report;
    }

    for (const auto &e : tree.edges) {
        bool complementary_pair = true;
        for (int i = 0; i <= tree.r; ++i) {
            if (e.label_u[static_cast<std::size_t>(i)] + e.label_v[static_cast<std::size_t>(tree.r - i)] != tree.d) {
                complementary_pair = false;
            }
        }
        if (!complementary_pair) {
            fail(Failure::complementarity, "edge " + e.u + "-" + e.v + ": labels " + to_string(e.label_u)
                                               + " and " + to_string(e.label_v) + " are not complementary");
        }
    }

    const int expected = (tree.r + 1) * (tree.d - tree.r);
    const auto labels = vertex_labels(tree, index);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int w = 0;
        for (const auto &s : labels[i]) {
            w += s.weight();
        }
        if (w != expected) {
            fail(Failure::weight, "vertex '" + tree.vertices[i] + "' has weight " + std::to_string(w)
                                      + ", expected " + std::to_string(expected));
            continue;
        }
        const RamificationProfile profile(tree.r, tree.d, drop_unramified(labels[i]));
        if (!profile_exists(profile)) {
            fail(Failure::nonexistent, "vertex '" + tree.vertices[i] + "': no linear series with profile "
                                           + to_string(profile));
        }
    }
    return report;
}

std::string to_string(const Relation &rel)
{
    std::string out = "WOrb(" + to_string(rel.lhs) + ") =";
    std::vector<std::pair<const RamificationProfile *, int>> grouped;
    for (const auto &p : rel.rhs) {
        auto it = std::find_if(grouped.begin(), grouped.end(), [&](const auto &g) { return *g.first == p; });
        if (it == grouped.end()) {
            grouped.emplace_back(&p, 1);
        } else {
            ++it->second;
        }
    }
    for (std::size_t i = 0; i < grouped.size(); ++i) {
        out += i == 0 ? " " : " + ";
        if (grouped[i].second > 1) {
            out += std::to_string(grouped[i].second) + "*";
        }
        out += "WOrb(" + to_string(*grouped[i].first) + ")";
    }
    if (grouped.empty()) {
        out += " 0";
    }
    return out;
}

Relation decompose(const LabelledTree &tree)
{
    const TreeReport report = validate_tree(tree);
    if (!report.ok()) {
        const auto &[kind, what] = report.failures.front();
        throw InvalidTree(to_string(kind) + " failure: " + what);
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
        index.emplace(tree.vertices[i], i);
    }
    std::vector<VanishingSequence> outer;
    for (const auto &h : tree.dangling) {
        outer.push_back(h.label);
    }
    Relation rel{tree.r, tree.d, RamificationProfile(tree.r, tree.d, drop_unramified(std::move(outer))), {}};
    for (auto &labels : vertex_labels(tree, index)) {
        rel.rhs.emplace_back(tree.r, tree.d, drop_unramified(std::move(labels)));
    }
    return rel;
}

RelationCheck verify(const Relation &rel, OrbitClassCalculator &calc)
{
    Poly lhs = calc.weighted_orbit_class(rel.lhs).payload;
    Poly rhs(lhs.context());
    for (const auto &p : rel.rhs) {
        rhs += calc.weighted_orbit_class(p).payload;
    }
    Poly diff = lhs - rhs;
    const bool holds = diff.is_zero();
    return {holds, std::move(lhs), std::move(rhs), std::move(diff)};
}

RelationCheck verify(const Relation &rel)
{
    OrbitClassCalculator calc;
    return verify(rel, calc);
}

Relation collide(const CollisionSpec &spec)
{
    const int r = spec.r;
    const int d = spec.d;
    const int expected = (r + 1) * (d - r);
    spec.limit.check_fits(r, d);
    const VanishingSequence limit_c = complementary(spec.limit, d);

    auto weight_of = [](const std::vector<VanishingSequence> &v) {
        int w = 0;
        for (const auto &s : v) {
            w += s.weight();
        }
        return w;
    };
    const int wa = weight_of(spec.colliding);
    const int wb = weight_of(spec.remaining);
    if (limit_c.weight() + wa != expected || spec.limit.weight() + wb != expected) {
        throw WeightMismatch("collision does not balance: weight(A) = " + std::to_string(wa)
                             + ", weight(B) = " + std::to_string(wb) + ", weight(c) = "
                             + std::to_string(spec.limit.weight()) + ", weight(c') = "
                             + std::to_string(limit_c.weight()));
    }

    std::vector<VanishingSequence> all = spec.colliding;
    all.insert(all.end(), spec.remaining.begin(), spec.remaining.end());
    std::vector<VanishingSequence> side_a = spec.colliding;
    side_a.push_back(limit_c);
    std::vector<VanishingSequence> side_b = spec.remaining;
    side_b.push_back(spec.limit);

    Relation rel{r, d, RamificationProfile(r, d, drop_unramified(std::move(all))), {}};
    for (auto *side : {&side_a, &side_b}) {
        RamificationProfile p(r, d, drop_unramified(std::move(*side)));
        if (!profile_exists(p)) {
            throw NonexistentProfile("no linear series with profile " + to_string(p));
        }
        rel.rhs.push_back(std::move(p));
    }
    return rel;
}

DivisorMultiplicities::DivisorMultiplicities(std::vector<int> values) : values_(std::move(values))
{
    for (int m : values_) {
        if (m <= 0) {
            throw InvalidSequence("multiplicities must be positive");
        }
    }
}

long DivisorMultiplicities::total() const
{
    return std::accumulate(values_.begin(), values_.end(), 0L);
}

Integer predegree(const DivisorMultiplicities &m)
{
    const Integer n = m.total();
    Integer squares = 0;
    Integer cubes = 0;
    for (int v : m.values()) {
        const Integer x = v;
        squares += x * x;
        cubes += x * x * x;
    }
    return Integer(n * n * n - 3 * n * squares + 2 * cubes);
}

WeightTree weight_tree(const LabelledTree &tree)
{
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
        index.emplace(tree.vertices[i], i);
    }
    auto lookup = [&](const std::string &name) {
        auto it = index.find(name);
        if (it == index.end()) {
            throw InvalidTree("unknown vertex '" + name + "'");
        }
        return it->second;
    };
    WeightTree out{(tree.r + 1) * (tree.d - tree.r), tree.vertices.size(), {}, {}};
    for (const auto &e : tree.edges) {
        out.edges.push_back({lookup(e.u), lookup(e.v), e.label_u.weight(), e.label_v.weight()});
    }
    for (const auto &h : tree.dangling) {
        out.dangling.push_back({lookup(h.vertex), h.label.weight()});
    }
    return out;
}

bool contraction_additive(const WeightTree &tree)
{
    const std::size_t n = tree.vertex_count;
    if (n == 0 || tree.edges.size() + 1 != n) {
        throw InvalidTree("weight tree has the wrong number of edges");
    }

    // Half-edge weights at each vertex; edges are tracked separately so
    // that contraction can remove them.
    std::vector<std::vector<long>> loose(n);
    for (const auto &h : tree.dangling) {
        if (h.vertex >= n || h.weight < 0) {
            throw InvalidTree("malformed dangling weight");
        }
        loose[h.vertex].push_back(h.weight);
    }
    std::vector<WeightTree::Edge> edges = tree.edges;
    std::vector<long> sums(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        sums[v] = std::accumulate(loose[v].begin(), loose[v].end(), 0L);
    }
    for (const auto &e : edges) {
        if (e.u >= n || e.v >= n || e.u == e.v || e.weight_u < 0 || e.weight_v < 0) {
            throw InvalidTree("malformed edge");
        }
        if (e.weight_u + e.weight_v != tree.total) {
            throw InvalidTree("edge weights do not add up to N");
        }
        sums[e.u] += e.weight_u;
        sums[e.v] += e.weight_v;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (sums[v] != tree.total) {
            throw InvalidTree("vertex " + std::to_string(v) + " has weight " + std::to_string(sums[v])
                              + ", expected " + std::to_string(tree.total));
        }
    }

    auto half_edges = [&](std::size_t v, std::size_t skip) {
        std::vector<long> out = loose[v];
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (k == skip) {
                continue;
            }
            if (edges[k].u == v) {
                out.push_back(edges[k].weight_u);
            }
            if (edges[k].v == v) {
                out.push_back(edges[k].weight_v);
            }
        }
        return out;
    };
    constexpr std::size_t none = static_cast<std::size_t>(-1);

    std::vector<bool> alive(n, true);
    Integer running = 0;
    for (std::size_t v = 0; v < n; ++v) {
        running += predegree_of(half_edges(v, none));
    }
    const Integer initial = running;

    bool additive = true;
    while (!edges.empty()) {
        const WeightTree::Edge e = edges.front();
        const Integer pu = predegree_of(half_edges(e.u, none));
        const Integer pv = predegree_of(half_edges(e.v, none));
        std::vector<long> merged = half_edges(e.u, 0);
        const std::vector<long> from_v = half_edges(e.v, 0);
        merged.insert(merged.end(), from_v.begin(), from_v.end());
        const Integer pm = predegree_of(merged);
        if (pu + pv != pm) {
            additive = false;
        }
        running += pm - pu - pv;

        // merge v into u
        loose[e.u].insert(loose[e.u].end(), loose[e.v].begin(), loose[e.v].end());
        loose[e.v].clear();
        alive[e.v] = false;
        edges.erase(edges.begin());
        for (auto &other : edges) {
            if (other.u == e.v) {
                other.u = e.u;
            }
            if (other.v == e.v) {
                other.v = e.u;
            }
        }
    }

    std::vector<long> outer;
    for (const auto &h : tree.dangling) {
        outer.push_back(h.weight);
    }
    const Integer final_value = predegree_of(outer);
    return additive && running == initial && final_value == initial;
}

} // namespace orbitcalc
