#ifndef ORBITCALC_SPECIAL_HPP
#define ORBITCALC_SPECIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include <orbitcalc/classes.hpp>
#include <orbitcalc/poly.hpp>
#include <orbitcalc/profile.hpp>

namespace orbitcalc
{

// (d - c_r, ..., d - c_0)
VanishingSequence complementary(const VanishingSequence &seq, int d);

struct TreeEdge {
    std::string u;
    std::string v;
    VanishingSequence label_u;
    VanishingSequence label_v;
};

struct DanglingEdge {
    std::string vertex;
    VanishingSequence label;
};

// Dual graph of a degenerate P^1 with vanishing-sequence labels on every
// half-edge.
struct LabelledTree {
    int r;
    int d;
    std::vector<std::string> vertices;
    std::vector<TreeEdge> edges;
    std::vector<DanglingEdge> dangling;
};

struct TreeReport {
    enum class Failure { unknown_vertex, not_a_tree, bad_label, complementarity, weight, nonexistent };

    std::vector<std::pair<Failure, std::string>> failures;

    bool ok() const
    {
        return failures.empty();
    }
    bool has(Failure f) const;
};

std::string to_string(TreeReport::Failure f);

// Checks the graph is a tree, edge labels are complementary, every vertex
// carries total weight (r+1)(d-r) and every vertex profile exists.
TreeReport validate_tree(const LabelledTree &tree);

// [WOrb(lhs)] = sum_k [WOrb(rhs[k])]
struct Relation {
    int r;
    int d;
    RamificationProfile lhs;
    std::vector<RamificationProfile> rhs;
};

// "WOrb((0,2)x6) = WOrb((0,3)x2,(1,2)) + 2*WOrb((0,2)x2,(1,4))"
std::string to_string(const Relation &rel);

// Dangling labels on the left, one vertex profile per vertex on the right.
// Unramified labels are dropped from vertex profiles, which leaves the
// class unchanged. Throws InvalidTree when validation fails.
Relation decompose(const LabelledTree &tree);

struct RelationCheck {
    bool holds;
    Poly lhs;
    Poly rhs;
    Poly difference; // lhs - rhs
};

RelationCheck verify(const Relation &rel, OrbitClassCalculator &calc);
RelationCheck verify(const Relation &rel);

// Points A collide into one point with vanishing sequence `limit`; the
// remaining points B stay apart.
struct CollisionSpec {
    int r;
    int d;
    std::vector<VanishingSequence> colliding;
    std::vector<VanishingSequence> remaining;
    VanishingSequence limit;
};

// WOrb(A u B) = WOrb(A u {c'}) + WOrb(B u {c}). Throws WeightMismatch when
// the weights do not balance and NonexistentProfile when a side fails the
// existence check.
Relation collide(const CollisionSpec &spec);

class DivisorMultiplicities
{
public:
    // Throws InvalidSequence unless every entry is positive.
    explicit DivisorMultiplicities(std::vector<int> values);

    const std::vector<int> &values() const
    {
        return values_;
    }
    long total() const;

private:
    std::vector<int> values_;
};

// N^3 - 3N sum m_i^2 + 2 sum m_i^3
Integer predegree(const DivisorMultiplicities &m);

// Tree whose half-edges carry weights instead of sequences.
struct WeightTree {
    struct Edge {
        std::size_t u;
        std::size_t v;
        long weight_u;
        long weight_v;
    };
    struct Dangling {
        std::size_t vertex;
        long weight;
    };

    long total; // N
    std::size_t vertex_count;
    std::vector<Edge> edges;
    std::vector<Dangling> dangling;
};

WeightTree weight_tree(const LabelledTree &tree);

// Contracts the edges in order, checking at each step that the two vertex
// pre-degrees add up to the pre-degree of the merged vertex, and that the
// sum telescopes to the pre-degree of the dangling weights. Throws
// InvalidTree on malformed weights.
bool contraction_additive(const WeightTree &tree);

} // namespace orbitcalc

#endif
