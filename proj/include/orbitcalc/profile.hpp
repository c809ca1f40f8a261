#ifndef ORBITCALC_PROFILE_HPP
#define ORBITCALC_PROFILE_HPP

#include <compare>
#include <string>
#include <vector>

namespace orbitcalc
{

// Strictly increasing vanishing orders a_0 < ... < a_r, all >= 0.
class VanishingSequence
{
public:
    // Throws InvalidSequence unless strictly increasing and non-negative.
    explicit VanishingSequence(std::vector<int> orders);

    // (0, 1, ..., r)
    static VanishingSequence generic(int r);

    const std::vector<int> &orders() const
    {
        return orders_;
    }
    int rank() const
    {
        return static_cast<int>(orders_.size()) - 1;
    }
    int operator[](std::size_t i) const
    {
        return orders_[i];
    }
    // sum_i (a_i - i)
    int weight() const;
    bool is_generic() const
    {
        return weight() == 0;
    }
    // Throws InvalidSequence if the sequence does not fit rank r, degree d.
    void check_fits(int r, int d) const;

    friend auto operator<=>(const VanishingSequence &, const VanishingSequence &) = default;
    friend bool operator==(const VanishingSequence &, const VanishingSequence &) = default;

private:
    std::vector<int> orders_;
};

// "(0,2)"
std::string to_string(const VanishingSequence &seq);

// Multiset of non-generic vanishing sequences, one per ramification point,
// stored in descending lexicographic order.
class RamificationProfile
{
public:
    // Throws InvalidSequence when a sequence does not fit (r, d) or is generic.
    RamificationProfile(int r, int d, std::vector<VanishingSequence> points);

    int r() const
    {
        return r_;
    }
    int d() const
    {
        return d_;
    }
    const std::vector<VanishingSequence> &points() const
    {
        return points_;
    }
    std::size_t point_count() const
    {
        return points_.size();
    }
    int total_weight() const;
    // (r+1)(d-r), the degree of the ramification divisor.
    int expected_weight() const
    {
        return (r_ + 1) * (d_ - r_);
    }
    bool is_complete() const
    {
        return total_weight() == expected_weight();
    }
    // Throws WeightMismatch unless is_complete().
    void require_complete() const;

    friend bool operator==(const RamificationProfile &, const RamificationProfile &) = default;

private:
    int r_;
    int d_;
    std::vector<VanishingSequence> points_;
};

// "(0,3),(0,2)x4"; the empty profile prints as "{}".
std::string to_string(const RamificationProfile &profile);

// Parses the inline grammar: comma separated "(a0,...,ar)" tokens, each
// optionally followed by "xN". Throws ParseError.
std::vector<VanishingSequence> parse_profile_points(const std::string &text);

} // namespace orbitcalc

#endif
