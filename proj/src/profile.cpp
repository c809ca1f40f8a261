#include <orbitcalc/profile.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include <orbitcalc/errors.hpp>

namespace orbitcalc
{

VanishingSequence::VanishingSequence(std::vector<int> orders) : orders_(std::move(orders))
{
    if (orders_.empty()) {
        throw InvalidSequence("vanishing sequence must not be empty");
    }
    if (orders_.front() < 0) {
        throw InvalidSequence("vanishing orders must be non-negative in " + to_string(*this));
    }
    for (std::size_t i = 1; i < orders_.size(); ++i) {
        if (orders_[i] <= orders_[i - 1]) {
            throw InvalidSequence("vanishing orders must be strictly increasing in "
                                  + to_string(*this));
        }
    }
}

VanishingSequence VanishingSequence::generic(int r)
{
    std::vector<int> v(static_cast<std::size_t>(r + 1));
    std::iota(v.begin(), v.end(), 0);
    return VanishingSequence(std::move(v));
}

int VanishingSequence::weight() const
{
    int w = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        w += orders_[i] - static_cast<int>(i);
    }
    return w;
}

void VanishingSequence::check_fits(int r, int d) const
{
    if (rank() != r) {
        throw InvalidSequence("sequence " + to_string(*this) + " has length "
                              + std::to_string(orders_.size()) + ", expected "
                              + std::to_string(r + 1));
    }
    if (orders_.back() > d) {
        throw InvalidSequence("sequence " + to_string(*this) + " exceeds degree "
                              + std::to_string(d));
    }
}

std::string to_string(const VanishingSequence &seq)
{
    std::string out = "(";
    for (std::size_t i = 0; i < seq.orders().size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(seq.orders()[i]);
    }
    return out + ")";
}

RamificationProfile::RamificationProfile(int r, int d, std::vector<VanishingSequence> points)
    : r_(r), d_(d), points_(std::move(points))
{
    if (r < 0 || d < r) {
        throw InvalidSequence("need 0 <= r <= d, got r=" + std::to_string(r) + " d="
                              + std::to_string(d));
    }
    for (const auto &p : points_) {
        p.check_fits(r, d);
        if (p.is_generic()) {
            throw InvalidSequence("profile contains the unramified sequence " + to_string(p));
        }
    }
    std::sort(points_.begin(), points_.end(), std::greater<>());
}

int RamificationProfile::total_weight() const
{
    int w = 0;
    for (const auto &p : points_) {
        w += p.weight();
    }
    return w;
}

void RamificationProfile::require_complete() const
{
    if (!is_complete()) {
        throw WeightMismatch("profile " + to_string(*this) + " has total weight "
                             + std::to_string(total_weight()) + ", expected (r+1)(d-r) = "
                             + std::to_string(expected_weight()));
    }
}

std::string to_string(const RamificationProfile &profile)
{
    const auto &pts = profile.points();
    if (pts.empty()) {
        return "{}";
    }
    std::string out;
    for (std::size_t i = 0; i < pts.size();) {
        std::size_t j = i;
        while (j < pts.size() && pts[j] == pts[i]) {
            ++j;
        }
        if (!out.empty()) {
            out += ',';
        }
        out += to_string(pts[i]);
        if (j - i > 1) {
            out += 'x' + std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

std::vector<VanishingSequence> parse_profile_points(const std::string &text)
{
    std::vector<VanishingSequence> out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    auto number = [&] {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (start == pos) {
            throw ParseError("profile: expected a number at offset " + std::to_string(start)
                             + " in '" + text + "'");
        }
        return std::stoi(text.substr(start, pos - start));
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) {
            throw ParseError(std::string("profile: expected '") + c + "' at offset "
                             + std::to_string(pos) + " in '" + text + "'");
        }
        ++pos;
    };

    skip_ws();
    if (pos == text.size()) {
        return out;
    }
    while (true) {
        expect('(');
        std::vector<int> orders{number()};
        skip_ws();
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            orders.push_back(number());
            skip_ws();
        }
        expect(')');
        skip_ws();
        int repeat = 1;
        if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
            ++pos;
            repeat = number();
            if (repeat < 1) {
                throw ParseError("profile: repetition count must be positive");
            }
        }
        VanishingSequence seq(std::move(orders));
        for (int k = 0; k < repeat; ++k) {
            out.push_back(seq);
        }
        skip_ws();
        if (pos == text.size()) {
            break;
        }
        expect(',');
    }
    return out;
}

} // namespace orbitcalc
