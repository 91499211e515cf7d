#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcinf {

/// One failed inequality: lhs <= rhs was expected at the given (i, j, k).
struct Violation {
    std::string lemma;
    std::array<int, 3> indices{};
    int lhs = 0;
    int rhs = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct InequalityReport {
    std::vector<Violation> violations;
    long checked = 0;

    bool passed() const { return violations.empty(); }
    const Violation* first() const { return violations.empty() ? nullptr : &violations.front(); }
};

/// A part exceeded its admissible height min(i, n - i + 1); such a configuration cannot lie in
/// the crystal and recovery refuses it.
class HeightBoundError : public std::invalid_argument {
public:
    HeightBoundError(int part, int height, int bound)
        : std::invalid_argument("part " + std::to_string(part) + " has height " + std::to_string(height)
                                + " above bound " + std::to_string(bound)),
          part_(part) {}

    int part() const { return part_; }

private:
    int part_;
};

enum class MembershipStage {
    accepted,
    height_bound,     // recovery refused: a part is too tall
    not_exponents,    // recovered triangle is negative or not monotone
    rebuild_mismatch, // closed form of the recovered triangle differs from the input
};

const char* to_string(MembershipStage stage);

template <class Exponents>
struct Membership {
    MembershipStage stage = MembershipStage::accepted;
    std::optional<Exponents> exponents;
    std::string detail;

    bool member() const { return stage == MembershipStage::accepted; }
};

inline int height_bound(int n, int i) { return i < n - i + 1 ? i : n - i + 1; }

} // namespace rcinf
