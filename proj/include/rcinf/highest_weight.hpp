#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rcinf/forward.hpp"
#include "rcinf/reverse.hpp"
#include "rcinf/rigged.hpp"

namespace rcinf {

class RankMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dominant integral weight, given by its values on the simple coroots h_1..h_n.
class DominantWeight {
public:
    /// Throws InvalidRank when empty and std::invalid_argument on a negative value.
    explicit DominantWeight(std::vector<int> values);

    int rank() const { return static_cast<int>(values_.size()); }
    /// 1-based.
    int at(int i) const;
    const std::vector<int>& values() const { return values_; }
    int total() const;

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

private:
    std::vector<int> values_;
};

/// An element b ⊗ t_λ of B(∞) ⊗ T_λ; the second factor has a single element and is kept only as a tag.
struct LambdaElement {
    RiggedConfiguration rc;
    DominantWeight lambda;

    friend bool operator==(const LambdaElement&, const LambdaElement&) = default;
};

enum class Side { forward, reverse };

/// For 1 <= i <= j <= n:
///   sum_{t<=n-j+1} (x_{i,t} - x_{i-1,t}) <= λ(h_i) + sum_{t<=n-j} (x_{i+1,t} - x_{i,t}),  x_{0,*} = 0.
bool in_xlambda(const ForwardExponents& x, const DominantWeight& lambda);

/// For 1 <= j <= i <= n:
///   sum_{t<=j} (ψ_{i,t} - ψ_{i+1,t}) <= λ(h_i) + sum_{t<=j-1} (ψ_{i-1,t} - ψ_{i,t}),  ψ_{n+1,*} = 0.
bool in_psilambda(const ReverseExponents& psi, const DominantWeight& lambda);

/// Every entry is searched in 0..n·Σλ(h_i); the result is in lexicographic order of the
/// application word.
std::vector<ForwardExponents> enumerate_xlambda(const DominantWeight& lambda);
std::vector<ReverseExponents> enumerate_psilambda(const DominantWeight& lambda);

/// Images of the enumerated triangles, sorted by their canonical JSON serialization.
std::vector<LambdaElement> blambda_rc_set(const DominantWeight& lambda, Side side);

/// Counts semistandard tableaux with λ(h_i) columns of height i and entries 1..n+1 by direct
/// filling, independently of every crystal model.
std::int64_t ssyt_count_oracle(const DominantWeight& lambda, int n);

} // namespace rcinf
