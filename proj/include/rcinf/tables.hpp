#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rcinf/rigged.hpp"

namespace rcinf {

/// Index set 1 <= i, j with i + j <= n + 1.
struct ForwardShape {
    static bool contains(int n, int i, int j) { return i >= 1 && j >= 1 && i + j <= n + 1; }
};

/// Index set 1 <= j <= i <= n.
struct ReverseShape {
    static bool contains(int n, int i, int j) { return j >= 1 && j <= i && i <= n; }
};

/// Dense 1-based triangular array of integers over a fixed index shape. Entries are unconstrained;
/// validated exponent types wrap this.
template <class Shape>
class Triangle {
public:
    explicit Triangle(int n) : n_(n), stride_(n + 2), values_(static_cast<std::size_t>((n + 2) * (n + 2)), 0)
    {
        if (n < 1) throw InvalidRank("rank must be at least 1, got " + std::to_string(n));
    }

    int rank() const { return n_; }
    static bool contains(int n, int i, int j) { return Shape::contains(n, i, j); }
    bool contains(int i, int j) const { return Shape::contains(n_, i, j); }

    int at(int i, int j) const { return values_[offset(i, j)]; }
    void set(int i, int j, int v) { values_[offset(i, j)] = v; }

    friend bool operator==(const Triangle& a, const Triangle& b) { return a.n_ == b.n_ && a.values_ == b.values_; }

private:
    std::size_t offset(int i, int j) const
    {
        if (!contains(i, j)) {
            throw InvalidIndex("triangle index (" + std::to_string(i) + "," + std::to_string(j) + ") outside shape");
        }
        return static_cast<std::size_t>(i * stride_ + j);
    }

    int n_;
    int stride_;
    std::vector<int> values_;
};

using ForwardTriangle = Triangle<ForwardShape>;
using ReverseTriangle = Triangle<ReverseShape>;

/// Rejection of a raw triangle, carrying the offending position.
class ExponentError : public std::invalid_argument {
public:
    enum class Kind { shape, negative, monotonicity };

    ExponentError(Kind kind, int i, int j, const std::string& what)
        : std::invalid_argument(what), kind_(kind), i_(i), j_(j) {}

    Kind kind() const { return kind_; }
    int i() const { return i_; }
    int j() const { return j_; }

private:
    Kind kind_;
    int i_;
    int j_;
};

/// Domain of the forward extension: the exponent layer at k = 0, and for 1 <= k <= n the
/// entries 1 <= j <= n-k+1, 1 <= i <= n-j-k+2.
struct ForwardTableDomain {
    static bool contains(int n, int i, int j, int k)
    {
        if (k == 0) return ForwardShape::contains(n, i, j);
        return k >= 1 && k <= n && j >= 1 && j <= n - k + 1 && i >= 1 && i <= n - j - k + 2;
    }
};

/// Domain of the reverse extension: the exponent layer at k = 0, and for 1 <= k <= n the
/// entries 1 <= j <= n-k+1, j+k-1 <= i <= n.
struct ReverseTableDomain {
    static bool contains(int n, int i, int j, int k)
    {
        if (k == 0) return ReverseShape::contains(n, i, j);
        return k >= 1 && k <= n && j >= 1 && j <= n - k + 1 && i >= j + k - 1 && i <= n;
    }
};

/// Three-index table over a fixed domain. Reads and writes outside the domain throw
/// std::logic_error: the generation and recovery loops must never touch such an entry.
template <class Domain>
class ExtendedTable {
public:
    explicit ExtendedTable(int n)
        : n_(n), stride_(n + 2), values_(static_cast<std::size_t>((n + 2) * (n + 2) * (n + 2)), 0)
    {
        if (n < 1) throw InvalidRank("rank must be at least 1, got " + std::to_string(n));
    }

    int rank() const { return n_; }
    bool contains(int i, int j, int k) const { return Domain::contains(n_, i, j, k); }

    int at(int i, int j, int k) const { return values_[offset(i, j, k)]; }
    void set(int i, int j, int k, int v) { values_[offset(i, j, k)] = v; }

    /// Sum of at(i, x, k) over x in [from, to]; empty when to < from.
    int row_sum(int i, int from, int to, int k) const
    {
        int s = 0;
        for (int x = from; x <= to; ++x) s += at(i, x, k);
        return s;
    }

    friend bool operator==(const ExtendedTable& a, const ExtendedTable& b)
    {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }

private:
    std::size_t offset(int i, int j, int k) const
    {
        if (!contains(i, j, k)) {
            throw std::logic_error("extended table index (" + std::to_string(i) + "," + std::to_string(j) + ","
                                   + std::to_string(k) + ") outside domain");
        }
        return static_cast<std::size_t>((i * stride_ + j) * stride_ + k);
    }

    int n_;
    int stride_;
    std::vector<int> values_;
};

using ForwardExtendedTable = ExtendedTable<ForwardTableDomain>;
using ReverseExtendedTable = ExtendedTable<ReverseTableDomain>;

/// Row lengths and riggings, indexed by part i and row k (both 1-based). Each part has a fixed
/// number of row slots; slots beyond the actual height hold length 0 and rigging 0.
class LengthRiggingTable {
public:
    LengthRiggingTable(int n, std::vector<int> slots_per_part);

    int rank() const { return n_; }
    int slots(int i) const { return slots_[static_cast<std::size_t>(i - 1)]; }

    int length(int i, int k) const { return len_[index(i, k)]; }
    int rigging(int i, int k) const { return rig_[index(i, k)]; }
    void set(int i, int k, int length, int rigging)
    {
        len_[index(i, k)] = length;
        rig_[index(i, k)] = rigging;
    }

    /// Drops zero-length rows. Throws std::logic_error on a negative length.
    RiggedConfiguration to_rc() const;

    friend bool operator==(const LengthRiggingTable&, const LengthRiggingTable&) = default;

private:
    std::size_t index(int i, int k) const;

    int n_;
    std::vector<int> slots_;
    std::vector<int> offsets_;
    std::vector<int> len_;
    std::vector<int> rig_;
};

} // namespace rcinf
