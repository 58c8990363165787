#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "charfactor/perm.hpp"

namespace charfactor {

/// Dominant weight: weakly decreasing integers, negatives allowed.
class WeightVector {
public:
    WeightVector() = default;
    /// Throws std::invalid_argument("weight not dominant") unless weakly decreasing.
    explicit WeightVector(std::vector<int> entries);

    static WeightVector zero(int size) { return WeightVector(std::vector<int>(static_cast<std::size_t>(size), 0)); }

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }
    int sum() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
    friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<int> entries_;
};

/// Vector of pairwise distinct integers (no ordering required).
class StrictVector {
public:
    StrictVector() = default;
    /// Throws std::invalid_argument unless entries are pairwise distinct.
    explicit StrictVector(std::vector<int> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }
    int sum() const;

    friend bool operator==(const StrictVector&, const StrictVector&) = default;

private:
    std::vector<int> entries_;
};

/// Floor-mod, always in [0, n).
inline int residue(int x, int n) {
    const int r = x % n;
    return r < 0 ? r + n : r;
}

/// (N-1, N-2, ..., 1, 0).
StrictVector rho(int size);

/// lambda + rho.
StrictVector shift(const WeightVector& lambda);

/// Inverse of shift; throws unless the result is dominant.
WeightVector unshift(const StrictVector& v);

/// Every residue class mod n holds exactly m entries.
bool is_balanced(const StrictVector& v, int m, int n);

struct Normalization {
    StrictVector mu;
    Perm w0;  // act(w0, v) == mu
    int w0_sign;
};

/// Reorders v into residue blocks 0, 1, ..., n-1, each strictly decreasing.
/// Throws std::invalid_argument("residue condition fails") when unbalanced.
Normalization normalize_to_mu(const StrictVector& v, int m, int n);

/// eta_k = L_k^1 - rho_m with L_k^1 = sorted{(x - k)/n : x in block k of mu}.
std::vector<WeightVector> eta_weights(const StrictVector& mu, int m, int n);

/// Parses "3,1,-2" (whitespace tolerated). Throws std::invalid_argument.
std::vector<int> parse_int_list(std::string_view text);

/// "3,1,-2".
std::string join_ints(std::span<const int> v);

/// Every weakly decreasing vector of the given length with entries in [lo, hi],
/// in decreasing lexicographic order.
std::vector<WeightVector> dominant_weights_in_box(int length, int lo, int hi);

}  // namespace charfactor
