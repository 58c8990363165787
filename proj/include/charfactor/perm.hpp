#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "charfactor/errors.hpp"

namespace charfactor {

/// Permutation of {0..N-1} stored as its image vector: images()[i] = tau(i).
/// Printing and parsing use the one-based convention {1..N}.
class Perm {
public:
    Perm() = default;
    /// Throws std::invalid_argument unless images is a bijection of {0..N-1}.
    explicit Perm(std::vector<int> images);

    static Perm identity(int size);
    /// Zero-based transposition (a b).
    static Perm transposition(int size, int a, int b);
    /// Zero-based cycle (c0 c1 ... ck): c0 -> c1 -> ... -> ck -> c0.
    static Perm cycle(int size, std::span<const int> points);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    Perm inverse() const;
    bool is_identity() const;

    /// +1 for even, -1 for odd; computed from the cycle decomposition.
    int sign() const;

    /// Composition: (a * b)(i) = a(b(i)).
    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

    /// One-based image list, e.g. "[2,1,3]".
    std::string to_string() const;

private:
    std::vector<int> images_;
};

inline int sign(const Perm& p) { return p.sign(); }

/// (v_{tau^-1(1)}, ..., v_{tau^-1(N)}); a left action: act(s*t, v) = act(s, act(t, v)).
std::vector<int> act(const Perm& tau, std::span<const int> v);

/// Row blocks I_k = {mk, ..., mk+m-1} (k < n) and column blocks
/// J_v = {v, v+m, ..., v+(n-1)m} (v < m), zero-based.
struct BlockSubgroups {
    int m;
    int n;

    BlockSubgroups(int m, int n);

    int size() const { return m * n; }
    int row_of(int i) const { return i / m; }
    int col_of(int i) const { return i % m; }
    std::vector<std::vector<int>> row_blocks() const;
    std::vector<std::vector<int>> col_blocks() const;
};

/// Lexicographic enumeration of S_N (on image vectors).
class SymmetricGroup {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Perm;
        using difference_type = std::ptrdiff_t;
        using pointer = const Perm*;
        using reference = const Perm&;

        iterator() = default;
        explicit iterator(int size);

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

    private:
        Perm current_;
        bool done_ = true;
    };

    SymmetricGroup(int size, int bound = kDefaultEnumerationBound);
    iterator begin() const { return iterator(size_); }
    iterator end() const { return iterator(); }

private:
    int size_;
};

/// Enumerates each element of the Young subgroup prod S(B) for a partition of
/// {0..N-1} into blocks B, exactly once.
class BlockProductGroup {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Perm;
        using difference_type = std::ptrdiff_t;
        using pointer = const Perm*;
        using reference = const Perm&;

        iterator() = default;
        iterator(std::shared_ptr<const std::vector<std::vector<int>>> blocks, int size);

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

    private:
        void rebuild();

        std::shared_ptr<const std::vector<std::vector<int>>> blocks_;
        std::vector<std::vector<int>> arrangement_;
        Perm current_;
        int size_ = 0;
        bool done_ = true;
    };

    BlockProductGroup(std::vector<std::vector<int>> blocks, int size);
    iterator begin() const { return iterator(blocks_, size_); }
    iterator end() const { return iterator(); }
    /// Group order, prod |B|!.
    unsigned long long order() const;

private:
    std::shared_ptr<const std::vector<std::vector<int>>> blocks_;
    int size_;
};

SymmetricGroup enumerate_group(int size, int bound = kDefaultEnumerationBound);
/// W(H) = prod_k S(I_k), of order (m!)^n.
BlockProductGroup enumerate_WH(int m, int n, int bound = kDefaultEnumerationBound);
/// F = prod_v S(J_v), of order (n!)^m.
BlockProductGroup enumerate_F(int m, int n, int bound = kDefaultEnumerationBound);

/// Row/column criterion: tau lies in F*W(H) iff no two indices of one row block
/// are sent into the same column block.
bool in_FWH(const Perm& tau, const BlockSubgroups& blocks);

/// {eta * sigma : eta in F, sigma in W(H)} by explicit products.
std::set<Perm> brute_force_FWH(const BlockSubgroups& blocks, int bound = 8);

/// One representative per left coset tau W(H): the lexicographically least
/// element, i.e. images increasing inside every row block. Lexicographic order.
std::vector<Perm> coset_reps_WH(int m, int n, int bound = kDefaultEnumerationBound);

void check_enumeration_bound(int size, int bound);

}  // namespace charfactor
