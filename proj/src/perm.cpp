#include "charfactor/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace charfactor {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("image vector is not a permutation");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Perm Perm::identity(int size) {
    std::vector<int> images(static_cast<std::size_t>(size));
    std::iota(images.begin(), images.end(), 0);
    return Perm(std::move(images));
}

Perm Perm::transposition(int size, int a, int b) {
    Perm p = identity(size);
    std::swap(p.images_.at(static_cast<std::size_t>(a)), p.images_.at(static_cast<std::size_t>(b)));
    return p;
}

Perm Perm::cycle(int size, std::span<const int> points) {
    Perm p = identity(size);
    for (std::size_t i = 0; i < points.size(); ++i)
        p.images_.at(static_cast<std::size_t>(points[i])) = points[(i + 1) % points.size()];
    return Perm(std::move(p.images_));
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    Perm p;
    p.images_ = std::move(inv);
    return p;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

int Perm::sign() const {
    std::vector<bool> visited(images_.size(), false);
    int parity = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (visited[i]) continue;
        int len = 0;
        for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(images_[j])) {
            visited[j] = true;
            ++len;
        }
        parity += len - 1;
    }
    return parity % 2 == 0 ? 1 : -1;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
    Perm r;
    r.images_.resize(b.images_.size());
    for (std::size_t i = 0; i < b.images_.size(); ++i) r.images_[i] = a(b.images_[i]);
    return r;
}

std::string Perm::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i] + 1;
    os << ']';
    return os.str();
}

std::vector<int> act(const Perm& tau, std::span<const int> v) {
    if (static_cast<int>(v.size()) != tau.size()) throw std::invalid_argument("act: length mismatch");
    std::vector<int> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[static_cast<std::size_t>(tau(static_cast<int>(j)))] = v[j];
    return out;
}

BlockSubgroups::BlockSubgroups(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) throw std::invalid_argument("block sizes must be positive");
}

std::vector<std::vector<int>> BlockSubgroups::row_blocks() const {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < size(); ++i) rows[static_cast<std::size_t>(row_of(i))].push_back(i);
    return rows;
}

std::vector<std::vector<int>> BlockSubgroups::col_blocks() const {
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(m));
    for (int i = 0; i < size(); ++i) cols[static_cast<std::size_t>(col_of(i))].push_back(i);
    return cols;
}

void check_enumeration_bound(int size, int bound) {
    if (size > bound)
        throw BoundExceeded("enumeration too large: size " + std::to_string(size) + " exceeds bound " +
                            std::to_string(bound));
}

SymmetricGroup::iterator::iterator(int size) : current_(Perm::identity(size)), done_(false) {}

SymmetricGroup::iterator& SymmetricGroup::iterator::operator++() {
    auto images = current_.images();
    if (!std::next_permutation(images.begin(), images.end()))
        done_ = true;
    else
        current_ = Perm(std::move(images));
    return *this;
}

SymmetricGroup::SymmetricGroup(int size, int bound) : size_(size) {
    if (size < 0) throw std::invalid_argument("negative group degree");
    check_enumeration_bound(size, bound);
}

BlockProductGroup::BlockProductGroup(std::vector<std::vector<int>> blocks, int size) : size_(size) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    blocks_ = std::make_shared<const std::vector<std::vector<int>>>(std::move(blocks));
}

unsigned long long BlockProductGroup::order() const {
    unsigned long long total = 1;
    for (const auto& b : *blocks_)
        for (std::size_t i = 2; i <= b.size(); ++i) total *= i;
    return total;
}

BlockProductGroup::iterator::iterator(std::shared_ptr<const std::vector<std::vector<int>>> blocks, int size)
    : blocks_(std::move(blocks)), arrangement_(*blocks_), size_(size), done_(false) {
    rebuild();
}

void BlockProductGroup::iterator::rebuild() {
    std::vector<int> images(static_cast<std::size_t>(size_));
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t b = 0; b < blocks_->size(); ++b) {
        const auto& src = (*blocks_)[b];
        for (std::size_t i = 0; i < src.size(); ++i)
            images[static_cast<std::size_t>(src[i])] = arrangement_[b][i];
    }
    current_ = Perm(std::move(images));
}

BlockProductGroup::iterator& BlockProductGroup::iterator::operator++() {
    // Odometer over the blocks, last block fastest.
    for (std::size_t b = arrangement_.size(); b-- > 0;) {
        if (std::next_permutation(arrangement_[b].begin(), arrangement_[b].end())) {
            rebuild();
            return *this;
        }
    }
    done_ = true;
    return *this;
}

SymmetricGroup enumerate_group(int size, int bound) { return SymmetricGroup(size, bound); }

BlockProductGroup enumerate_WH(int m, int n, int bound) {
    const BlockSubgroups blocks(m, n);
    check_enumeration_bound(blocks.size(), bound);
    return BlockProductGroup(blocks.row_blocks(), blocks.size());
}

BlockProductGroup enumerate_F(int m, int n, int bound) {
    const BlockSubgroups blocks(m, n);
    check_enumeration_bound(blocks.size(), bound);
    return BlockProductGroup(blocks.col_blocks(), blocks.size());
}

bool in_FWH(const Perm& tau, const BlockSubgroups& blocks) {
    if (tau.size() != blocks.size()) throw std::invalid_argument("in_FWH: permutation degree mismatch");
    std::vector<bool> used(static_cast<std::size_t>(blocks.m));
    for (int k = 0; k < blocks.n; ++k) {
        std::fill(used.begin(), used.end(), false);
        for (int s = 0; s < blocks.m; ++s) {
            const int col = blocks.col_of(tau(k * blocks.m + s));
            if (used[static_cast<std::size_t>(col)]) return false;
            used[static_cast<std::size_t>(col)] = true;
        }
    }
    return true;
}

std::set<Perm> brute_force_FWH(const BlockSubgroups& blocks, int bound) {
    check_enumeration_bound(blocks.size(), bound);
    std::set<Perm> out;
    const auto wh = enumerate_WH(blocks.m, blocks.n, bound);
    for (const Perm& eta : enumerate_F(blocks.m, blocks.n, bound))
        for (const Perm& sigma : wh) out.insert(eta * sigma);
    return out;
}

std::vector<Perm> coset_reps_WH(int m, int n, int bound) {
    const BlockSubgroups blocks(m, n);
    check_enumeration_bound(blocks.size(), bound);
    std::vector<Perm> reps;
    for (const Perm& tau : enumerate_group(blocks.size(), bound)) {
        bool minimal = true;
        for (int i = 0; i < blocks.size() && minimal; ++i) {
            if (blocks.col_of(i) != 0 && tau(i - 1) > tau(i)) minimal = false;
        }
        if (minimal) reps.push_back(tau);
    }
    return reps;
}

}  // namespace charfactor
