#include "charfactor/weight.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace charfactor {

WeightVector::WeightVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1] < entries_[i]) throw std::invalid_argument("weight not dominant");
}

int WeightVector::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

StrictVector::StrictVector(std::vector<int> entries) : entries_(std::move(entries)) {
    std::set<int> seen(entries_.begin(), entries_.end());
    if (seen.size() != entries_.size()) throw std::invalid_argument("vector entries are not distinct");
}

int StrictVector::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

StrictVector rho(int size) {
    if (size < 1) throw std::invalid_argument("rho needs N >= 1");
    std::vector<int> v(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) v[static_cast<std::size_t>(i)] = size - 1 - i;
    return StrictVector(std::move(v));
}

StrictVector shift(const WeightVector& lambda) {
    std::vector<int> v = lambda.entries();
    const int size = lambda.size();
    for (int i = 0; i < size; ++i) v[static_cast<std::size_t>(i)] += size - 1 - i;
    return StrictVector(std::move(v));
}

WeightVector unshift(const StrictVector& v) {
    std::vector<int> w = v.entries();
    const int size = v.size();
    for (int i = 0; i < size; ++i) w[static_cast<std::size_t>(i)] -= size - 1 - i;
    return WeightVector(std::move(w));
}

bool is_balanced(const StrictVector& v, int m, int n) {
    if (m < 1 || n < 1 || v.size() != m * n) throw std::invalid_argument("is_balanced: length must equal m*n");
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int x : v.entries()) ++count[static_cast<std::size_t>(residue(x, n))];
    return std::all_of(count.begin(), count.end(), [m](int c) { return c == m; });
}

Normalization normalize_to_mu(const StrictVector& v, int m, int n) {
    if (!is_balanced(v, m, n)) throw std::invalid_argument("residue condition fails");
    // source[i] = index in v of mu[i]
    std::vector<int> source(static_cast<std::size_t>(v.size()));
    std::iota(source.begin(), source.end(), 0);
    std::stable_sort(source.begin(), source.end(), [&](int a, int b) {
        const int ra = residue(v[a], n);
        const int rb = residue(v[b], n);
        if (ra != rb) return ra < rb;
        return v[a] > v[b];
    });
    std::vector<int> mu(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) mu[i] = v[source[i]];
    // act(w0, v)[w0(j)] = v[j], so w0 sends source[i] to i.
    std::vector<int> images(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) images[static_cast<std::size_t>(source[i])] = static_cast<int>(i);
    Perm w0(std::move(images));
    const int s = w0.sign();
    return Normalization{StrictVector(std::move(mu)), std::move(w0), s};
}

std::vector<WeightVector> eta_weights(const StrictVector& mu, int m, int n) {
    if (!is_balanced(mu, m, n)) throw std::invalid_argument("residue condition fails");
    std::vector<WeightVector> etas;
    etas.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        std::vector<int> block;
        for (int s = 0; s < m; ++s) {
            const int x = mu[k * m + s];
            if (residue(x, n) != k) throw std::invalid_argument("mu is not in residue-block order");
            block.push_back((x - k) / n);
        }
        std::sort(block.begin(), block.end(), std::greater<>());
        for (int s = 0; s < m; ++s) block[static_cast<std::size_t>(s)] -= m - 1 - s;
        etas.emplace_back(std::move(block));
    }
    return etas;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (item.empty()) {
            if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
            throw std::invalid_argument("empty entry in integer list '" + std::string(text) + "'");
        }
        if (item.front() == '+') item.remove_prefix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size())
            throw std::invalid_argument("not an integer: '" + std::string(item) + "'");
        out.push_back(value);
        pos = end + 1;
    }
    return out;
}

std::string join_ints(std::span<const int> v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::vector<WeightVector> dominant_weights_in_box(int length, int lo, int hi) {
    std::vector<WeightVector> out;
    if (length < 0 || lo > hi) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int upper) {
        if (static_cast<int>(cur.size()) == length) {
            out.emplace_back(cur);
            return;
        }
        for (int x = upper; x >= lo; --x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(hi);
    return out;
}

}  // namespace charfactor
