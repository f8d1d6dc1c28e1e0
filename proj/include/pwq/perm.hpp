#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pwq {

// Permutation of {0,...,n-1} in one-line notation: i maps to img[i].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("Permutation: not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }

    static Permutation transposition(int n, int a, int b) {
        Permutation p = identity(n);
        std::swap(p.img_[a], p.img_[b]);
        return p;
    }

    // Cycles of decreasing length on consecutive integers, e.g. cycle type
    // (3,2) on n=5 gives (0 1 2)(3 4).
    static Permutation canonical_of_cycle_type(const std::vector<int>& type, int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        int start = 0;
        for (int len : type) {
            if (len < 1 || start + len > n)
                throw std::invalid_argument("canonical_of_cycle_type: bad cycle type");
            for (int j = 0; j < len; ++j) im[start + j] = start + (j + 1) % len;
            start += len;
        }
        return Permutation(std::move(im));
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    // Standard composition: (this o other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const {
        if (size() != other.size()) throw std::invalid_argument("compose: size mismatch");
        std::vector<int> im(img_.size());
        for (int i = 0; i < size(); ++i) im[i] = img_[other.img_[i]];
        return Permutation(std::move(im));
    }

    Permutation inverse() const {
        std::vector<int> im(img_.size());
        for (int i = 0; i < size(); ++i) im[img_[i]] = i;
        return Permutation(std::move(im));
    }

    // Cycle lengths, decreasing.
    std::vector<int> cycle_type() const {
        std::vector<bool> seen(img_.size(), false);
        std::vector<int> type;
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img_[j]) { seen[j] = true; ++len; }
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        return type;
    }

    bool operator==(const Permutation& o) const = default;

private:
    std::vector<int> img_;
};

}  // namespace pwq
