#pragma once

#include <vector>

#include "cyclequiv/errors.hpp"

namespace cyclequiv {

/// Permutation of {0..n-1} given by its image array.
class Permutation {
  public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// i -> i+1 (mod n), the full cycle generating the regular cyclic group.
    static Permutation shift(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator[](int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    bool is_full_cycle() const;

    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    bool operator!=(const Permutation& other) const { return images_ != other.images_; }
    /// Lexicographic order on image arrays.
    bool operator<(const Permutation& other) const { return images_ < other.images_; }

  private:
    struct Unchecked {};
    Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}
    std::vector<int> images_;

    friend Permutation compose(const Permutation&, const Permutation&);
    friend Permutation conjugate(const Permutation&, const Permutation&);
};

/// Apply g, then h. Matches the code action contract (f^g)^h = f^{g.h}.
Permutation compose(const Permutation& g, const Permutation& h);
/// z^{-1} g z under the same convention.
Permutation conjugate(const Permutation& g, const Permutation& z);

} // namespace cyclequiv
