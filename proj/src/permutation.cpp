#include "cyclequiv/permutation.hpp"

#include <numeric>

namespace cyclequiv {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw Error(ErrorCode::InvalidInput, "image array is not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::shift(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(img), Unchecked{});
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

bool Permutation::is_full_cycle() const {
    const int n = degree();
    if (n == 0) return false;
    int at = 0, steps = 0;
    do {
        at = images_[at];
        ++steps;
    } while (at != 0 && steps <= n);
    return steps == n;
}

Permutation compose(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree())
        throw Error(ErrorCode::LengthMismatch, "composing permutations of different degree");
    std::vector<int> img(g.degree());
    for (int i = 0; i < g.degree(); ++i) img[i] = h.images_[g.images_[i]];
    return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& g, const Permutation& z) {
    if (g.degree() != z.degree())
        throw Error(ErrorCode::LengthMismatch, "conjugating permutations of different degree");
    Permutation zi = z.inverse();
    std::vector<int> img(g.degree());
    for (int i = 0; i < g.degree(); ++i) img[i] = z.images_[g.images_[zi.images_[i]]];
    return Permutation(std::move(img), Permutation::Unchecked{});
}

} // namespace cyclequiv
