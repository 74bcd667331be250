#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cyclequiv/errors.hpp"

namespace cyclequiv {

enum class Exec { Serial, Parallel };

std::uint64_t factorial(int n); // n <= 20

/// Lexicographic rank <-> permutation (factorial number system).
std::vector<int> unrank_permutation(int n, std::uint64_t rank);

/// Predicate over image arrays; must be pure and thread-safe.
using PermPred = std::function<bool(const std::vector<int>&)>;

struct ScanHit {
    bool found = false;
    std::uint64_t rank = 0; // lexicographic rank of the hit
    std::vector<int> images;
};

/// Lexicographically-first permutation of degree n satisfying pred. The
/// parallel kernel splits the rank space into contiguous chunks and keeps the
/// smallest hit, so the answer matches the serial reference exactly.
ScanHit scan_first(int n, const PermPred& pred, Exec exec = Exec::Parallel);

/// All satisfying permutations in lexicographic order.
std::vector<std::vector<int>> scan_collect(int n, const PermPred& pred, Exec exec = Exec::Parallel);

/// Parallel-for over [0, count) with dynamic scheduling; body must be
/// thread-safe and must not throw.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body,
                    Exec exec = Exec::Parallel);

} // namespace cyclequiv
