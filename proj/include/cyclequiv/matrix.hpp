#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclequiv/field.hpp"

namespace cyclequiv {

using Row = std::vector<Elem>;
using RowList = std::vector<Row>;

/// Reduced row echelon form over an arbitrary F_q; zero rows dropped.
/// Unique canonical representative of the row space.
RowList rref_dense(const Field& f, RowList rows);

/// Bit-packed GF(2) variant (64 columns per word).
struct BitRows {
    int cols = 0;
    std::vector<std::vector<std::uint64_t>> rows;
};
BitRows pack_gf2(const RowList& rows, int cols);
RowList unpack_gf2(const BitRows& m);
void rref_gf2_inplace(BitRows& m);

/// Dispatches to the bit-packed kernel when q = 2.
RowList rref_canonical(const Field& f, int cols, RowList rows);

/// Reduces v against an RREF basis in place; returns true when v lands on 0
/// (i.e. v was in the row space).
bool reduce_against_rref(const Field& f, const RowList& rref, Row& v);

RowList mat_mul(const Field& f, const RowList& a, const RowList& b);
RowList mat_transpose(const RowList& rows, int cols);

/// Basis of {x : M x = 0}, deterministic (one vector per free column of the
/// RREF, in column order).
RowList kernel_basis(const Field& f, const RowList& rows, int cols);

/// One solution of A x = b, or nullopt when inconsistent. Free variables are
/// set to zero.
std::optional<Row> solve_linear(const Field& f, const RowList& a, int cols, const Row& b);

} // namespace cyclequiv
