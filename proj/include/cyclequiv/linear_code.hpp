#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cyclequiv/matrix.hpp"
#include "cyclequiv/permutation.hpp"
#include "cyclequiv/ring.hpp"

namespace cyclequiv {

/// Subspace of F_q^n held in reduced row-echelon basis form, the unique
/// canonical representative of its row space. Immutable.
class LinearCode {
  public:
    static LinearCode from_span(const Field& f, int n, RowList rows);
    static LinearCode zero(const Field& f, int n);
    static LinearCode full(const Field& f, int n);

    const Field& field() const { return field_; }
    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const RowList& basis() const { return basis_; }

    bool contains(Row v) const;
    bool operator==(const LinearCode& other) const {
        return n_ == other.n_ && field_.same(other.field_) && basis_ == other.basis_;
    }
    bool operator!=(const LinearCode& other) const { return !(*this == other); }

    /// Stable digest of (n, basis) for orbit set membership.
    std::string key() const;

  private:
    LinearCode(Field f, int n, RowList basis)
        : field_(std::move(f)), n_(n), basis_(std::move(basis)) {}

    Field field_;
    int n_;
    RowList basis_; // RREF, no zero rows
};

/// Coordinate action f^g with f^g(w) = f(w^{g^-1}): position i moves to g[i].
Row permute_row(const Row& v, const Permutation& g);
LinearCode permute_code(const LinearCode& c, const Permutation& g);

/// True when the permuted code equals the target; avoids a full RREF by
/// reducing each permuted basis row against the target basis.
bool permutation_maps_code(const LinearCode& from, const Permutation& g, const LinearCode& to);

bool code_equal(const LinearCode& a, const LinearCode& b);

/// Span of the n cyclic shifts of a ring element, as a code.
LinearCode span_of_shifts(const RingElement& g);

/// n x n matrix with entry (x, y) = e_{(x-y) mod n}; its column space is the
/// ideal generated by e.
struct CirculantMatrix {
    int n = 0;
    Field field;
    std::vector<Elem> symbol; // length n

    Elem entry(int x, int y) const {
        int d = x - y;
        if (d < 0) d += n;
        return symbol[d];
    }
    RowList rows() const;
};

CirculantMatrix circulant(const RingElement& e);

/// True iff A = circulant(e) satisfies A*A = A and its column space equals c.
/// Checked with explicit matrix arithmetic, independent of the ring ops.
bool projector_verify(const RingElement& e, const LinearCode& c);

/// Color preservation: e_{x-y} = e_{g(x)-g(y)} for all x, y — membership test
/// for the automorphism group of the colored Cayley digraph of e.
bool centralizer_check(const RingElement& e, const Permutation& g);

} // namespace cyclequiv
