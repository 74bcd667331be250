#include "cyclequiv/linear_code.hpp"

namespace cyclequiv {

LinearCode LinearCode::from_span(const Field& f, int n, RowList rows) {
    return LinearCode(f, n, rref_canonical(f, n, std::move(rows)));
}

LinearCode LinearCode::zero(const Field& f, int n) { return LinearCode(f, n, {}); }

LinearCode LinearCode::full(const Field& f, int n) {
    RowList rows(n, Row(n, 0));
    for (int i = 0; i < n; ++i) rows[i][i] = f.one();
    return LinearCode(f, n, std::move(rows));
}

bool LinearCode::contains(Row v) const {
    if (static_cast<int>(v.size()) != n_)
        throw Error(ErrorCode::LengthMismatch, "vector length differs from code length");
    return reduce_against_rref(field_, basis_, v);
}

std::string LinearCode::key() const {
    std::string out;
    out.reserve(basis_.size() * n_ + 8);
    out.push_back(static_cast<char>(n_ & 0xff));
    out.push_back(static_cast<char>(basis_.size() & 0xff));
    for (const Row& r : basis_) {
        for (Elem c : r) {
            out.push_back(static_cast<char>(c & 0xff));
            out.push_back(static_cast<char>((c >> 8) & 0xff));
        }
    }
    return out;
}

Row permute_row(const Row& v, const Permutation& g) {
    Row out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[g[static_cast<int>(i)]] = v[i];
    return out;
}

LinearCode permute_code(const LinearCode& c, const Permutation& g) {
    if (g.degree() != c.n())
        throw Error(ErrorCode::LengthMismatch, "permutation degree differs from code length");
    RowList rows;
    rows.reserve(c.basis().size());
    for (const Row& r : c.basis()) rows.push_back(permute_row(r, g));
    return LinearCode::from_span(c.field(), c.n(), std::move(rows));
}

bool permutation_maps_code(const LinearCode& from, const Permutation& g, const LinearCode& to) {
    if (from.n() != to.n() || g.degree() != from.n())
        throw Error(ErrorCode::LengthMismatch, "length mismatch in permutation check");
    if (from.dim() != to.dim()) return false;
    for (const Row& r : from.basis()) {
        if (!to.contains(permute_row(r, g))) return false;
    }
    return true;
}

bool code_equal(const LinearCode& a, const LinearCode& b) {
    if (a.n() != b.n())
        throw Error(ErrorCode::LengthMismatch, "comparing codes of different length");
    if (!a.field().same(b.field()))
        throw Error(ErrorCode::FieldMismatch, "comparing codes over different fields");
    return a == b;
}

LinearCode span_of_shifts(const RingElement& g) {
    RowList rows;
    rows.reserve(g.n());
    for (const RingElement& s : ring_ideal_basis(g)) rows.push_back(s.coeffs());
    return LinearCode::from_span(g.field(), g.n(), std::move(rows));
}

RowList CirculantMatrix::rows() const {
    RowList out(n, Row(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) out[x][y] = entry(x, y);
    return out;
}

CirculantMatrix circulant(const RingElement& e) {
    return CirculantMatrix{e.n(), e.field(), e.coeffs()};
}

bool projector_verify(const RingElement& e, const LinearCode& c) {
    if (e.n() != c.n()) throw Error(ErrorCode::LengthMismatch, "symbol length differs from code length");
    const Field& f = e.field();
    const CirculantMatrix a = circulant(e);
    const RowList rows = a.rows();
    if (mat_mul(f, rows, rows) != rows) return false;
    // column space = row space of the transpose
    LinearCode colspace = LinearCode::from_span(f, a.n, mat_transpose(rows, a.n));
    return colspace == c;
}

bool centralizer_check(const RingElement& e, const Permutation& g) {
    if (g.degree() != e.n())
        throw Error(ErrorCode::LengthMismatch, "permutation degree differs from symbol length");
    const int n = e.n();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int d1 = x - y;
            if (d1 < 0) d1 += n;
            int d2 = g[x] - g[y];
            if (d2 < 0) d2 += n;
            if (e.coeff(d1) != e.coeff(d2)) return false;
        }
    }
    return true;
}

} // namespace cyclequiv
