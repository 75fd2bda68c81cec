#pragma once

#include "liexp/rational.hpp"

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace Eigen {
template <>
struct NumTraits<liexp::Rational> : GenericNumTraits<liexp::Rational> {
    typedef liexp::Rational Real;
    typedef liexp::Rational NonInteger;
    typedef liexp::Rational Nested;
    static inline Real epsilon() { return liexp::Rational(0); }
    static inline Real dummy_precision() { return liexp::Rational(0); }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 150,
        MulCost = 100
    };
};
} // namespace Eigen

namespace liexp {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// One row of a sparse exact matrix: (column, value) pairs sorted by column,
/// no zero values.
using SparseRow = std::vector<std::pair<int, Rational>>;

const Rational* row_coeff(const SparseRow& row, int col);

/// Reduced row echelon form of a sparse exact matrix.
///
/// Deterministic: pivot columns are processed in increasing order; among the
/// candidate rows for a column the sparsest one wins, ties broken by original
/// row index. Pivot entries are normalized to 1 and eliminated from every
/// other row, so `rows` ends up in RREF with pivot_cols[i] the pivot of
/// rows[i].
struct Rref {
    int ncols = 0;
    std::vector<SparseRow> rows;
    std::vector<int> pivot_cols;

    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Rref sparse_rref(std::vector<SparseRow> rows, int ncols);

/// Nullspace basis of the homogeneous system given by `rref`, one dense vector
/// per free column, ordered by free column index ascending.
std::vector<std::vector<Rational>> nullspace_basis(const Rref& rref);

/// Remainder of v after elimination against the RREF rows (v minus its
/// projection onto their span along pivot coordinates). Zero iff v lies in the
/// row span.
std::vector<Rational> reduce_against(const Rref& rref, std::vector<Rational> v);

/// Incrementally built row space with RREF invariant, used for rank/membership
/// bookkeeping and basis extension.
class RowSpace {
public:
    explicit RowSpace(int ncols) : ncols_(ncols) {}

    /// Reduces v against the current space. If a nonzero remainder is left it
    /// joins the space and true is returned.
    bool insert(const std::vector<Rational>& v);
    bool contains(const std::vector<Rational>& v) const;
    std::vector<Rational> reduce(std::vector<Rational> v) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }

private:
    int ncols_;
    std::vector<SparseRow> rows_;     // each normalized, mutually reduced
    std::vector<int> pivot_cols_;     // sorted ascending with rows_ reordered to match
};

RatMatrix dense_from_rows(const std::vector<std::vector<Rational>>& rows);

} // namespace liexp
