#include "liexp/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace liexp {

const Rational* row_coeff(const SparseRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    if (it == row.end() || it->first != col)
        return nullptr;
    return &it->second;
}

namespace {

// dst -= f * src, both sorted; result stays sorted with no zeros
SparseRow axpy(const SparseRow& dst, const Rational& f, const SparseRow& src) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, -(f * src[j].second));
            ++j;
        } else {
            Rational v = dst[i].second - f * src[j].second;
            if (!v.is_zero())
                out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void normalize_row(SparseRow& r) {
    if (r.empty())
        return;
    Rational lead = r.front().second;
    if (lead.is_one())
        return;
    for (auto& [c, v] : r)
        v /= lead;
}

} // namespace

Rref sparse_rref(std::vector<SparseRow> in_rows, int ncols) {
    Rref out;
    out.ncols = ncols;

    // active rows bucketed by leading column
    std::vector<std::vector<int>> bucket(ncols);
    std::vector<SparseRow> rows = std::move(in_rows);
    for (size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty())
            bucket[rows[i].front().first].push_back(static_cast<int>(i));

    for (int col = 0; col < ncols; ++col) {
        auto& cand = bucket[col];
        if (cand.empty())
            continue;
        int best = cand[0];
        for (int idx : cand)
            if (rows[idx].size() < rows[best].size() || (rows[idx].size() == rows[best].size() && idx < best))
                best = idx;
        SparseRow pivot = std::move(rows[best]);
        normalize_row(pivot);
        // eliminate from remaining candidates of this column
        for (int idx : cand) {
            if (idx == best)
                continue;
            SparseRow r = axpy(rows[idx], rows[idx].front().second, pivot);
            rows[idx] = std::move(r);
            if (!rows[idx].empty())
                bucket[rows[idx].front().first].push_back(idx);
        }
        cand.clear();
        // eliminate this column from previously found pivot rows
        for (auto& pr : out.rows) {
            const Rational* c = row_coeff(pr, col);
            if (c)
                pr = axpy(pr, *c, pivot);
        }
        out.rows.push_back(std::move(pivot));
        out.pivot_cols.push_back(col);
    }
    return out;
}

std::vector<std::vector<Rational>> nullspace_basis(const Rref& rref) {
    std::vector<char> is_pivot(rref.ncols, 0);
    for (int c : rref.pivot_cols)
        is_pivot[c] = 1;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < rref.ncols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(rref.ncols, Rational(0));
        v[f] = Rational(1);
        for (size_t r = 0; r < rref.rows.size(); ++r) {
            const Rational* c = row_coeff(rref.rows[r], f);
            if (c)
                v[rref.pivot_cols[r]] = -*c;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> reduce_against(const Rref& rref, std::vector<Rational> v) {
    for (size_t r = 0; r < rref.rows.size(); ++r) {
        const Rational& f = v[rref.pivot_cols[r]];
        if (f.is_zero())
            continue;
        Rational factor = f;
        for (const auto& [c, val] : rref.rows[r])
            v[c] -= factor * val;
    }
    return v;
}

bool RowSpace::insert(const std::vector<Rational>& v) {
    std::vector<Rational> rem = reduce(v);
    int lead = -1;
    for (int i = 0; i < ncols_; ++i)
        if (!rem[i].is_zero()) {
            lead = i;
            break;
        }
    if (lead < 0)
        return false;
    Rational f = rem[lead];
    SparseRow row;
    for (int i = lead; i < ncols_; ++i)
        if (!rem[i].is_zero())
            row.emplace_back(i, rem[i] / f);
    // keep existing rows reduced against the new one
    for (auto& pr : rows_) {
        const Rational* c = row_coeff(pr, lead);
        if (c)
            pr = axpy(pr, *c, row);
    }
    auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), lead);
    size_t at = static_cast<size_t>(pos - pivot_cols_.begin());
    pivot_cols_.insert(pos, lead);
    rows_.insert(rows_.begin() + at, std::move(row));
    return true;
}

std::vector<Rational> RowSpace::reduce(std::vector<Rational> v) const {
    if (static_cast<int>(v.size()) != ncols_)
        throw std::invalid_argument("RowSpace::reduce: length mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& f = v[pivot_cols_[r]];
        if (f.is_zero())
            continue;
        Rational factor = f;
        for (const auto& [c, val] : rows_[r])
            v[c] -= factor * val;
    }
    return v;
}

bool RowSpace::contains(const std::vector<Rational>& v) const {
    auto rem = reduce(v);
    for (const auto& x : rem)
        if (!x.is_zero())
            return false;
    return true;
}

RatMatrix dense_from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty())
        return RatMatrix(0, 0);
    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

} // namespace liexp
