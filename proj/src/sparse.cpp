#include "hhkit/sparse.hpp"

#include <algorithm>
#include <map>

namespace hhkit {

Vec zero_vec(Field f, int n) { return Vec(n, Scalar::zero(f)); }

void vec_axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (a.is_zero()) return;
    for (size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i].addmul(a, x[i]);
}

bool vec_is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

void SparseMatrix::add(int i, int j, const Scalar& v) {
    if (v.is_zero()) return;
    data_[i].emplace_back(j, v);
    normalized_ = false;
}

void SparseMatrix::normalize() const {
    if (normalized_) return;
    auto& rows = const_cast<std::vector<std::vector<std::pair<int, Scalar>>>&>(data_);
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<int, Scalar>> out;
        out.reserve(row.size());
        for (auto& e : row) {
            if (!out.empty() && out.back().first == e.first)
                out.back().second += e.second;
            else
                out.push_back(e);
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second.is_zero(); }),
                  out.end());
        row = std::move(out);
    }
    const_cast<SparseMatrix*>(this)->normalized_ = true;
}

long long SparseMatrix::nonzeros() const {
    normalize();
    long long n = 0;
    for (const auto& row : data_) n += static_cast<long long>(row.size());
    return n;
}

Vec SparseMatrix::apply(const Vec& x) const {
    normalize();
    Vec y = zero_vec(f_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) y[i] += v * x[j];
    return y;
}

Vec SparseMatrix::apply_transpose(const Vec& y) const {
    normalize();
    Vec x = zero_vec(f_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) x[j] += v * y[i];
    return x;
}

std::vector<std::vector<std::pair<int, Scalar>>> SparseMatrix::col_lists() const {
    normalize();
    std::vector<std::vector<std::pair<int, Scalar>>> cols(cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) cols[j].push_back({i, v});
    return cols;
}

// Shared elimination core.  Rows carry an optional augmented tail column
// (index == cols) holding a right-hand side that is never pivoted on.
struct SparseMatrix::Elim {
    using Row = std::vector<std::pair<int, Scalar>>;
    Field f;
    int cols;
    std::vector<Row> rows;
    std::vector<int> pivot_row_of_col;  // -1 when free
    std::vector<Row> pivot_rows;        // normalized pivot rows, by discovery order
    std::vector<int> pivot_cols;
    bool inconsistent = false;

    Elim(Field f_, int cols_) : f(f_), cols(cols_), pivot_row_of_col(cols_, -1) {}

    static int head(const Row& r) { return r.empty() ? -1 : r.front().first; }

    // y -= c * p, merging sorted rows; consumes y
    static Row axpy(Field f, Row&& y, Scalar c, const Row& p) {
        Row out;
        out.reserve(y.size() + p.size());
        size_t i = 0, j = 0;
        while (i < y.size() || j < p.size()) {
            if (j >= p.size() || (i < y.size() && y[i].first < p[j].first)) {
                out.push_back(std::move(y[i]));
                ++i;
            } else if (i >= y.size() || p[j].first < y[i].first) {
                Scalar v = Scalar::zero(f);
                v.submul(c, p[j].second);
                if (!v.is_zero()) out.emplace_back(p[j].first, std::move(v));
                ++j;
            } else {
                y[i].second.submul(c, p[j].second);
                if (!y[i].second.is_zero()) out.push_back(std::move(y[i]));
                ++i;
                ++j;
            }
        }
        return out;
    }

    void run(std::vector<Row> input) {
        // bucket rows by head column; advance buckets left to right
        std::vector<std::vector<Row>> bucket(cols + 2);
        auto place = [&](Row&& r) {
            int h = head(r);
            if (h < 0) return;
            if (h == cols) {
                inconsistent = true;  // nonzero row supported only on the rhs tail
                return;
            }
            bucket[h].push_back(std::move(r));
        };
        for (auto& r : input) place(std::move(r));
        for (int c = 0; c < cols; ++c) {
            auto& list = bucket[c];
            if (list.empty()) continue;
            size_t best = 0;
            for (size_t i = 1; i < list.size(); ++i)
                if (list[i].size() < list[best].size()) best = i;
            Row piv = std::move(list[best]);
            list.erase(list.begin() + best);
            Scalar inv = piv.front().second.inverse();
            for (auto& e : piv) e.second *= inv;
            for (auto& r : list) {
                Row next = axpy(f, std::move(r), r.front().second, piv);
                place(std::move(next));
            }
            list.clear();
            pivot_row_of_col[c] = static_cast<int>(pivot_rows.size());
            pivot_cols.push_back(c);
            pivot_rows.push_back(std::move(piv));
        }
    }

    // Clear above-pivot entries so pivot rows form the reduced echelon form.
    void back_substitute() {
        for (int k = static_cast<int>(pivot_rows.size()) - 1; k >= 0; --k) {
            int c = pivot_cols[k];
            for (int m = 0; m < k; ++m) {
                auto& row = pivot_rows[m];
                auto it = std::lower_bound(row.begin(), row.end(), c,
                                           [](const auto& e, int col) { return e.first < col; });
                if (it != row.end() && it->first == c)
                    pivot_rows[m] = axpy(f, std::move(pivot_rows[m]), it->second, pivot_rows[k]);
            }
        }
    }
};

int SparseMatrix::rank() const {
    normalize();
    Elim e(f_, cols_);
    e.run(data_);
    return static_cast<int>(e.pivot_rows.size());
}

std::vector<Vec> SparseMatrix::kernel_basis() const {
    normalize();
    Elim e(f_, cols_);
    e.run(data_);
    e.back_substitute();
    std::vector<Vec> out;
    for (int c = 0; c < cols_; ++c) {
        if (e.pivot_row_of_col[c] >= 0) continue;
        Vec v = zero_vec(f_, cols_);
        v[c] = Scalar::one(f_);
        for (size_t k = 0; k < e.pivot_rows.size(); ++k) {
            const auto& row = e.pivot_rows[k];
            auto it = std::lower_bound(row.begin(), row.end(), c,
                                       [](const auto& en, int col) { return en.first < col; });
            if (it != row.end() && it->first == c) v[e.pivot_cols[k]] = -it->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> SparseMatrix::solve(const Vec& b) const {
    normalize();
    std::vector<Elim::Row> aug = data_;
    for (int i = 0; i < rows_; ++i)
        if (!b[i].is_zero()) aug[i].emplace_back(cols_, b[i]);
    Elim e(f_, cols_);
    e.run(std::move(aug));
    if (e.inconsistent) return std::nullopt;
    e.back_substitute();
    Vec x = zero_vec(f_, cols_);
    for (size_t k = 0; k < e.pivot_rows.size(); ++k) {
        const auto& row = e.pivot_rows[k];
        if (!row.empty() && row.back().first == cols_) x[e.pivot_cols[k]] = row.back().second;
    }
    return x;
}

bool Echelon::add(const Vec& v) {
    Vec combo;
    if (track_) {
        combo = zero_vec(f_, inserted_ + 1);
        combo[inserted_] = Scalar::one(f_);
        for (auto& c : combos_) c.push_back(Scalar::zero(f_));
    }
    ++inserted_;
    Vec r = reduce(v, track_ ? &combo : nullptr);
    int piv = -1;
    for (int i = 0; i < n_; ++i)
        if (!r[i].is_zero()) {
            piv = i;
            break;
        }
    if (piv < 0) return false;
    Scalar inv = r[piv].inverse();
    for (auto& s : r) s *= inv;
    if (track_)
        for (auto& s : combo) s *= inv;
    // keep reduced form: clear this pivot from existing rows
    for (size_t k = 0; k < rows_.size(); ++k) {
        Scalar c = rows_[k][piv];
        if (c.is_zero()) continue;
        vec_axpy(rows_[k], -c, r);
        if (track_) vec_axpy(combos_[k], -c, combo);
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, piv);
    if (track_) combos_.insert(combos_.begin() + pos, std::move(combo));
    return true;
}

Vec Echelon::reduce(Vec v, Vec* combo) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        Scalar c = v[pivots_[k]];
        if (c.is_zero()) continue;
        vec_axpy(v, -c, rows_[k]);
        if (combo) vec_axpy(*combo, -c, combos_[k]);
    }
    return v;
}

bool Echelon::contains(const Vec& v) const {
    return vec_is_zero(reduce(v, nullptr));
}

std::optional<Vec> Echelon::coordinates(const Vec& v) const {
    Vec combo = zero_vec(f_, inserted_);
    Vec r = reduce(v, &combo);
    if (!vec_is_zero(r)) return std::nullopt;
    for (auto& s : combo) s = -s;
    return combo;
}

}  // namespace hhkit
