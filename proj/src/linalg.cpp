#include "minvar/linalg.hpp"

#include <stdexcept>

namespace minvar {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    QMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    QMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

QMatrix QMatrix::operator*(const Rat& c) const {
    QMatrix r = *this;
    for (auto& v : r.a_) v *= c;
    return r;
}

bool QMatrix::operator<(const QMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t i = 0; i < a_.size(); ++i) {
        int c = cmp(a_[i], o.a_[i]);
        if (c) return c < 0;
    }
    return false;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    }
    return r;
}

Rat QMatrix::trace() const {
    Rat t(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

Rat QMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square");
    QMatrix m = *this;
    int n = rows_;
    Rat d(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r) {
            if (m.at(r, c) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            for (int j = c; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rat inv = Rat(1) / m.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (m.at(r, c) == 0) continue;
            Rat f = m.at(r, c) * inv;
            for (int j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return d;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square");
    int n = rows_;
    QMatrix m = *this;
    QMatrix inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r) {
            if (m.at(r, c) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != c) {
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        }
        Rat f = Rat(1) / m.at(c, c);
        for (int j = 0; j < n; ++j) {
            m.at(c, j) *= f;
            inv.at(c, j) *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m.at(r, c) == 0) continue;
            Rat g = m.at(r, c);
            for (int j = 0; j < n; ++j) {
                m.at(r, j) -= g * m.at(c, j);
                inv.at(r, j) -= g * inv.at(c, j);
            }
        }
    }
    return inv;
}

int rank(const QMatrix& m) {
    SpanBuilder span;
    for (int i = 0; i < m.rows(); ++i) {
        SpanBuilder::Row r;
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) != 0) r[j] = m.at(i, j);
        }
        span.insert(std::move(r));
    }
    return span.rank();
}

void SpanBuilder::reduce(Row& r) const {
    while (!r.empty()) {
        long c = r.begin()->first;
        auto it = pivots_.find(c);
        if (it == pivots_.end()) return;
        Rat f = r.begin()->second;
        for (const auto& [cc, vv] : it->second) {
            auto rit = r.find(cc);
            if (rit == r.end()) {
                r.emplace(cc, -f * vv);
            } else {
                rit->second -= f * vv;
                if (rit->second == 0) r.erase(rit);
            }
        }
    }
}

bool SpanBuilder::insert(Row r) {
    reduce(r);
    if (r.empty()) return false;
    long c = r.begin()->first;
    Rat inv = Rat(1) / r.begin()->second;
    for (auto& [cc, vv] : r) vv *= inv;
    pivots_.emplace(c, std::move(r));
    return true;
}

bool SpanBuilder::contains(Row r) const {
    reduce(r);
    return r.empty();
}

void ColumnIndex::see(const SparsePoly& p) {
    for (const auto& [e, c] : p.terms()) ids_.emplace(e, 0);
}

void ColumnIndex::sort_keys() {
    long i = 0;
    for (auto& [e, id] : ids_) id = i++;
}

long ColumnIndex::id(const Expvec& e) const {
    auto it = ids_.find(e);
    if (it == ids_.end()) throw std::out_of_range("unseen monomial");
    return it->second;
}

SpanBuilder::Row ColumnIndex::row(const SparsePoly& p, long block) const {
    SpanBuilder::Row r;
    long off = block * size();
    for (const auto& [e, c] : p.terms()) r[off + id(e)] = c;
    return r;
}

SparsePoly det_poly(const std::vector<std::vector<SparsePoly>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("empty matrix");
    int arity = m[0][0].arity();
    // d[mask] = determinant of the minor on rows 0..popcount(mask)-1 and the
    // column set encoded by mask.
    std::vector<SparsePoly> d(1u << n, SparsePoly(arity));
    d[0] = SparsePoly::constant(arity, 1);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int r = __builtin_popcount(mask) - 1;
        SparsePoly acc(arity);
        int pos = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!m[r][c].is_zero()) {
                SparsePoly t = m[r][c] * d[mask ^ (1u << c)];
                acc += ((r + pos) % 2 == 0) ? t : -t;
            }
            ++pos;
        }
        d[mask] = acc;
    }
    return d[(1u << n) - 1];
}

}  // namespace minvar
