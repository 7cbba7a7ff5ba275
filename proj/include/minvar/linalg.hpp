// Exact linear algebra over Q: dense rational matrices and an incremental
// sparse row-echelon span. Echelon rows keep pivot coefficient 1, which in
// practice keeps entries small for the combinatorial matrices produced by the
// rank computations here.
#pragma once

#include <map>
#include <vector>

#include "minvar/poly.hpp"

namespace minvar {

class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[i * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const Rat& c) const;
    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    // Lexicographic entry order; lets closures deduplicate group elements.
    bool operator<(const QMatrix& o) const;

    QMatrix transpose() const;
    Rat trace() const;
    Rat det() const;
    bool is_invertible() const { return rows_ == cols_ && det() != 0; }
    QMatrix inverse() const;  // throws std::domain_error when singular

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

int rank(const QMatrix& m);

// Incremental row space over Q. Rows are sparse column->coefficient maps.
class SpanBuilder {
  public:
    using Row = std::map<long, Rat>;

    // Returns true when the row was independent of the current span.
    bool insert(Row r);
    bool contains(Row r) const;
    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::map<long, Row>& pivot_rows() const { return pivots_; }

  private:
    void reduce(Row& r) const;
    std::map<long, Row> pivots_;
};

// Assigns dense column ids to exponent vectors. With sort_keys(), ids follow
// grlex order over everything seen so far (call before vectorizing rows).
class ColumnIndex {
  public:
    void see(const SparsePoly& p);
    void sort_keys();
    long id(const Expvec& e) const;
    SpanBuilder::Row row(const SparsePoly& p, long block = 0) const;
    long size() const { return static_cast<long>(ids_.size()); }

  private:
    std::map<Expvec, long, GrlexLess> ids_;
};

// Determinant of a square matrix with polynomial entries (subset dynamic
// programming over column sets; division free).
SparsePoly det_poly(const std::vector<std::vector<SparsePoly>>& m);

}  // namespace minvar
