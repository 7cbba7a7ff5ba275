// Total-degree truncated power series and rational functions in factored
// form. A RationalFn stores its denominator as a list of factors, each with
// constant term 1, mirroring how closed-form Hilbert series are written; the
// Taylor expansion inverts one factor at a time.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "minvar/poly.hpp"

namespace minvar {

class NonExpandableError : public std::runtime_error {
  public:
    explicit NonExpandableError(const std::string& what) : std::runtime_error(what) {}
};

class TruncSeries {
  public:
    TruncSeries() : bound_(0) {}
    TruncSeries(SparsePoly p, int bound) : bound_(bound), poly_(p.truncated(bound)) {}
    static TruncSeries one(int arity, int bound) {
        return TruncSeries(SparsePoly::constant(arity, 1), bound);
    }

    int bound() const { return bound_; }
    int arity() const { return poly_.arity(); }
    const SparsePoly& poly() const { return poly_; }
    Rat coeff(const Expvec& e) const { return poly_.coeff(e); }
    bool operator==(const TruncSeries& o) const {
        return bound_ == o.bound_ && poly_ == o.poly_;
    }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator*(const Rat& c) const { return TruncSeries(poly_ * c, bound_); }

    // Multiplicative inverse; requires a nonzero constant term.
    TruncSeries inverse() const;

    // One line per term: "e1 e2 ... ek : coeff", grlex ascending.
    std::string serialize() const;

  private:
    int bound_;
    SparsePoly poly_;
};

// Parses the serialize() format (blank lines and '#' comments ignored).
TruncSeries parse_series(std::istream& in, int bound);

struct RationalFn {
    SparsePoly num;
    std::vector<SparsePoly> den;  // each factor must have constant term 1
};

// Convenience builder: 1 - c * t^e.
SparsePoly one_minus(const Expvec& e, const Rat& c = Rat(1));

TruncSeries rf_expand(const RationalFn& f, int bound);

// True iff H(1/t_1,...,1/t_d) = (-1)^k (t_1...t_d)^(n^2) H(t), k=(d-1)n^2+1,
// as rational functions, decided by exact cross multiplication.
bool functional_eq_check(const RationalFn& H, int n, int d);

}  // namespace minvar
