// Sparse multivariate polynomials over Q, keyed by exponent vectors in graded
// lexicographic order. The grlex order is also the canonical vectorization
// order used by every rank computation, so it is part of the observable
// behaviour, not an implementation detail.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "minvar/rational.hpp"

namespace minvar {

using Expvec = std::vector<int>;

inline int total_deg(const Expvec& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

struct GrlexLess {
    bool operator()(const Expvec& a, const Expvec& b) const {
        int da = total_deg(a), db = total_deg(b);
        if (da != db) return da < db;
        return a < b;
    }
};

class SparsePoly {
  public:
    using Terms = std::map<Expvec, Rat, GrlexLess>;

    SparsePoly() : arity_(0) {}
    explicit SparsePoly(int arity) : arity_(arity) {}

    static SparsePoly constant(int arity, const Rat& c);
    static SparsePoly variable(int arity, int index);
    static SparsePoly monomial(const Expvec& e, const Rat& c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    const Terms& terms() const { return terms_; }
    Rat coeff(const Expvec& e) const;

    void add_term(const Expvec& e, const Rat& c);

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Rat& c) const;
    bool operator==(const SparsePoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

    // Product with all terms of total degree > bound dropped.
    SparsePoly mul_trunc(const SparsePoly& o, int bound) const;
    SparsePoly truncated(int bound) const;
    // Terms of total degree exactly k.
    SparsePoly homogeneous_part(int k) const;
    // Per-variable maximum exponents (all zero for the zero polynomial).
    Expvec max_degrees() const;

    Rat eval(const std::vector<Rat>& point) const;
    // Substitute polynomials for all variables.
    SparsePoly subst(const std::vector<SparsePoly>& images) const;
    SparsePoly derivative(int var) const;
    // x_i -> x_i^-1 cleared by t^maxdeg: mirror each exponent vector to
    // max_degrees() - e.
    SparsePoly reversed() const;

    std::string str(const std::string& stem = "x") const;

  private:
    int arity_;
    Terms terms_;
};

inline SparsePoly operator*(const Rat& c, const SparsePoly& p) { return p * c; }

}  // namespace minvar
