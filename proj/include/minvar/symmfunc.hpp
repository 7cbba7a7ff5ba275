// Symmetric functions: Schur polynomials via the bialternant quotient, Newton
// conversion between elementary and power sums, Schur decomposition of
// symmetric two-variable series, and the associated multiplicity series in
// the variables (t, v) with v = t*u.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "minvar/series.hpp"

namespace minvar {

// Weakly decreasing tuple of positive integers; empty = partition of 0.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
// "3,1" / "()" formats.
std::string partition_str(const Partition& p);
Partition parse_partition(const std::string& s);

struct PartitionLess {
    // By size, then first part, then remaining parts; drives serialization.
    bool operator()(const Partition& a, const Partition& b) const;
};

struct SchurDecomp {
    int arity = 2;
    int bound = 0;
    std::map<Partition, Rat, PartitionLess> mult;

    // Lines "l1,l2 : m", sorted by |lambda| then l1.
    std::string serialize() const;
};

class AsymmetryError : public std::runtime_error {
  public:
    AsymmetryError(const std::string& what, Expvec at)
        : std::runtime_error(what), offending(std::move(at)) {}
    Expvec offending;
};

// S_lambda(t_1..t_d) via V(lambda + delta) / V(delta); zero when lambda has
// more than d parts.
SparsePoly schur_poly(const Partition& lambda, int d);

// e_k as a polynomial in p_1..p_k (arity k, variable i-1 is p_i).
SparsePoly newton_e_from_p(int k);

// Two-variable decomposition m(a,b) = c(a,b) - c(a+1,b-1); input must be
// symmetric up to the bound.
SchurDecomp schur_decompose2(const TruncSeries& f, int bound);

// M'(f,t,v) = sum m(l1,l2) t^(l1-l2) v^(l2) as a 2-variable series.
TruncSeries mult_series(const SchurDecomp& dec);

// Inverse of mult_series composed with schur_decompose2: rebuilds the
// symmetric series sum m(lambda) S_lambda up to the bound.
TruncSeries mult_reconstruct(const TruncSeries& mprime, int bound);

// Exact division p / q, throws std::domain_error when the division leaves a
// remainder. q must be nonzero.
SparsePoly poly_div_exact(const SparsePoly& p, const SparsePoly& q);

}  // namespace minvar
