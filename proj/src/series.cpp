#include "minvar/series.hpp"

#include <istream>
#include <sstream>

namespace minvar {

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    int b = std::min(bound_, o.bound_);
    return TruncSeries(poly_ + o.poly_, b);
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    int b = std::min(bound_, o.bound_);
    return TruncSeries(poly_ - o.poly_, b);
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    int b = std::min(bound_, o.bound_);
    return TruncSeries(poly_.mul_trunc(o.poly_, b), b);
}

TruncSeries TruncSeries::inverse() const {
    Rat c0 = poly_.coeff(Expvec(arity(), 0));
    if (c0 == 0) throw NonExpandableError("series has zero constant term");
    // Peel homogeneous layers: b_k = -1/c0 * sum_{j=1..k} a_j b_{k-j}.
    std::vector<SparsePoly> a(bound_ + 1, SparsePoly(arity()));
    for (int k = 0; k <= bound_; ++k) a[k] = poly_.homogeneous_part(k);
    std::vector<SparsePoly> b(bound_ + 1, SparsePoly(arity()));
    Rat inv0 = Rat(1) / c0;
    b[0] = SparsePoly::constant(arity(), inv0);
    for (int k = 1; k <= bound_; ++k) {
        SparsePoly acc(arity());
        for (int j = 1; j <= k; ++j) {
            if (a[j].is_zero() || b[k - j].is_zero()) continue;
            acc += a[j] * b[k - j];
        }
        b[k] = acc * (-inv0);
    }
    SparsePoly out(arity());
    for (int k = 0; k <= bound_; ++k) out += b[k];
    return TruncSeries(out, bound_);
}

std::string TruncSeries::serialize() const {
    std::ostringstream os;
    for (const auto& [e, c] : poly_.terms()) {
        bool first = true;
        for (int x : e) {
            if (!first) os << ' ';
            first = false;
            os << x;
        }
        if (e.empty()) os << 0;  // arity-0 series: a bare constant
        os << " : " << rat_str(c) << '\n';
    }
    return os.str();
}

TruncSeries parse_series(std::istream& in, int bound) {
    SparsePoly acc;
    bool have_arity = false;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::istringstream head(line.substr(0, colon));
        Expvec e;
        int v;
        while (head >> v) e.push_back(v);
        std::istringstream tail(line.substr(colon + 1));
        std::string cs;
        if (!(tail >> cs)) throw std::invalid_argument("missing coefficient: " + line);
        if (!have_arity) {
            acc = SparsePoly(static_cast<int>(e.size()));
            have_arity = true;
        }
        acc.add_term(e, parse_rat(cs));
    }
    if (!have_arity) throw std::invalid_argument("empty series input");
    return TruncSeries(acc, bound);
}

SparsePoly one_minus(const Expvec& e, const Rat& c) {
    SparsePoly p = SparsePoly::constant(static_cast<int>(e.size()), 1);
    p.add_term(e, -c);
    return p;
}

TruncSeries rf_expand(const RationalFn& f, int bound) {
    TruncSeries acc(f.num, bound);
    for (const auto& factor : f.den) {
        if (factor.coeff(Expvec(factor.arity(), 0)) == 0) {
            throw NonExpandableError("denominator factor with zero constant term");
        }
        acc = acc * TruncSeries(factor, bound).inverse();
    }
    return acc;
}

bool functional_eq_check(const RationalFn& H, int n, int d) {
    long k = static_cast<long>(d - 1) * n * n + 1;
    Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
    // H(1/t) = rev(num) * t^(sum dens maxdeg - num maxdeg) / prod rev(den).
    // Cross-multiplied against sign * (t1..td)^(n^2) * H(t), with negative
    // exponents shifted to the opposite side.
    SparsePoly lhs = H.num.reversed();
    for (const auto& f : H.den) lhs = lhs * f;
    SparsePoly rhs = H.num * sign;
    for (const auto& f : H.den) rhs = rhs * f.reversed();

    Expvec shift(d, 0);
    for (const auto& f : H.den) {
        Expvec m = f.max_degrees();
        for (int i = 0; i < d; ++i) shift[i] += m[i];
    }
    Expvec mn = H.num.max_degrees();
    for (int i = 0; i < d; ++i) shift[i] -= mn[i] + n * n;

    Expvec lshift(d, 0), rshift(d, 0);
    for (int i = 0; i < d; ++i) {
        if (shift[i] >= 0) {
            lshift[i] = shift[i];
        } else {
            rshift[i] = -shift[i];
        }
    }
    lhs = lhs * SparsePoly::monomial(lshift, 1);
    rhs = rhs * SparsePoly::monomial(rshift, 1);
    return lhs == rhs;
}

}  // namespace minvar
