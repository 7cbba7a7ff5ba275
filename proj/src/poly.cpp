#include "minvar/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace minvar {

SparsePoly SparsePoly::constant(int arity, const Rat& c) {
    SparsePoly p(arity);
    if (c != 0) p.terms_[Expvec(arity, 0)] = c;
    return p;
}

SparsePoly SparsePoly::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw std::out_of_range("variable index");
    SparsePoly p(arity);
    Expvec e(arity, 0);
    e[index] = 1;
    p.terms_[e] = 1;
    return p;
}

SparsePoly SparsePoly::monomial(const Expvec& e, const Rat& c) {
    SparsePoly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_[e] = c;
    return p;
}

int SparsePoly::degree() const {
    if (terms_.empty()) return -1;
    return total_deg(terms_.rbegin()->first);
}

Rat SparsePoly::coeff(const Expvec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SparsePoly::add_term(const Expvec& e, const Rat& c) {
    if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    r += o;
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    r -= o;
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    return mul_trunc(o, -1);
}

SparsePoly SparsePoly::mul_trunc(const SparsePoly& o, int bound) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    SparsePoly r(arity_);
    Expvec e(arity_);
    for (const auto& [ea, ca] : terms_) {
        int da = total_deg(ea);
        if (bound >= 0 && da > bound) continue;
        for (const auto& [eb, cb] : o.terms_) {
            if (bound >= 0 && da + total_deg(eb) > bound) continue;
            for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

SparsePoly SparsePoly::operator*(const Rat& c) const {
    SparsePoly r(arity_);
    if (c == 0) return r;
    for (const auto& [e, t] : terms_) r.terms_[e] = t * c;
    return r;
}

SparsePoly SparsePoly::truncated(int bound) const {
    SparsePoly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (total_deg(e) <= bound) r.terms_[e] = c;
    }
    return r;
}

SparsePoly SparsePoly::homogeneous_part(int k) const {
    SparsePoly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (total_deg(e) == k) r.terms_[e] = c;
    }
    return r;
}

Expvec SparsePoly::max_degrees() const {
    Expvec m(arity_, 0);
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < arity_; ++i) {
            if (e[i] > m[i]) m[i] = e[i];
        }
    }
    return m;
}

Rat SparsePoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != arity_) throw std::invalid_argument("point size");
    Rat out(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < arity_; ++i) {
            if (e[i]) t *= rat_pow(point[i], e[i]);
        }
        out += t;
    }
    return out;
}

SparsePoly SparsePoly::subst(const std::vector<SparsePoly>& images) const {
    if (static_cast<int>(images.size()) != arity_) throw std::invalid_argument("images size");
    int out_arity = images.empty() ? 0 : images[0].arity();
    SparsePoly out(out_arity);
    // Cache powers of each image across terms.
    std::vector<std::vector<SparsePoly>> pows(arity_);
    for (int i = 0; i < arity_; ++i) pows[i].push_back(SparsePoly::constant(out_arity, 1));
    for (const auto& [e, c] : terms_) {
        SparsePoly t = SparsePoly::constant(out_arity, c);
        for (int i = 0; i < arity_; ++i) {
            while (static_cast<int>(pows[i].size()) <= e[i]) {
                pows[i].push_back(pows[i].back() * images[i]);
            }
            if (e[i]) t = t * pows[i][e[i]];
        }
        out += t;
    }
    return out;
}

SparsePoly SparsePoly::derivative(int var) const {
    SparsePoly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expvec d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

SparsePoly SparsePoly::reversed() const {
    Expvec m = max_degrees();
    SparsePoly r(arity_);
    for (const auto& [e, c] : terms_) {
        Expvec d(arity_);
        for (int i = 0; i < arity_; ++i) d[i] = m[i] - e[i];
        r.add_term(d, c);
    }
    return r;
}

std::string SparsePoly::str(const std::string& stem) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool has_var = total_deg(e) > 0;
        if (!has_var || c != 1) {
            os << rat_str(c);
            if (has_var) os << "*";
        }
        bool firstv = true;
        for (int i = 0; i < arity_; ++i) {
            if (!e[i]) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << stem << i + 1;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace minvar
