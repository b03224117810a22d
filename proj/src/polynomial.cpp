#include "linklab/polynomial.hpp"

#include <algorithm>
#include <map>

namespace linklab {

Polynomial Polynomial::make(RingDescriptor ring, std::vector<Term> terms) {
    const Field& F = ring.field();
    for (const Term& t : terms)
        if (t.mono.num_vars() != ring.num_vars())
            throw DimensionError("term monomial does not fit the ring");
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const Term& a, const Term& b) {
                         return ring.compare(a.mono, b.mono) ==
                                std::strong_ordering::greater;
                     });
    Polynomial p(ring);
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
            if (F.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        } else if (!F.is_zero(t.coeff)) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::constant(const RingDescriptor& ring, const Coeff& c) {
    Polynomial p(ring);
    if (!ring.field().is_zero(c))
        p.terms_.push_back({c, Monomial::one(ring.num_vars())});
    return p;
}

Polynomial Polynomial::constant(const RingDescriptor& ring, std::int64_t k) {
    return constant(ring, ring.field().from_int(k));
}

Polynomial Polynomial::variable(const RingDescriptor& ring, std::size_t i,
                                std::int32_t exp) {
    if (i >= ring.num_vars())
        throw DimensionError("variable index out of range");
    Polynomial p(ring);
    if (exp == 0) return constant(ring, ring.field().one());
    p.terms_.push_back(
        {ring.field().one(), Monomial::variable(ring.num_vars(), i, exp)});
    return p;
}

Polynomial Polynomial::from_monomial(const RingDescriptor& ring,
                                     const Coeff& c, Monomial m) {
    if (m.num_vars() != ring.num_vars())
        throw DimensionError("monomial does not fit the ring");
    Polynomial p(ring);
    if (!ring.field().is_zero(c)) p.terms_.push_back({c, std::move(m)});
    return p;
}

std::int64_t Polynomial::degree() const {
    std::int64_t d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::int64_t d = terms_[0].mono.total_degree();
    for (const Term& t : terms_)
        if (t.mono.total_degree() != d) return false;
    return true;
}

namespace {

// merge of two descending term lists, combining b's terms via f(coeffs)
template <typename Combine>
std::vector<Term> merge_terms(const RingDescriptor& ring,
                              const std::vector<Term>& a,
                              const std::vector<Term>& b, Combine&& combine) {
    const Field& F = ring.field();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto c = ring.compare(a[i].mono, b[j].mono);
        if (c == std::strong_ordering::greater) {
            out.push_back(a[i++]);
        } else if (c == std::strong_ordering::less) {
            Coeff v = combine(F.zero(), b[j].coeff);
            if (!F.is_zero(v)) out.push_back({v, b[j].mono});
            ++j;
        } else {
            Coeff v = combine(a[i].coeff, b[j].coeff);
            if (!F.is_zero(v)) out.push_back({v, a[i].mono});
            ++i;
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) {
        Coeff v = combine(F.zero(), b[j].coeff);
        if (!F.is_zero(v)) out.push_back({v, b[j].mono});
        ++j;
    }
    return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    const Field& F = ring_.field();
    auto merged = merge_terms(ring_, terms_, o.terms_,
                              [&](const Coeff& x, const Coeff& y) {
                                  return F.add(x, y);
                              });
    Polynomial p(ring_);
    p.terms_ = std::move(merged);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    const Field& F = ring_.field();
    auto merged = merge_terms(ring_, terms_, o.terms_,
                              [&](const Coeff& x, const Coeff& y) {
                                  return F.sub(x, y);
                              });
    Polynomial p(ring_);
    p.terms_ = std::move(merged);
    return p;
}

Polynomial Polynomial::operator-() const {
    const Field& F = ring_.field();
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({F.neg(t.coeff), t.mono});
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    const Field& F = ring_.field();
    auto cmp = [this](const Monomial& a, const Monomial& b) {
        return ring_.compare(a, b) == std::strong_ordering::greater;
    };
    std::map<Monomial, Coeff, decltype(cmp)> acc(cmp);
    for (const Term& s : terms_) {
        for (const Term& t : o.terms_) {
            Monomial m = s.mono * t.mono;
            Coeff c = F.mul(s.coeff, t.coeff);
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), std::move(c));
            } else {
                it->second = F.add(it->second, c);
            }
        }
    }
    Polynomial p(ring_);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!F.is_zero(c)) p.terms_.push_back({c, m});
    return p;
}

Polynomial Polynomial::scalar_mul(const Coeff& c) const {
    const Field& F = ring_.field();
    Polynomial p(ring_);
    if (F.is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        p.terms_.push_back({F.mul(c, t.coeff), t.mono});
    return p;
}

Polynomial Polynomial::term_mul(const Coeff& c, const Monomial& m) const {
    const Field& F = ring_.field();
    Polynomial p(ring_);
    if (F.is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        p.terms_.push_back({F.mul(c, t.coeff), t.mono * m});
    return p;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const Field& F = ring_.field();
    if (F.is_one(leading().coeff)) return *this;
    return scalar_mul(F.inv(leading().coeff));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial r = constant(ring_, ring_.field().one());
    Polynomial b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Polynomial axpy_sub(const Polynomial& h, const Coeff& c, const Monomial& m,
                    const Polynomial& g) {
    return h - g.term_mul(c, m);
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const Field& F = ring_.field();
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        std::string cs = F.to_string(t.coeff);
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string ms;
        for (std::size_t i = 0; i < ring_.num_vars(); ++i) {
            std::int32_t e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!ms.empty()) ms += "*";
            ms += ring_.var_name(i);
            if (e > 1) ms += "^" + std::to_string(e);
        }
        if (ms.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += ms;
        } else {
            out += cs + "*" + ms;
        }
    }
    return out;
}

}  // namespace linklab
