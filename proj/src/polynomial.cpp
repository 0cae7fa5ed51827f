#include "ca/polynomial.hpp"

#include <algorithm>
#include <map>

namespace ca {

Bidegree bidegree_of(const Monomial& m) {
    if (m.nvars() % 2 != 0) throw Error("bidegree needs an even ambient count");
    int n = m.nvars() / 2;
    int q = 0;
    for (int i = n; i < 2 * n; ++i) q += m.exponent(i);
    return Bidegree{m.degree(), q};
}

std::string Monomial::str(const std::vector<std::string>& names) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names.at(i);
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

Polynomial Polynomial::from_terms(int nvars, const Field& field, const TermOrder& order,
                                  std::vector<PolyTerm> terms) {
    Polynomial p(nvars, field, order);
    for (auto& t : terms) {
        if (t.mono.nvars() != nvars) throw Error("term ambient mismatch");
        if (!(t.coeff.field() == field)) throw Error("term field mismatch");
    }
    std::sort(terms.begin(), terms.end(), [&](const PolyTerm& a, const PolyTerm& b) {
        return order.compare(a.mono, b.mono) == Ordering::GT;
    });
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const PolyTerm& Polynomial::lead() const {
    if (terms_.empty()) throw Error("lead of zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].mono.degree();
    for (auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

std::optional<Bidegree> Polynomial::bidegree() const {
    if (terms_.empty()) return std::nullopt;
    Bidegree bd = bidegree_of(terms_[0].mono);
    for (auto& t : terms_)
        if (!(bidegree_of(t.mono) == bd)) return std::nullopt;
    return bd;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomial ambient mismatch");
    if (!(field_ == o.field_)) throw Error("polynomial field mismatch");
    if (!(order_ == o.order_)) throw Error("polynomial order tag mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(nvars_, field_, order_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        Ordering c = order_.compare(terms_[i].mono, o.terms_[j].mono);
        if (c == Ordering::GT) {
            r.terms_.push_back(terms_[i++]);
        } else if (c == Ordering::LT) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back(PolyTerm{std::move(s), terms_[i].mono});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scale(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(nvars_, field_, order_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

Polynomial Polynomial::mul_term(const Scalar& c, const Monomial& m) const {
    if (c.is_zero()) return Polynomial(nvars_, field_, order_);
    Polynomial r(nvars_, field_, order_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back(PolyTerm{t.coeff * c, t.mono * m});
    // Multiplying by a monomial preserves the relative order of terms.
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial acc(nvars_, field_, order_);
    for (auto& t : o.terms_) acc = acc + mul_term(t.coeff, t.mono);
    return acc;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scale(lead_coeff().inverse());
}

Polynomial Polynomial::reorder(const TermOrder& o) const {
    return from_terms(nvars_, field_, o, terms_);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw Error("substitute: wrong image count");
    for (auto& im : images)
        if (!(im.field() == field_)) throw Error("substitute: field mismatch");
    if (images.empty()) return *this;
    int out_nvars = images[0].nvars();
    const TermOrder& out_order = images[0].order();
    Polynomial acc(out_nvars, field_, out_order);
    for (auto& t : terms_) {
        Polynomial prod = from_terms(out_nvars, field_, out_order,
                                     {PolyTerm{t.coeff, Monomial(out_nvars)}});
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < t.mono.exponent(i); ++k) prod = prod * images[i];
        acc = acc + prod;
    }
    return acc;
}

Polynomial Polynomial::permute_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars_) throw Error("permute_vars: size mismatch");
    std::vector<PolyTerm> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        std::vector<std::int32_t> e(nvars_, 0);
        for (int i = 0; i < nvars_; ++i) e[perm[i]] = t.mono.exponent(i);
        out.push_back(PolyTerm{t.coeff, Monomial(std::move(e))});
    }
    return from_terms(nvars_, field_, order_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || !(field_ == o.field_) || terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].coeff == o.terms_[i].coeff) || terms_[i].mono != o.terms_[i].mono)
            return false;
    return true;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        std::string c = t.coeff.str();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        s += i == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (t.mono.is_one())
            s += c;
        else if (c == "1")
            s += t.mono.str(names);
        else
            s += c + "*" + t.mono.str(names);
    }
    return s;
}

Polynomial poly_combine(const Polynomial& f, const Polynomial& g, const Scalar& c,
                        const Monomial& m) {
    return f - g.mul_term(c, m);
}

std::vector<std::string> default_names(int nvars, bool xy_split) {
    std::vector<std::string> names;
    if (xy_split) {
        if (nvars % 2 != 0) throw Error("xy naming needs an even ambient count");
        int n = nvars / 2;
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        for (int i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
    } else {
        for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    }
    return names;
}

}  // namespace ca
