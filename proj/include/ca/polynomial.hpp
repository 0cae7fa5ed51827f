#ifndef CA_POLYNOMIAL_HPP
#define CA_POLYNOMIAL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ca/monomial.hpp"
#include "ca/order.hpp"
#include "ca/scalar.hpp"

namespace ca {

struct PolyTerm {
    Scalar coeff;
    Monomial mono;
};

// Polynomial in canonical form: no zero coefficients, terms strictly
// descending under the order tag it carries. Arithmetic requires matching
// field, ambient and order tag.
class Polynomial {
public:
    Polynomial(int nvars, const Field& field, TermOrder order)
        : nvars_(nvars), field_(field), order_(std::move(order)) {}

    static Polynomial from_terms(int nvars, const Field& field, const TermOrder& order,
                                 std::vector<PolyTerm> terms);

    int nvars() const { return nvars_; }
    const Field& field() const { return field_; }
    const TermOrder& order() const { return order_; }
    const std::vector<PolyTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const PolyTerm& lead() const;
    const Monomial& lead_mono() const { return lead().mono; }
    const Scalar& lead_coeff() const { return lead().coeff; }

    // Total degree of the lead term, -1 for zero.
    int degree() const;
    bool is_homogeneous() const;
    // Bidegree under the x/y split; nullopt if not bihomogeneous or zero.
    std::optional<Bidegree> bidegree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scale(const Scalar& c) const;
    Polynomial mul_term(const Scalar& c, const Monomial& m) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial monic() const;

    // Same polynomial re-sorted under a different order tag.
    Polynomial reorder(const TermOrder& o) const;
    // Image under variable substitution x_i -> images[i] (arbitrary
    // polynomials in the codomain ring).
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    // Image under a variable permutation: new exponent at perm[i] is the old
    // exponent at i.
    Polynomial permute_vars(const std::vector<int>& perm) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& names) const;

private:
    void check_compatible(const Polynomial& o) const;

    int nvars_;
    Field field_;
    TermOrder order_;
    std::vector<PolyTerm> terms_;
};

// f - c * m * g, the elementary reduction step.
Polynomial poly_combine(const Polynomial& f, const Polynomial& g, const Scalar& c,
                        const Monomial& m);

// Default variable names x1..xn, or x1..xn,y1..yn when split in half.
std::vector<std::string> default_names(int nvars, bool xy_split = false);

}  // namespace ca

#endif
