#ifndef CA_GROEBNER_HPP
#define CA_GROEBNER_HPP

#include <functional>
#include <memory>
#include <vector>

#include "ca/module.hpp"

namespace ca {

struct GroebnerBasis {
    TermOrder order = TermOrder::grevlex();
    std::vector<Polynomial> elements;
    bool reduced = false;
};

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Multivariate division with the deterministic strategy: always reduce the
// highest remaining term, against the first divisor in list order whose lead
// divides it. Maintains f = sum quotients[i]*divisors[i] + remainder.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const TermOrder& order);

// Buchberger with the normal pair-selection strategy (minimal lcm degree
// first, ties by pair index) and the product + chain criteria. Returns the
// reduced basis: monic, self-reduced, sorted by (degree, order) ascending.
GroebnerBasis buchberger(const IdealPresentation& I, const TermOrder& order);

// Does every S-pair of gens reduce to zero against gens itself?
bool is_groebner(const std::vector<Polynomial>& gens, const TermOrder& order);

// All degree-d monomials outside the lead-term ideal, descending under the
// basis order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int degree, int nvars);
long hilbert_function(const GroebnerBasis& gb, int degree, int nvars);

// Generators of I intersected with the subring on the kept variables
// (block elimination order, discarded block first); output lives in a ring
// on the kept variables and is the reduced grevlex basis of the intersection.
IdealPresentation eliminate(const IdealPresentation& I, const std::vector<int>& keep);

// Monomial ideal of lead terms of the reduced basis.
IdealPresentation initial_ideal(const IdealPresentation& I, const TermOrder& order);

// ---- module level ----

struct ModDivisionResult {
    std::vector<Polynomial> quotients;
    VecPoly remainder;
};

ModDivisionResult divide_module(const VecPoly& f, const std::vector<VecPoly>& divisors,
                                const ModuleOrder& order);

// Reduced module Groebner basis of the submodule generated by gens in F.
std::vector<VecPoly> buchberger_module(const std::vector<VecPoly>& gens,
                                       const GradedFreeModule& F,
                                       const std::shared_ptr<const ModuleOrder>& order);

bool is_groebner_module(const std::vector<VecPoly>& gens, const std::shared_ptr<const ModuleOrder>& order);

// Syzygies of a module Groebner basis via S-pair reductions; the result is a
// Groebner basis under the induced Schreyer order. Every S-pair must reduce
// to zero, otherwise the input was no Groebner basis and this throws.
struct SchreyerResult {
    GradedFreeModule ambient;                       // free on the gb elements
    std::vector<VecPoly> syzygies;
    std::shared_ptr<const ModuleOrder> order;       // Schreyer order on ambient
};
SchreyerResult schreyer_syzygies(const std::vector<VecPoly>& gb, const GradedFreeModule& F,
                                 const std::shared_ptr<const ModuleOrder>& order);

// Kernel of the module map source -> target with the given columns, as a
// Groebner basis of the kernel submodule (POT over base on source).
std::vector<VecPoly> kernel_of_map(const std::vector<VecPoly>& columns,
                                   const GradedFreeModule& target,
                                   const TermOrder& base);

// Quotient F0/N by the lead ideal data of a module Groebner basis of N;
// answers Hilbert-function queries degree by degree.
class QuotientModule {
public:
    QuotientModule(GradedFreeModule f0, int nvars, Field field);
    static QuotientModule from_presentation(const ModulePresentation& pres, const TermOrder& base);

    long hilbert(int degree) const;
    bool is_zero_module() const;
    // Least degree with nonzero Hilbert function; nullopt for the zero module.
    std::optional<int> indeg() const;
    // Krull dimension of the associated graded quotient (max over positions),
    // -1 for the zero module.
    int krull_dim() const;
    // Least degree t such that the Hilbert function is certified nonzero for
    // every degree >= t; nullopt when every position is artinian.
    std::optional<int> positive_from() const;
    // For a module of Krull dimension 0: largest degree with nonzero Hilbert
    // function bounded via pure powers in the lead ideals.
    int finite_support_bound() const;

    const GradedFreeModule& f0() const { return f0_; }

private:
    bool position_survives(int p) const;

    GradedFreeModule f0_;
    int nvars_;
    Field field_;
    std::vector<std::vector<Monomial>> leads_;  // per position, minimal generators
};

// Krull dimension of B/I for a monomial ideal (max independent variable set).
int monomial_ideal_dim(const std::vector<Monomial>& gens, int nvars);

// Is `g` in the degree-wise span of monomial multiples of the other elements?
// Exact graded membership via linear algebra, no Groebner step.
bool in_span_degreewise(const VecPoly& g, const std::vector<VecPoly>& others,
                        const GradedFreeModule& F);

// Indices of a minimal generating subset among homogeneous elements of F,
// scanning by ascending degree (ties by list position).
std::vector<int> minimal_generator_indices(const std::vector<VecPoly>& gens,
                                           const GradedFreeModule& F);

// Colon ideal (J : f) via syzygies of [J gens | f].
IdealPresentation colon(const IdealPresentation& J, const Polynomial& f);

std::vector<VecPoly> as_columns(const IdealPresentation& I);
VecPoly unit_vector(int rank, int pos, const Polynomial& value);
void enumerate_monomials(int nvars, int degree, const std::function<void(const Monomial&)>& fn);

}  // namespace ca

#endif
