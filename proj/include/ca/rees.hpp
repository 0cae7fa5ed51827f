#ifndef CA_REES_HPP
#define CA_REES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ca/groebner.hpp"

namespace ca {

// Presentation of a Rees algebra R = A[It] as a quotient of k[x_1..x_n,
// y_1..y_s]. Grading: every variable has degree 1 (for forms of common
// degree c > 1 this is the renormalized y-weight); generators are also
// bihomogeneous for (total degree, y-degree) when s = n and c = 1.
struct ReesPresentation {
    enum class Origin { MaximalIdeal, Elimination };
    Origin origin = Origin::MaximalIdeal;
    int n = 0;                           // base variables x_1..x_n
    int s = 0;                           // adjoined variables y_1..y_s
    int common_degree = 1;               // shared degree of the base forms
    IdealPresentation base_ideal;        // J, in the n base variables
    std::vector<Polynomial> base_forms;  // forms generating I inside B/J
    IdealPresentation generators;        // the presentation ideal, n+s vars
};

// Splits each monomial of f (variable multiset sorted ascending) so that the
// last k slots move to the matching y-variables. Output lives in 2n
// variables; bidegree (deg f, k).
Polynomial sharp(const Polynomial& f, int k);

// Presentation of the Rees algebra of the maximal ideal of A = B/(L):
// generators are sharp(f, k) for f in L, 0 <= k <= deg f, grouped by f then
// k, followed by the 2x2 minors x_i y_j - x_j y_i for i < j.
ReesPresentation rees_generators(const std::vector<Polynomial>& L, int n);

struct MinimalityReport {
    bool minimal = false;
    std::optional<int> redundant_index;  // first redundant generator
};
// Degreewise linear-algebra check that no presentation generator lies in the
// ideal generated by the others.
MinimalityReport minimality_check(const ReesPresentation& P);

struct ReesTheoremReport {
    bool base_is_groebner = false;    // L passes Buchberger in the x-ring
    bool lifted_is_groebner = false;  // L' and the minors pass in the x,y-ring
    bool hilbert_identity = false;    // dim R_i = (i+1) dim A_i up to the bound
    int hilbert_bound = 0;
};
// Checks the lifting statement on concrete input: if L is a Groebner basis
// of (L) under reverse-lexicographic order, the lifted generators must form
// one for the presentation ideal, and the standard-monomial counts must
// satisfy the (i+1)-fold identity.
ReesTheoremReport verify_groebner_theorem(const std::vector<Polynomial>& L, int n,
                                          int hilbert_bound = 6);

struct ReducednessReport {
    bool reduced = false;
    // (element whose lead divides, element owning the divisible tail term)
    std::optional<std::pair<Polynomial, Polynomial>> witness;
};
// A basis is reduced when every lead coefficient is 1 and no term of any
// element is divisible by another element's lead term.
ReducednessReport reducedness_check(const GroebnerBasis& gb);

// The bigraded involution x_i <-> y_i (square case s = n only).
Polynomial rees_involution(const ReesPresentation& P, const Polynomial& f);

// Presentation of A[It] for I = (fs) in A = B/J, all fs of one degree,
// computed by eliminating the auxiliary variable t from J + (y_j - f_j t).
ReesPresentation rees_ideal_elimination(const IdealPresentation& J,
                                        const std::vector<Polynomial>& fs);

// Presentation of the associated graded ring G = R/IR: the presentation
// ideal plus the base forms viewed in the x-block.
IdealPresentation assoc_graded(const ReesPresentation& P);

// The base forms of P lifted into the presentation ring (x-block).
Polynomial lift_to_rees_ring(const Polynomial& f, int n, int s, const TermOrder& order);

}  // namespace ca

#endif
