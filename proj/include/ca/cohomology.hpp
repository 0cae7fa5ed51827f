#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ca/groebner.hpp"
#include "ca/resolution.hpp"

namespace ca {

// What is known about the degrees of a row below the reporting window.
enum class TailState { None, AllBelowNonzero, UnknownBelow };

// One graded component family H^i: top degree, nonzero dims, tail knowledge.
// For TailState::None the support map is the complete list of nonzero degrees,
// even where it reaches below the window.
struct ProfileRow {
    std::optional<int> top;        // absent means the row vanishes identically
    std::map<int, long> support;   // degree -> dim, nonzero entries only
    TailState tail = TailState::None;
};

// Graded local cohomology supports of a module over an n-variable ambient,
// certified on the degree window [lo, hi]. Rows absent from the map are zero.
// `asserted` marks profiles assembled from transfer identities rather than
// computed from a concrete presentation; it taints downstream reports.
struct CohomologyProfile {
    int n = 0;
    int lo = 0;
    int hi = 0;
    std::map<int, ProfileRow> rows;
    bool asserted = false;

    // Exact dimension of H^i in degree a, or nullopt when the window and tail
    // information cannot certify it.
    std::optional<long> dim_at(int i, int a) const;
    bool row_nonzero(int i) const;
    int top_index() const;                 // largest nonzero row, -1 if none
    std::optional<int> a(int i) const;     // top degree of row i
    std::string str() const;
};

// a*_j = max{a_i : i <= j} and reg_j = max{a_i + i : i <= j}, plus the totals.
struct ProfileInvariants {
    std::vector<std::optional<int>> a_star;  // index 0..n
    std::vector<std::optional<int>> reg_j;   // index 0..n
    std::optional<int> a_star_total;
    std::optional<int> reg;
};

ProfileInvariants profile_invariants(const CohomologyProfile& P);

// Presentation of the i-th right derived dual module against the twisted
// ambient: generators with degrees, relations among them. Outside 0..n the
// zero module is returned.
ModulePresentation graded_ext(const ModulePresentation& E, int i);
ModulePresentation graded_ext(const IdealPresentation& I, int i);  // of B/I

// Full profile of graded local cohomology via the dual resolution route.
// Throws when hi is below the largest top degree found.
CohomologyProfile cohomology_profile(const ModulePresentation& E, int lo, int hi);
CohomologyProfile cohomology_profile(const IdealPresentation& I, int lo, int hi);

struct SimplicialComplex {
    int vertices = 0;
    std::vector<std::vector<int>> facets;  // sorted vertex lists, antichain

    static SimplicialComplex from_facets(int vertices, std::vector<std::vector<int>> facets);
    int dim() const;  // -1 for the empty complex
};

// All faces including the empty one, closed downward from the facets.
std::set<std::vector<int>> all_faces(const SimplicialComplex& K);

// Reduced cochain cohomology dims over the given field; entry j+1 holds the
// rank in cohomological degree j, j = -1 .. dim. Empty input (void complex)
// gives an empty vector.
std::vector<long> reduced_cohomology(const std::set<std::vector<int>>& faces, const Field& k);

// Squarefree monomial ideal of the minimal non-faces in vertices-many
// variables.
IdealPresentation stanley_reisner_ideal(const SimplicialComplex& K, const Field& k);

// Face-ring local cohomology profile aggregated from link cohomology.
CohomologyProfile hochster_profile(const SimplicialComplex& K, const Field& k, int lo, int hi);

// Profile of the face ideal itself, transferred across 0 -> I -> T -> T/I -> 0.
CohomologyProfile ideal_profile_via_ses(const SimplicialComplex& K, const Field& k, int lo,
                                        int hi);

// Degree-twist: row degrees of E(t) sit t lower than those of E.
CohomologyProfile profile_shift(const CohomologyProfile& P, int t);

// Rowwise direct sum; windows are intersected, tails merged conservatively.
CohomologyProfile profile_direct_sum(const CohomologyProfile& P, const CohomologyProfile& Q);

// Profile of E[z_1..z_s]: rows move up by one per variable and each degree
// piece accumulates everything above it.
CohomologyProfile extension_shift(const CohomologyProfile& P, int s);

// Invariants of E/fE for f regular on E of degree c.
std::pair<int, int> quotient_regular_invariants(int a_star, int reg, int c);

// Bigraded dimension of the blowup algebra's cohomology at (i, a, b).
long predict_rees_bigraded(const CohomologyProfile& P, int i, int a, int b);

// Closed-form profile of R = A[mt] from the profile of A, with the derived
// ring invariants.
struct ReesProfilePrediction {
    CohomologyProfile profile;
    int dim_a = 0;
    int dim_r = 0;
    int depth = 0;
    bool cohen_macaulay = false;
    std::optional<int> a_star;
    std::optional<int> reg;
};

ReesProfilePrediction predict_rees_profile(const CohomologyProfile& P);

// Depth of the blowup of A[z] at its top ideal: s+1 or s+2 by the sign of
// a_s(A), s = depth A.
int depth_rees_polyext(const CohomologyProfile& P);

}  // namespace ca
