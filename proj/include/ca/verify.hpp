#ifndef CA_VERIFY_HPP
#define CA_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ca/cohomology.hpp"
#include "ca/rees.hpp"
#include "ca/resolution.hpp"

namespace ca {

enum class Verdict { Holds, Fails, NotApplicable };

// One evaluated statement: both sides as computed numbers (absent values
// read as minus infinity), a verdict, and enough context to replay the run.
struct TheoremReport {
    std::string id;
    std::string inputs;            // canonical description of the inputs
    std::optional<long> left;
    std::optional<long> right;
    Verdict verdict = Verdict::Holds;
    std::string witness;           // populated when verdict is Fails
    std::string reason;            // populated when verdict is NotApplicable
    std::string note;              // recorded side data
    bool asserted_inputs = false;  // a consumed profile was asserted, not computed
    bool probabilistic = false;    // depends on a randomized construction
    std::string str() const;
};

bool any_failure(const std::vector<TheoremReport>& reports);

// Blowup of an equal-degree center inside A = B/J: evaluates the a-invariant
// sandwich, the regularity sandwich, the per-row bound against the fiber
// ring, and Betti monotonicity; when the forms are a regular sequence on A,
// also the sharpened sandwich. Degree-one forms only, so the presentation
// ring stays standard graded. Reports sorted by id.
std::vector<TheoremReport> check_section3(const IdealPresentation& J,
                                          const std::vector<Polynomial>& forms);

// The same comparison machinery specialised to the blowup R of the maximal
// graded ideal of A = B/J: partial and total a-invariant transfer, partial
// and total regularity transfer, and the resolution-side sufficient
// condition. R's profile comes from the prediction formulas; for n <= 3 a
// directly computed profile of the presentation is compared row by row too.
std::vector<TheoremReport> check_maximal_ideal_theorems(const IdealPresentation& J);

// Formula-route variant starting from a precomputed profile of A, for inputs
// that exist only as a profile. Reports carry the taint marker whenever the
// profile is asserted. label names the input in report digests.
std::vector<TheoremReport> check_maximal_ideal_profile(const CohomologyProfile& A_profile,
                                                       const std::string& label);

// Blowup of the polynomial extension A[z_1..z_s] at its maximal graded
// ideal: compares the closed-form branch value against an independent
// evaluation through extension_shift plus the regularity transfer. The
// branch threshold is c = max{0, a_i + 2} at i = max{j : reg(A) = a_j + j}.
TheoremReport check_rs_corollary(const IdealPresentation& J, int s);

// Initial-ideal comparison: profile of the blowup of B/J versus the blowup
// of B/in(J), row by row plus both totals.
std::vector<TheoremReport> check_ini(const IdealPresentation& J, const TermOrder& order);

struct GinResult {
    IdealPresentation gin;       // order-maximal initial ideal observed
    int trials = 0;
    int agreeing = 0;            // trials whose initial ideal equals gin
    int singular_resampled = 0;  // discarded non-invertible changes
    bool borel_fixed = false;
    bool stable = false;         // agreeing >= 90% of trials and Borel-fixed
    std::uint64_t seed = 0;
};

// Revlex initial ideals under seeded random invertible linear changes of
// variables; returns the order-maximal ideal observed together with the
// stability certificate. Requires the rationals or a prime field of size
// at least 32003.
GinResult gin_randomized(const IdealPresentation& J, int trials, std::uint64_t seed);

// Monomial-ideal membership is preserved by moving one variable of any
// generator to an earlier variable (characteristic-zero Borel condition).
bool borel_fixed(const IdealPresentation& I);

// Evaluates the a-invariant and regularity transfer statements on the
// randomized initial ideal, plus an exploration record comparing the two
// blowups (data only, never judged). Every report is probabilistic; an
// unstable randomized ideal downgrades all verdicts to not-applicable.
std::vector<TheoremReport> check_gin(const IdealPresentation& J, int trials,
                                     std::uint64_t seed);

}  // namespace ca

#endif
