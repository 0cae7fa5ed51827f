#ifndef CA_RESOLUTION_HPP
#define CA_RESOLUTION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ca/groebner.hpp"

namespace ca {

// Chain of free modules F_0 <- F_1 <- ... <- F_r. maps[k] holds the images
// in F_k of the generators of F_{k+1}, one column per generator.
struct Resolution {
    std::vector<GradedFreeModule> modules;
    std::vector<std::vector<VecPoly>> maps;
    bool minimal = false;
    int length() const { return static_cast<int>(modules.size()) - 1; }
};

// Minimal graded free resolution of coker(relations -> F0), computed by
// iterated syzygies and unit cancellation. Input must be homogeneous.
Resolution minimal_free_resolution(const ModulePresentation& pres);
// Resolves B/I.
Resolution minimal_free_resolution(const IdealPresentation& I);

struct BettiTable {
    int n = 0;  // ambient variable count
    std::map<std::pair<int, int>, long> entries;  // (homological i, degree j) -> rank

    static BettiTable from_resolution(const Resolution& R, int n);
    long beta(int i, int j) const;
    int max_index() const;  // largest i with a nonzero row, -1 when empty
    std::string str() const;
};

// Resolution-side invariants. Indices run 0..pd; optional values are absent
// when the defining set is empty (read: minus infinity).
struct BettiInvariants {
    std::vector<std::optional<int>> b;       // b_i = max degree in row i
    std::vector<std::optional<int>> b_star;  // b*_j = max{b_i : i >= j}
    std::vector<std::optional<int>> j_reg;   // max{b_i - i : i >= j}
    int reg = 0;                             // j_reg[0]
    int pd = 0;
    int depth = 0;                           // n - pd
    std::vector<int> extremal;               // j with b_j - j > b_i - i for all i > j
};
BettiInvariants betti_invariants(const BettiTable& T);

// Alternating sum of the Hilbert functions of the F_i at the given degree;
// equals the Hilbert function of the resolved module.
long resolution_euler_characteristic(const Resolution& R, int nvars, int degree);

// Composition checks used by tests and by the acceptance harness.
bool resolution_is_complex(const Resolution& R);
bool resolution_is_minimal(const Resolution& R);
bool resolution_maps_homogeneous(const Resolution& R);

}  // namespace ca

#endif
