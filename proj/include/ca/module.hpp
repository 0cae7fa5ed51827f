#ifndef CA_MODULE_HPP
#define CA_MODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ca/polynomial.hpp"

namespace ca {

// Free graded module B(-t_0) + ... + B(-t_{r-1}): summand j is generated in
// degree twists[j].
struct GradedFreeModule {
    std::vector<int> twists;
    int rank() const { return static_cast<int>(twists.size()); }
    bool operator==(const GradedFreeModule&) const = default;
};

// Element of a free module, stored as one polynomial per coordinate. All
// coordinates share field/ambient/order tags.
class VecPoly {
public:
    VecPoly(int rank, int nvars, const Field& field, const TermOrder& order)
        : coords_(rank, Polynomial(nvars, field, order)) {}
    explicit VecPoly(std::vector<Polynomial> coords) : coords_(std::move(coords)) {}

    int rank() const { return static_cast<int>(coords_.size()); }
    const Polynomial& operator[](int i) const { return coords_[i]; }
    Polynomial& operator[](int i) { return coords_[i]; }
    const std::vector<Polynomial>& coords() const { return coords_; }

    bool is_zero() const {
        for (auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    VecPoly operator+(const VecPoly& o) const { return zip(o, true); }
    VecPoly operator-(const VecPoly& o) const { return zip(o, false); }
    VecPoly mul_term(const Scalar& c, const Monomial& m) const {
        VecPoly r(*this);
        for (auto& p : r.coords_) p = p.mul_term(c, m);
        return r;
    }
    VecPoly scale(const Scalar& c) const {
        VecPoly r(*this);
        for (auto& p : r.coords_) p = p.scale(c);
        return r;
    }
    VecPoly operator-() const {
        VecPoly r(*this);
        for (auto& p : r.coords_) p = -p;
        return r;
    }

    // Degree as a homogeneous element of F (all terms t in coordinate j must
    // satisfy deg t + twists[j] equal); nullopt when inhomogeneous or zero.
    std::optional<int> degree_in(const GradedFreeModule& F) const;

    // Lead term under a module order: position, monomial, coefficient.
    struct Lead {
        int pos;
        Monomial mono;
        Scalar coeff;
    };
    std::optional<Lead> lead(const ModuleOrder& o) const;

    bool operator==(const VecPoly& o) const { return coords_ == o.coords_; }

private:
    VecPoly zip(const VecPoly& o, bool plus) const {
        if (rank() != o.rank()) throw Error("module rank mismatch");
        VecPoly r(*this);
        for (int i = 0; i < rank(); ++i) r.coords_[i] = plus ? coords_[i] + o.coords_[i] : coords_[i] - o.coords_[i];
        return r;
    }

    std::vector<Polynomial> coords_;
};

// Presentation of a graded module as coker(relations -> F0).
struct ModulePresentation {
    int nvars = 0;
    Field field;
    GradedFreeModule f0;
    std::vector<VecPoly> relations;
};

// Presentation of an ideal by generators.
struct IdealPresentation {
    int nvars = 0;
    Field field;
    std::vector<std::string> names;
    TermOrder order = TermOrder::grevlex();
    std::vector<Polynomial> gens;

    bool homogeneous() const {
        for (auto& g : gens)
            if (!g.is_homogeneous()) return false;
        return true;
    }
    ModulePresentation quotient_presentation() const;
};

}  // namespace ca

#endif
