#ifndef CA_MONOMIAL_HPP
#define CA_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ca/scalar.hpp"

namespace ca {

// Power product in a fixed number of variables, dense exponent vector with a
// cached total degree. The ambient variable count never changes once built.
class Monomial {
public:
    explicit Monomial(int nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<std::int32_t> exps)
        : e_(std::move(exps)), deg_(std::accumulate(e_.begin(), e_.end(), 0)) {
        for (auto x : e_)
            if (x < 0) throw Error("negative exponent");
    }

    static Monomial variable(int nvars, int i, int power = 1) {
        std::vector<std::int32_t> e(nvars, 0);
        e.at(i) = power;
        return Monomial(std::move(e));
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int degree() const { return deg_; }
    std::int32_t exponent(int i) const { return e_[i]; }
    const std::vector<std::int32_t>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        check(o);
        std::vector<std::int32_t> e(e_);
        for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
        Monomial m(nvars());
        m.e_ = std::move(e);
        m.deg_ = deg_ + o.deg_;
        return m;
    }

    bool divides(const Monomial& o) const {
        check(o);
        if (deg_ > o.deg_) return false;
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // Exact quotient *this / o; caller guarantees divisibility.
    Monomial divide_by(const Monomial& o) const {
        check(o);
        std::vector<std::int32_t> e(e_);
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] -= o.e_[i];
            if (e[i] < 0) throw Error("inexact monomial division");
        }
        Monomial m(nvars());
        m.e_ = std::move(e);
        m.deg_ = deg_ - o.deg_;
        return m;
    }

    Monomial lcm(const Monomial& o) const {
        check(o);
        std::vector<std::int32_t> e(e_.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e_[i], o.e_[i]);
        return Monomial(std::move(e));
    }

    bool coprime(const Monomial& o) const {
        check(o);
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    std::string str(const std::vector<std::string>& names) const;

private:
    void check(const Monomial& o) const {
        if (e_.size() != o.e_.size()) throw Error("monomial ambient mismatch");
    }

    std::vector<std::int32_t> e_;
    std::int32_t deg_;
};

// Bidegree bookkeeping for the x/y variable split of a Rees presentation
// ring: the first n variables have bidegree (1,0), the last n have (1,1).
// An x-degree p, y-degree q monomial gets (a, b) = (p + q, q).
struct Bidegree {
    int a = 0;
    int b = 0;
    bool operator==(const Bidegree&) const = default;
};

// Requires an even ambient count 2n; throws otherwise.
Bidegree bidegree_of(const Monomial& m);

}  // namespace ca

#endif
