#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "repstab/errors.hpp"

namespace repstab {

/// Exponent vector of a monomial x_1^{a_1} ... x_n^{a_n}; entries may be negative.
using Weight = std::vector<int>;

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

/// Exact symmetric Laurent polynomial over a fixed variable count, stored in
/// full monomial expansion. Immutable by convention once built by the engine.
class SymLaurent {
public:
    explicit SymLaurent(int n_vars) : n_vars_(n_vars) {}
    static SymLaurent constant(int n_vars, long long c);
    static SymLaurent monomial(Weight w, long long c = 1);

    int n_vars() const { return n_vars_; }
    const std::map<Weight, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long dimension() const;  // value at all-ones
    bool has_negative_coeff() const;

    void add_term(const Weight& w, long long c);
    SymLaurent& operator+=(const SymLaurent& g);
    /// *this += c * g
    SymLaurent& axpy(long long c, const SymLaurent& g);
    SymLaurent operator*(const SymLaurent& g) const;

    friend bool operator==(const SymLaurent&, const SymLaurent&) = default;

private:
    int n_vars_ = 0;
    std::map<Weight, long long> terms_;
};

/// f(x) * g(y) over the disjoint union of variable sets.
SymLaurent outer_product(const SymLaurent& f, const SymLaurent& g);

}  // namespace repstab
