#pragma once

#include <map>
#include <utility>

#include "repstab/labels.hpp"
#include "repstab/sym_laurent.hpp"

namespace repstab {

/// Weakly decreasing weight (lam+_1, ..., 0, ..., -lam-_2, -lam-_1) in Z^n.
/// Throws std::invalid_argument when the label does not fit at rank n.
Weight label_to_weight(const GlLabel& label, int n);
/// Inverse on weakly decreasing vectors.
GlLabel gl_weight_to_label(const Weight& w);
SpLabel sp_weight_to_label(const Weight& w);

/// Exact character of GL_n(plus, minus): Gelfand-Tsetlin weight generation for
/// the polynomial part, times the monomial of the determinant twist.
SymLaurent gl_character(const GlLabel& label, int n);

/// Exact character of Sp_2n(lam) via the dual Jacobi-Trudi determinant
/// det(e_{lam'_i - i + j} - e_{lam'_i - i - j}) in the 2n torus eigenvalues.
/// The formula is universal: for length(lam) > n it evaluates the modified
/// class, which the engine tests exploit.
SymLaurent sp_character(const SpLabel& label, int n);

/// The type-C Weyl character formula as a ratio of antisymmetrized sums with
/// an exact-division check (hard error on failure). Secondary route kept for
/// cross-validation; O(2^n n!) so only sensible at small rank.
SymLaurent sp_character_alternant(const SpLabel& label, int n);

SymLaurent standard_character(GroupKind kind, int n);

/// Finite integer-weighted formal sum of labels; possibly virtual.
struct VirtualDecomp {
    GroupKind kind = GroupKind::GL;
    int rank = 0;
    std::map<AnyLabel, long long> terms;

    long long multiplicity(const AnyLabel& l) const {
        auto it = terms.find(l);
        return it == terms.end() ? 0 : it->second;
    }
    void add(const AnyLabel& l, long long c) {
        if (c == 0) return;
        auto [it, inserted] = terms.emplace(l, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms.erase(it);
        }
    }
    friend bool operator==(const VirtualDecomp&, const VirtualDecomp&) = default;
};

/// Unique expansion of a Weyl-invariant f into irreducible characters by
/// repeated subtraction at the lexicographically greatest dominant weight.
/// Throws NonInvariantError when a non-dominant leading term survives or the
/// iteration cap is hit.
VirtualDecomp decompose(const SymLaurent& f, GroupKind kind, int rank);

/// Sum of multiplicity * character; decompose's two-sided inverse on
/// invariant input — test hook.
SymLaurent reconstruct(const VirtualDecomp& d);

long long label_dimension(const AnyLabel& label, int rank);
long long decomp_dimension(const VirtualDecomp& d);

/// Decomposition over a product of two groups of the same kind.
struct PairDecomp {
    GroupKind kind = GroupKind::GL;
    int rank_left = 0;
    int rank_right = 0;
    std::map<std::pair<AnyLabel, AnyLabel>, long long> terms;

    void add(const AnyLabel& a, const AnyLabel& b, long long c) {
        if (c == 0) return;
        auto key = std::make_pair(a, b);
        auto [it, inserted] = terms.emplace(std::move(key), c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms.erase(it);
        }
    }
    friend bool operator==(const PairDecomp&, const PairDecomp&) = default;
};

/// Partitions the variables into the first a and the remaining rank-a (torus
/// coordinate pairs for Sp) and decomposes f as a sum of outer tensor
/// products of irreducibles of the two factors.
PairDecomp split_restrict(const SymLaurent& f, GroupKind kind, int rank, int a);

/// e_k over the weight multiset of f. Rejects virtual input.
SymLaurent exterior_power(const SymLaurent& f, int k);

/// Power-sum plethysm p_d[f]: every exponent vector scaled by d.
SymLaurent adams(const SymLaurent& f, int d);

/// Character of the degree-k component of the free Lie algebra on the
/// representation with character f:
///   (1/k) * sum over d | k of mobius(d) * adams(f, d)^(k/d).
/// Exact division by k is checked; failure signals FractionalCoefficient.
SymLaurent free_lie_component(const SymLaurent& f, int k);

}  // namespace repstab
