#pragma once

#include "repstab/engine.hpp"
#include "repstab/modification.hpp"

namespace repstab {

/// One-step restriction GL_n -> GL_{n-1}: multiplicity 1 for every weight
/// vector interleaving the label's weight, 0 otherwise.
VirtualDecomp restrict_gl_one(const GlLabel& label, int n);

/// Honest restriction Sp_2n -> Sp_{2n-2}, computed by the oracle: drop one
/// torus coordinate pair and decompose.
VirtualDecomp restrict_sp_one(const SpLabel& label, int n);

/// The interleaving predicate lam_i >= mu_i >= lam_{i+2} (1 <= i <= n-1)
/// characterizing nonzero one-step Sp restriction multiplicities.
bool sp_restriction_support(const SpLabel& lam, const SpLabel& mu, int n);

/// length(mu+) + length(mu-) >= length(lam+) + length(lam-) - 2m
bool length_drop_bound_gl(const GlLabel& lam, const GlLabel& mu, int m);
/// length(mu) >= length(lam) - 2m
bool length_drop_bound_sp(const SpLabel& lam, const SpLabel& mu, int m);

/// Stable branching multiplicity
///   sum over gamma+, gamma-, delta of
///   c^{gamma+}_{mu+ nu+} c^{gamma-}_{mu- nu-} c^{lam+}_{gamma+ delta} c^{lam-}_{gamma- delta}
long long stable_branch_gl(const GlLabel& lam, const GlLabel& mu, const GlLabel& nu);

/// sum over gamma and even-column e of c^{gamma}_{mu nu} c^{lam}_{gamma e}
long long stable_branch_sp(const SpLabel& lam, const SpLabel& mu, const SpLabel& nu);

/// Full outer restriction GL_{m+k} -> GL_m x GL_k through the modification
/// rules; equals the oracle split_restrict exactly.
PairDecomp outer_restrict_gl(const GlLabel& label, int m, int k);
/// Sp_{2(m+k)} -> Sp_2m x Sp_2k.
PairDecomp outer_restrict_sp(const SpLabel& label, int m, int k);

/// Inner tensor product by the six-fold Littlewood-Richardson sum pushed
/// through modGL at rank n.
VirtualDecomp tensor_gl(const GlLabel& a, const GlLabel& b, int n);
/// Triple sum pushed through modSp.
VirtualDecomp tensor_sp(const SpLabel& a, const SpLabel& b, int n);

/// Stable exterior-power decomposition: raises the rank until the abstract
/// label multiset repeats and every constituent has rank slack >= 1.
struct WedgeStable {
    int onset = 0;
    std::map<AnyLabel, long long> stable;
};
WedgeStable wedge_stable(const AnyLabel& label, int k, int rank_cap = 24);

/// tau_{n,a}: outer-restrict each constituent at (a, n-a) and keep the terms
/// whose second factor is trivial.
VirtualDecomp tau(const VirtualDecomp& decomp, int a);

}  // namespace repstab
