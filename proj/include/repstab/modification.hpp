#pragma once

#include <optional>
#include <vector>

#include "repstab/labels.hpp"

namespace repstab {

/// Non-zero outcome of a modification rule: sign is +1 or -1 and the label is
/// valid at the target rank. Zero is represented by an empty optional.
struct SignedGl {
    int sign = 1;
    GlLabel label;
    friend bool operator==(const SignedGl&, const SignedGl&) = default;
};
struct SignedSp {
    int sign = 1;
    SpLabel label;
    friend bool operator==(const SignedSp&, const SignedSp&) = default;
};

/// One recorded reduction step, for trace mode.
struct GlModStep {
    Partition plus_remainder;
    Partition minus_remainder;
    int plus_columns = 0;
    int minus_columns = 0;
    int strip_length = 0;
};
struct SpModStep {
    Partition remainder;
    int columns = 0;
    int strip_length = 0;
};

/// modGL_n: while length(plus)+length(minus) > n, remove the border strips of
/// length length(plus)+length(minus)-n-1 from BOTH diagrams in the same step,
/// multiplying the running sign by (-1)^(c(R+)+c(R-)-1). Zero when either
/// strip is empty or nonexistent or either remainder is not a Young diagram.
std::optional<SignedGl> mod_gl(const Partition& plus, const Partition& minus, int n,
                               std::vector<GlModStep>* trace = nullptr);

/// modSp_2n: while length(lam) > n, remove the border strip of length
/// 2(length(lam)-n-1), multiplying the sign by (-1)^c(R). Zero on empty or
/// nonexistent strip or non-Young remainder.
std::optional<SignedSp> mod_sp(const Partition& lam, int n,
                               std::vector<SpModStep>* trace = nullptr);

}  // namespace repstab
