#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "repstab/partition.hpp"

namespace repstab {

enum class GroupKind { GL, Sp };

/// (lambda+, lambda-) indexing the rational irreducible GL_n(lambda+, lambda-).
struct GlLabel {
    Partition plus;
    Partition minus;

    int size() const { return plus.size() + minus.size(); }
    int total_length() const { return plus.length() + minus.length(); }
    bool valid_at(int n) const { return total_length() <= n; }
    bool trivial() const { return plus.empty() && minus.empty(); }
    friend auto operator<=>(const GlLabel&, const GlLabel&) = default;
};

/// Single partition indexing the irreducible Sp_2n(lambda).
struct SpLabel {
    Partition lam;

    int size() const { return lam.size(); }
    int total_length() const { return lam.length(); }
    bool valid_at(int n) const { return lam.length() <= n; }
    bool trivial() const { return lam.empty(); }
    friend auto operator<=>(const SpLabel&, const SpLabel&) = default;
};

using AnyLabel = std::variant<GlLabel, SpLabel>;

int label_size(const AnyLabel& l);
int label_total_length(const AnyLabel& l);
bool label_valid_at(const AnyLabel& l, int rank);
bool label_trivial(const AnyLabel& l);
GroupKind label_kind(const AnyLabel& l);
AnyLabel trivial_label(GroupKind kind);

/// "[1,1]|[1]" for GL pairs, "[6,5]" for Sp.
std::string format_label(const AnyLabel& l);
/// "GL3([4,1]|[5])" / "Sp4([6,5])" (Sp displays 2n).
std::string format_group_label(const AnyLabel& l, int rank);
/// Parses the syntax above for the given group; throws std::invalid_argument.
AnyLabel parse_label(GroupKind kind, std::string_view text);

/// CLI output order: size decreasing, then lexicographically decreasing.
bool output_order(const AnyLabel& a, const AnyLabel& b);

}  // namespace repstab
