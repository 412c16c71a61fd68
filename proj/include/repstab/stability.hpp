#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repstab/branching.hpp"

namespace repstab {

/// Recipe for a consistent sequence of characters, one per rank.
struct SequenceSpec {
    enum class Kind { WedgeStandard, H1Ia, H1Torelli, FreeLie, Tensor };

    Kind kind = Kind::H1Ia;
    GroupKind group = GroupKind::GL;
    int degree = 0;                       // wedge k / free-Lie degree
    std::vector<SequenceSpec> children;   // FreeLie: 1, Tensor: >= 2

    static SequenceSpec wedge_standard(GroupKind g, int k);
    static SequenceSpec h1_ia();
    static SequenceSpec h1_torelli();
    static SequenceSpec free_lie(int degree, SequenceSpec base);
    static SequenceSpec tensor(std::vector<SequenceSpec> factors);
};

/// Textual spec grammar used by the CLI:
///   h1-ia | h1-torelli | wedge-standard:K@gl | wedge-standard:K@sp
///   | lie:K(<spec>) | tensor(<spec>,<spec>,...)
SequenceSpec parse_sequence_spec(std::string_view text);
std::string format_sequence_spec(const SequenceSpec& spec);

SymLaurent sequence_character(const SequenceSpec& spec, int rank);

/// Per-rank decompositions of a consistent sequence.
struct MultiplicityTable {
    GroupKind kind = GroupKind::GL;
    std::map<int, std::map<AnyLabel, long long>> rows;
};

MultiplicityTable generate(const SequenceSpec& spec, int n_lo, int n_hi);

struct StabilityReport {
    std::optional<int> onset;              // nullopt = NotDetected
    std::map<AnyLabel, long long> stable;  // empty when not detected
    int window_lo = 0;
    int window_hi = 0;
    /// Finite-window detection is evidence, not proof.
    bool finite_window_evidence = true;
    /// No multiplicity-level certificate for the Surjectivity condition.
    bool surjectivity_checked = false;
};

/// Smallest n0 with identical rows n0..n_hi; declared spurious (NotDetected)
/// when a stable constituent has no rank slack at the horizon. Requires at
/// least 3 rows (WindowTooSmall otherwise).
StabilityReport detect_stability(const MultiplicityTable& table);

/// Row n holds the decomposition of tau_{n,a}(V_n); all rows live at rank a.
MultiplicityTable tau_sequence(const SequenceSpec& spec, int a, int n_lo, int n_hi);

/// One line per (n, label, multiplicity), in CLI output order.
std::string export_table(const MultiplicityTable& table);

}  // namespace repstab
