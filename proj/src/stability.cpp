#include "repstab/stability.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace repstab {

SequenceSpec SequenceSpec::wedge_standard(GroupKind g, int k) {
    SequenceSpec s;
    s.kind = Kind::WedgeStandard;
    s.group = g;
    s.degree = k;
    return s;
}

SequenceSpec SequenceSpec::h1_ia() {
    SequenceSpec s;
    s.kind = Kind::H1Ia;
    s.group = GroupKind::GL;
    return s;
}

SequenceSpec SequenceSpec::h1_torelli() {
    SequenceSpec s;
    s.kind = Kind::H1Torelli;
    s.group = GroupKind::Sp;
    return s;
}

SequenceSpec SequenceSpec::free_lie(int degree, SequenceSpec base) {
    if (degree < 1) throw std::invalid_argument("free Lie degree must be >= 1");
    SequenceSpec s;
    s.kind = Kind::FreeLie;
    s.group = base.group;
    s.degree = degree;
    s.children.push_back(std::move(base));
    return s;
}

SequenceSpec SequenceSpec::tensor(std::vector<SequenceSpec> factors) {
    if (factors.size() < 2) throw std::invalid_argument("tensor needs >= 2 factors");
    for (const auto& f : factors)
        if (f.group != factors.front().group)
            throw std::invalid_argument("tensor factors must share the group");
    SequenceSpec s;
    s.kind = Kind::Tensor;
    s.group = factors.front().group;
    s.children = std::move(factors);
    return s;
}

namespace {

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// splits "a,b,c" at top-level commas (not inside parentheses)
std::vector<std::string_view> split_args(std::string_view s) {
    std::vector<std::string_view> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

int parse_small_int(std::string_view s) {
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("expected an integer");
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("expected an integer");
        v = v * 10 + (c - '0');
        if (v > 1000) throw std::invalid_argument("integer out of range");
    }
    return v;
}

}  // namespace

SequenceSpec parse_sequence_spec(std::string_view text) {
    std::string_view s = trim(text);
    if (s == "h1-ia") return SequenceSpec::h1_ia();
    if (s == "h1-torelli") return SequenceSpec::h1_torelli();
    if (s.starts_with("wedge-standard:")) {
        std::string_view rest = s.substr(15);
        GroupKind g = GroupKind::GL;
        size_t at = rest.find('@');
        if (at != std::string_view::npos) {
            std::string_view gname = trim(rest.substr(at + 1));
            if (gname == "gl")
                g = GroupKind::GL;
            else if (gname == "sp")
                g = GroupKind::Sp;
            else
                throw std::invalid_argument("group must be gl or sp");
            rest = rest.substr(0, at);
        }
        return SequenceSpec::wedge_standard(g, parse_small_int(rest));
    }
    if (s.starts_with("lie:")) {
        size_t open = s.find('(');
        if (open == std::string_view::npos || !s.ends_with(")"))
            throw std::invalid_argument("lie spec looks like lie:K(<spec>)");
        int deg = parse_small_int(s.substr(4, open - 4));
        return SequenceSpec::free_lie(deg, parse_sequence_spec(s.substr(open + 1, s.size() - open - 2)));
    }
    if (s.starts_with("tensor(") && s.ends_with(")")) {
        std::vector<SequenceSpec> factors;
        for (auto part : split_args(s.substr(7, s.size() - 8)))
            factors.push_back(parse_sequence_spec(part));
        return SequenceSpec::tensor(std::move(factors));
    }
    throw std::invalid_argument("unknown sequence spec: " + std::string(s));
}

std::string format_sequence_spec(const SequenceSpec& spec) {
    switch (spec.kind) {
        case SequenceSpec::Kind::H1Ia:
            return "h1-ia";
        case SequenceSpec::Kind::H1Torelli:
            return "h1-torelli";
        case SequenceSpec::Kind::WedgeStandard:
            return "wedge-standard:" + std::to_string(spec.degree) +
                   (spec.group == GroupKind::GL ? "@gl" : "@sp");
        case SequenceSpec::Kind::FreeLie:
            return "lie:" + std::to_string(spec.degree) + "(" +
                   format_sequence_spec(spec.children.front()) + ")";
        case SequenceSpec::Kind::Tensor: {
            std::string out = "tensor(";
            for (size_t i = 0; i < spec.children.size(); ++i) {
                if (i) out += ',';
                out += format_sequence_spec(spec.children[i]);
            }
            return out + ")";
        }
    }
    return {};
}

SymLaurent sequence_character(const SequenceSpec& spec, int rank) {
    switch (spec.kind) {
        case SequenceSpec::Kind::WedgeStandard:
            return exterior_power(standard_character(spec.group, rank), spec.degree);
        case SequenceSpec::Kind::H1Ia: {
            const SymLaurent wedge2 = exterior_power(standard_character(GroupKind::GL, rank), 2);
            const SymLaurent dual = gl_character(GlLabel{{}, Partition{1}}, rank);
            return wedge2 * dual;
        }
        case SequenceSpec::Kind::H1Torelli:
            return exterior_power(standard_character(GroupKind::Sp, rank), 3);
        case SequenceSpec::Kind::FreeLie:
            return free_lie_component(sequence_character(spec.children.front(), rank), spec.degree);
        case SequenceSpec::Kind::Tensor: {
            SymLaurent out = sequence_character(spec.children.front(), rank);
            for (size_t i = 1; i < spec.children.size(); ++i)
                out = out * sequence_character(spec.children[i], rank);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

MultiplicityTable generate(const SequenceSpec& spec, int n_lo, int n_hi) {
    if (n_lo < 1) throw std::invalid_argument("ranks start at 1");
    if (n_hi < n_lo) throw std::invalid_argument("empty rank window");
    MultiplicityTable table;
    table.kind = spec.group;
    for (int n = n_lo; n <= n_hi; ++n)
        table.rows[n] = decompose(sequence_character(spec, n), spec.group, n).terms;
    return table;
}

StabilityReport detect_stability(const MultiplicityTable& table) {
    if (table.rows.size() < 3)
        throw WindowTooSmallError("need at least 3 consecutive rows");
    StabilityReport report;
    report.window_lo = table.rows.begin()->first;
    report.window_hi = table.rows.rbegin()->first;

    const auto& last_row = table.rows.rbegin()->second;
    std::optional<int> onset;
    for (const auto& [n, row] : table.rows) {
        if (row == last_row) {
            bool tail_constant = true;
            for (auto it = table.rows.find(n); it != table.rows.end(); ++it)
                if (it->second != last_row) tail_constant = false;
            if (tail_constant) {
                onset = n;
                break;
            }
        }
    }
    if (!onset) return report;

    // spurious when a stable constituent has no rank slack left at the horizon
    for (const auto& [label, mult] : last_row)
        if (label_total_length(label) > report.window_hi - 1) return report;

    report.onset = onset;
    report.stable = last_row;
    return report;
}

MultiplicityTable tau_sequence(const SequenceSpec& spec, int a, int n_lo, int n_hi) {
    if (a < 0) throw std::invalid_argument("tau rank must be >= 0");
    if (n_lo < std::max(a, 1)) throw std::invalid_argument("window must start at rank >= a");
    if (n_hi < n_lo) throw std::invalid_argument("empty rank window");
    MultiplicityTable table;
    table.kind = spec.group;
    for (int n = n_lo; n <= n_hi; ++n) {
        const VirtualDecomp vn = decompose(sequence_character(spec, n), spec.group, n);
        table.rows[n] = tau(vn, a).terms;
    }
    return table;
}

std::string export_table(const MultiplicityTable& table) {
    std::ostringstream out;
    for (const auto& [n, row] : table.rows) {
        std::vector<std::pair<AnyLabel, long long>> sorted(row.begin(), row.end());
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return output_order(a.first, b.first); });
        for (const auto& [label, mult] : sorted)
            out << n << ' ' << format_label(label) << ' ' << mult << '\n';
    }
    return out.str();
}

}  // namespace repstab
