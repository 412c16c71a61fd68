#include "repstab/labels.hpp"

#include <stdexcept>

namespace repstab {

int label_size(const AnyLabel& l) {
    return std::visit([](const auto& x) { return x.size(); }, l);
}

int label_total_length(const AnyLabel& l) {
    return std::visit([](const auto& x) { return x.total_length(); }, l);
}

bool label_valid_at(const AnyLabel& l, int rank) {
    return std::visit([rank](const auto& x) { return x.valid_at(rank); }, l);
}

bool label_trivial(const AnyLabel& l) {
    return std::visit([](const auto& x) { return x.trivial(); }, l);
}

GroupKind label_kind(const AnyLabel& l) {
    return std::holds_alternative<GlLabel>(l) ? GroupKind::GL : GroupKind::Sp;
}

AnyLabel trivial_label(GroupKind kind) {
    if (kind == GroupKind::GL) return GlLabel{};
    return SpLabel{};
}

std::string format_label(const AnyLabel& l) {
    if (const auto* gl = std::get_if<GlLabel>(&l))
        return format_partition(gl->plus) + "|" + format_partition(gl->minus);
    return format_partition(std::get<SpLabel>(l).lam);
}

std::string format_group_label(const AnyLabel& l, int rank) {
    if (std::holds_alternative<GlLabel>(l))
        return "GL" + std::to_string(rank) + "(" + format_label(l) + ")";
    return "Sp" + std::to_string(2 * rank) + "(" + format_label(l) + ")";
}

AnyLabel parse_label(GroupKind kind, std::string_view text) {
    if (kind == GroupKind::Sp) {
        if (text.find('|') != std::string_view::npos)
            throw std::invalid_argument("Sp labels are a single partition, no '|'");
        return SpLabel{parse_partition(text)};
    }
    size_t bar = text.find('|');
    if (bar == std::string_view::npos)
        throw std::invalid_argument("GL labels look like [a,b]|[c]");
    if (text.find('|', bar + 1) != std::string_view::npos)
        throw std::invalid_argument("GL labels contain exactly one '|'");
    return GlLabel{parse_partition(text.substr(0, bar)),
                   parse_partition(text.substr(bar + 1))};
}

namespace {

// lexicographically decreasing on (plus, minus) part vectors
bool lex_after(const Partition& a, const Partition& b) { return b < a; }

}  // namespace

bool output_order(const AnyLabel& a, const AnyLabel& b) {
    const int sa = label_size(a), sb = label_size(b);
    if (sa != sb) return sa > sb;
    if (const auto* ga = std::get_if<GlLabel>(&a)) {
        const auto& gb = std::get<GlLabel>(b);
        if (ga->plus != gb.plus) return lex_after(ga->plus, gb.plus);
        return lex_after(ga->minus, gb.minus);
    }
    return lex_after(std::get<SpLabel>(a).lam, std::get<SpLabel>(b).lam);
}

}  // namespace repstab
