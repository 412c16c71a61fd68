#include "repstab/modification.hpp"

namespace repstab {

std::optional<SignedGl> mod_gl(const Partition& plus, const Partition& minus, int n,
                               std::vector<GlModStep>* trace) {
    Partition p = plus, m = minus;
    int sign = 1;
    while (p.length() + m.length() > n) {
        const int len = p.length() + m.length() - n - 1;
        StripResult rp = remove_border_strip(p, len);
        StripResult rm = remove_border_strip(m, len);
        const auto* sp = std::get_if<StripRemoval>(&rp);
        const auto* sm = std::get_if<StripRemoval>(&rm);
        if (sp == nullptr || sm == nullptr) return std::nullopt;
        sign *= ((sp->columns + sm->columns - 1) % 2 == 0) ? 1 : -1;
        p = sp->remainder;
        m = sm->remainder;
        if (trace) trace->push_back({p, m, sp->columns, sm->columns, len});
    }
    return SignedGl{sign, GlLabel{std::move(p), std::move(m)}};
}

std::optional<SignedSp> mod_sp(const Partition& lam, int n, std::vector<SpModStep>* trace) {
    Partition l = lam;
    int sign = 1;
    while (l.length() > n) {
        const int len = 2 * (l.length() - n - 1);
        StripResult r = remove_border_strip(l, len);
        const auto* s = std::get_if<StripRemoval>(&r);
        if (s == nullptr) return std::nullopt;
        sign *= (s->columns % 2 == 0) ? 1 : -1;
        l = s->remainder;
        if (trace) trace->push_back({l, s->columns, len});
    }
    return SignedSp{sign, SpLabel{std::move(l)}};
}

}  // namespace repstab
