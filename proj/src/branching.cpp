#include "repstab/branching.hpp"

#include <algorithm>
#include <stdexcept>

#include "repstab/lr.hpp"

namespace repstab {

VirtualDecomp restrict_gl_one(const GlLabel& label, int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    const Weight w = label_to_weight(label, n);
    VirtualDecomp out{GroupKind::GL, n - 1, {}};
    Weight mu(static_cast<size_t>(n - 1));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n - 1) {
            out.add(gl_weight_to_label(mu), 1);
            return;
        }
        for (int v = w[static_cast<size_t>(i)]; v >= w[static_cast<size_t>(i + 1)]; --v) {
            mu[static_cast<size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

VirtualDecomp restrict_sp_one(const SpLabel& label, int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    if (!label.valid_at(n)) throw std::invalid_argument("label not valid at rank");
    const SymLaurent f = sp_character(label, n);
    SymLaurent dropped(n - 1);
    for (const auto& [w, c] : f.terms())
        dropped.add_term(Weight(w.begin(), w.end() - 1), c);
    return decompose(dropped, GroupKind::Sp, n - 1);
}

bool sp_restriction_support(const SpLabel& lam, const SpLabel& mu, int n) {
    if (!lam.valid_at(n) || !mu.valid_at(n - 1)) return false;
    for (int i = 1; i <= n - 1; ++i)
        if (!(lam.lam.row(i - 1) >= mu.lam.row(i - 1) && mu.lam.row(i - 1) >= lam.lam.row(i + 1)))
            return false;
    return true;
}

bool length_drop_bound_gl(const GlLabel& lam, const GlLabel& mu, int m) {
    return mu.total_length() >= lam.total_length() - 2 * m;
}

bool length_drop_bound_sp(const SpLabel& lam, const SpLabel& mu, int m) {
    return mu.total_length() >= lam.total_length() - 2 * m;
}

long long stable_branch_gl(const GlLabel& lam, const GlLabel& mu, const GlLabel& nu) {
    long long total = 0;
    for (const auto& [gp, c1] : schur_product_expand(mu.plus, nu.plus)) {
        const int d = lam.plus.size() - gp.size();
        if (d < 0 || d != lam.minus.size() - (mu.minus.size() + nu.minus.size())) continue;
        for (const auto& [gm, c2] : schur_product_expand(mu.minus, nu.minus)) {
            for (const auto& delta : partitions_of(d)) {
                const long long c3 = lr_coefficient(lam.plus, gp, delta);
                if (!c3) continue;
                const long long c4 = lr_coefficient(lam.minus, gm, delta);
                if (!c4) continue;
                total = checked_add(total, checked_mul(checked_mul(c1, c2), checked_mul(c3, c4)));
            }
        }
    }
    return total;
}

long long stable_branch_sp(const SpLabel& lam, const SpLabel& mu, const SpLabel& nu) {
    long long total = 0;
    for (const auto& [g, c1] : schur_product_expand(mu.lam, nu.lam)) {
        const int rem = lam.lam.size() - g.size();
        if (rem < 0 || rem % 2) continue;
        for (const auto& e : even_column_partitions(rem)) {
            if (e.size() != rem) continue;
            const long long c2 = lr_coefficient(lam.lam, g, e);
            if (c2) total = checked_add(total, checked_mul(c1, c2));
        }
    }
    return total;
}

PairDecomp outer_restrict_gl(const GlLabel& label, int m, int k) {
    PairDecomp out{GroupKind::GL, m, k, {}};
    const Partition &lp = label.plus, &lm = label.minus;
    for (int sgp = 0; sgp <= lp.size(); ++sgp) {
        for (const auto& gp : partitions_of(sgp)) {
            if (!lp.contains(gp)) continue;
            for (const auto& np : partitions_of(lp.size() - sgp)) {
                const long long c3 = lr_coefficient(lp, gp, np);
                if (!c3) continue;
                for (int sgm = 0; sgm <= lm.size(); ++sgm) {
                    for (const auto& gm : partitions_of(sgm)) {
                        if (!lm.contains(gm)) continue;
                        for (const auto& nm : partitions_of(lm.size() - sgm)) {
                            const long long c4 = lr_coefficient(lm, gm, nm);
                            if (!c4) continue;
                            const auto right = mod_gl(np, nm, k);
                            if (!right) continue;
                            for (int sd = 0; sd <= std::min(sgp, sgm); ++sd) {
                                for (const auto& delta : partitions_of(sd)) {
                                    for (const auto& mp : partitions_of(sgp - sd)) {
                                        const long long c1 = lr_coefficient(gp, mp, delta);
                                        if (!c1) continue;
                                        for (const auto& mm : partitions_of(sgm - sd)) {
                                            const long long c2 = lr_coefficient(gm, mm, delta);
                                            if (!c2) continue;
                                            const auto left = mod_gl(mp, mm, m);
                                            if (!left) continue;
                                            const long long coeff = checked_mul(
                                                checked_mul(c1, c2), checked_mul(c3, c4));
                                            out.add(left->label, right->label,
                                                    left->sign * right->sign * coeff);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

PairDecomp outer_restrict_sp(const SpLabel& label, int m, int k) {
    PairDecomp out{GroupKind::Sp, m, k, {}};
    const Partition& lam = label.lam;
    for (int sg = lam.size() % 2; sg <= lam.size(); sg += 2) {
        // |lam| - |gamma| must be even: even-column partitions have even size
        for (const auto& g : partitions_of(sg)) {
            if (!lam.contains(g)) continue;
            long long c1_total = 0;
            for (const auto& e : even_column_partitions(lam.size() - sg)) {
                if (e.size() != lam.size() - sg) continue;
                c1_total = checked_add(c1_total, lr_coefficient(lam, g, e));
            }
            if (!c1_total) continue;
            for (int sm = 0; sm <= sg; ++sm) {
                for (const auto& mu : partitions_of(sm)) {
                    const auto left = mod_sp(mu, m);
                    if (!left) continue;
                    for (const auto& nu : partitions_of(sg - sm)) {
                        const long long c2 = lr_coefficient(g, mu, nu);
                        if (!c2) continue;
                        const auto right = mod_sp(nu, k);
                        if (!right) continue;
                        out.add(left->label, right->label,
                                left->sign * right->sign * checked_mul(c1_total, c2));
                    }
                }
            }
        }
    }
    return out;
}

VirtualDecomp tensor_gl(const GlLabel& a, const GlLabel& b, int n) {
    if (!a.valid_at(n) || !b.valid_at(n)) throw std::invalid_argument("label not valid at rank");
    VirtualDecomp out{GroupKind::GL, n, {}};
    const Partition &mp = a.plus, &mm = a.minus, &np = b.plus, &nm = b.minus;
    for (int sg = 0; sg <= std::min(mp.size(), nm.size()); ++sg) {
        for (const auto& g : partitions_of(sg)) {
            if (!mp.contains(g) || !nm.contains(g)) continue;
            for (const auto& ap : partitions_of(mp.size() - sg)) {
                const long long c2 = lr_coefficient(mp, ap, g);
                if (!c2) continue;
                for (const auto& bm : partitions_of(nm.size() - sg)) {
                    const long long c6 = lr_coefficient(nm, bm, g);
                    if (!c6) continue;
                    for (int sd = 0; sd <= std::min(mm.size(), np.size()); ++sd) {
                        for (const auto& d : partitions_of(sd)) {
                            if (!mm.contains(d) || !np.contains(d)) continue;
                            for (const auto& am : partitions_of(mm.size() - sd)) {
                                const long long c5 = lr_coefficient(mm, am, d);
                                if (!c5) continue;
                                for (const auto& bp : partitions_of(np.size() - sd)) {
                                    const long long c3 = lr_coefficient(np, bp, d);
                                    if (!c3) continue;
                                    const long long outer = checked_mul(checked_mul(c2, c6),
                                                                        checked_mul(c5, c3));
                                    for (const auto& [lp, c1] : schur_product_expand(ap, bp)) {
                                        for (const auto& [lm, c4] : schur_product_expand(am, bm)) {
                                            const auto modded = mod_gl(lp, lm, n);
                                            if (!modded) continue;
                                            out.add(modded->label,
                                                    modded->sign *
                                                        checked_mul(outer, checked_mul(c1, c4)));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

VirtualDecomp tensor_sp(const SpLabel& a, const SpLabel& b, int n) {
    if (!a.valid_at(n) || !b.valid_at(n)) throw std::invalid_argument("label not valid at rank");
    VirtualDecomp out{GroupKind::Sp, n, {}};
    const Partition &mu = a.lam, &nu = b.lam;
    for (int sg = 0; sg <= std::min(mu.size(), nu.size()); ++sg) {
        for (const auto& g : partitions_of(sg)) {
            if (!mu.contains(g) || !nu.contains(g)) continue;
            for (const auto& al : partitions_of(mu.size() - sg)) {
                const long long c2 = lr_coefficient(mu, al, g);
                if (!c2) continue;
                for (const auto& be : partitions_of(nu.size() - sg)) {
                    const long long c3 = lr_coefficient(nu, be, g);
                    if (!c3) continue;
                    for (const auto& [lam, c1] : schur_product_expand(al, be)) {
                        const auto modded = mod_sp(lam, n);
                        if (!modded) continue;
                        out.add(modded->label,
                                modded->sign * checked_mul(c1, checked_mul(c2, c3)));
                    }
                }
            }
        }
    }
    return out;
}

namespace {

std::map<AnyLabel, long long> wedge_at_rank(const AnyLabel& label, int k, int rank) {
    const GroupKind kind = label_kind(label);
    const SymLaurent base = kind == GroupKind::GL
                                ? gl_character(std::get<GlLabel>(label), rank)
                                : sp_character(std::get<SpLabel>(label), rank);
    return decompose(exterior_power(base, k), kind, rank).terms;
}

}  // namespace

WedgeStable wedge_stable(const AnyLabel& label, int k, int rank_cap) {
    if (k < 0) throw std::invalid_argument("negative exterior power");
    const int r0 = label_total_length(label);
    auto prev = wedge_at_rank(label, k, r0);
    for (int r = r0 + 1; r <= rank_cap; ++r) {
        auto cur = wedge_at_rank(label, k, r);
        if (cur == prev) {
            bool slack = true;
            for (const auto& [l, c] : cur)
                if (label_total_length(l) > r - 1) slack = false;
            if (slack) return WedgeStable{r - 1, std::move(cur)};
        }
        prev = std::move(cur);
    }
    throw RankCapExceededError("no stabilization up to rank " + std::to_string(rank_cap));
}

VirtualDecomp tau(const VirtualDecomp& decomp, int a) {
    if (a < 0 || a > decomp.rank) throw std::invalid_argument("tau split out of range");
    VirtualDecomp out{decomp.kind, a, {}};
    for (const auto& [label, mult] : decomp.terms) {
        PairDecomp pd = decomp.kind == GroupKind::GL
                            ? outer_restrict_gl(std::get<GlLabel>(label), a, decomp.rank - a)
                            : outer_restrict_sp(std::get<SpLabel>(label), a, decomp.rank - a);
        for (const auto& [pair, c] : pd.terms)
            if (label_trivial(pair.second)) out.add(pair.first, checked_mul(mult, c));
    }
    return out;
}

}  // namespace repstab
