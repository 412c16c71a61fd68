// Acceptance suite: one checkable criterion per section, one PASS/FAIL line
// each. Run with no argument for all criteria, or with a criterion number.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "repstab/branching.hpp"
#include "repstab/lr.hpp"
#include "repstab/stability.hpp"

using namespace repstab;

namespace {

struct Checker {
    long long failures = 0;
    long long checks = 0;
    std::ostringstream notes;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (failures <= 8) notes << "    " << what << "\n";
        }
    }
};

long long g_dim_violations = 0;
long long g_dim_checks = 0;

void check_dim(const VirtualDecomp& d, long long want) {
    ++g_dim_checks;
    if (decomp_dimension(d) != want) ++g_dim_violations;
}

void check_dim(const PairDecomp& d, long long want) {
    ++g_dim_checks;
    long long total = 0;
    for (const auto& [pair, c] : d.terms)
        total += c * label_dimension(pair.first, d.rank_left) *
                 label_dimension(pair.second, d.rank_right);
    if (total != want) ++g_dim_violations;
}

std::vector<GlLabel> gl_labels_up_to(int max_size) {
    std::vector<GlLabel> out;
    for (int s = 0; s <= max_size; ++s)
        for (int sp = 0; sp <= s; ++sp)
            for (const auto& p : partitions_of(sp))
                for (const auto& m : partitions_of(s - sp)) out.push_back(GlLabel{p, m});
    return out;
}

// ---- criterion bodies ----

bool criterion1(Checker& c) {
    const auto r = mod_gl(Partition({4, 3, 2, 2}), Partition({5, 2, 2, 1, 1}), 3);
    c.expect(r.has_value(), "mod_gl returned zero");
    if (r) {
        c.expect(r->sign == -1, "sign is not -1");
        c.expect(r->label == GlLabel{Partition({4, 1}), Partition({5})},
                 "label is not GL3([4,1]|[5])");
    }
    return c.failures == 0;
}

bool criterion2(Checker& c) {
    std::vector<SpModStep> trace;
    const auto r = mod_sp(Partition({6, 5, 4, 4, 3, 3, 2}), 2, &trace);
    c.expect(r.has_value(), "mod_sp returned zero");
    c.expect(trace.size() == 3, "expected three reduction steps");
    if (trace.size() == 3) {
        c.expect(trace[0].remainder == Partition({6, 5, 3, 2, 2, 1}),
                 "first remainder is not [6,5,3,2,2,1]");
        c.expect(trace[1].remainder == Partition({6, 5, 1, 1}),
                 "second remainder is not [6,5,1,1]");
        c.expect(trace[2].remainder == Partition({6, 5}), "third remainder is not [6,5]");
    }
    if (r) {
        c.expect(r->label == SpLabel{Partition({6, 5})}, "label is not Sp4([6,5])");
        c.expect(r->sign == -1, "sign is not -1 (stated expectation)");
        if (r->sign != -1) {
            c.notes << "    note: the three strips span 4, 3 and 1 columns, so the\n"
                       "    column-count sign rule yields (-1)^(4+3+1) = +1, and the\n"
                       "    character ring confirms +Sp4([6,5]): the sign-rule and the\n"
                       "    stated -Sp4([6,5]) cannot both hold. The implementation\n"
                       "    follows the sign rule, which criterion 4 cross-validates\n"
                       "    against the brute-force oracle.\n";
        }
    }
    return c.failures == 0;
}

bool criterion3(Checker& c) {
    const std::map<AnyLabel, long long> ia_row{
        {AnyLabel{GlLabel{Partition{1}, {}}}, 1},
        {AnyLabel{GlLabel{Partition{1, 1}, Partition{1}}}, 1}};
    const std::map<AnyLabel, long long> torelli_row{
        {AnyLabel{SpLabel{Partition{1, 1, 1}}}, 1}, {AnyLabel{SpLabel{Partition{1}}}, 1}};

    const auto ia = generate(SequenceSpec::h1_ia(), 3, 7);
    for (const auto& [n, row] : ia.rows) {
        c.expect(row == ia_row, "h1_ia row " + std::to_string(n) + " mismatch");
        long long dim = 0;
        for (const auto& [l, m] : row) dim += m * label_dimension(l, n);
        ++g_dim_checks;
        if (dim != sequence_character(SequenceSpec::h1_ia(), n).dimension()) ++g_dim_violations;
    }
    const auto torelli = generate(SequenceSpec::h1_torelli(), 3, 7);
    for (const auto& [g, row] : torelli.rows)
        c.expect(row == torelli_row, "h1_torelli row " + std::to_string(g) + " mismatch");

    const auto ia_report = detect_stability(generate(SequenceSpec::h1_ia(), 2, 7));
    c.expect(ia_report.onset && *ia_report.onset == 3, "h1_ia onset is not 3");
    const auto t_report = detect_stability(generate(SequenceSpec::h1_torelli(), 2, 7));
    c.expect(t_report.onset && *t_report.onset == 3, "h1_torelli onset is not 3");
    return c.failures == 0;
}

// shared sweep data for criteria 4, 6, 7
struct SweepResult {
    bool ran = false;
    long long oracle_mismatches = 0;
    long long corollary_violations = 0;
    long long stable_mismatches = 0;
    std::ostringstream notes;
};
SweepResult g_sweep;

void run_sweep() {
    if (g_sweep.ran) return;
    g_sweep.ran = true;
    auto& S = g_sweep;

    const auto drop_last = [](const SymLaurent& f) {
        SymLaurent out(f.n_vars() - 1);
        for (const auto& [w, c] : f.terms())
            out.add_term(Weight(w.begin(), w.end() - 1), c);
        return out;
    };

    // ---- GL side: all labels of size <= 4 at ranks 2..4 ----
    const auto gl_all = gl_labels_up_to(4);
    for (int n = 2; n <= 4; ++n) {
        std::vector<GlLabel> labels;
        for (const auto& l : gl_all)
            if (l.valid_at(n)) labels.push_back(l);

        for (const auto& a : labels) {
            const SymLaurent fa = gl_character(a, n);

            // tensor against every partner
            for (const auto& b : labels) {
                const SymLaurent fb = gl_character(b, n);
                const auto formula = tensor_gl(a, b, n);
                const auto oracle = decompose(fa * fb, GroupKind::GL, n);
                if (formula != oracle) ++S.oracle_mismatches;
                check_dim(formula, fa.dimension() * fb.dimension());
            }

            // one-step restriction
            if (n >= 1) {
                const auto rule = restrict_gl_one(a, n);
                const auto oracle = decompose(drop_last(fa), GroupKind::GL, n - 1);
                if (rule != oracle) ++S.oracle_mismatches;
                check_dim(rule, fa.dimension());
                for (const auto& [m, cnt] : rule.terms)
                    if (!length_drop_bound_gl(a, std::get<GlLabel>(m), 1))
                        ++S.corollary_violations;
            }

            // outer restriction at every split, plus tau
            for (int m = 0; m <= n; ++m) {
                const auto formula = outer_restrict_gl(a, m, n - m);
                const auto oracle = split_restrict(fa, GroupKind::GL, n, m);
                if (formula != oracle) ++S.oracle_mismatches;
                check_dim(formula, fa.dimension());

                VirtualDecomp single{GroupKind::GL, n, {}};
                single.add(a, 1);
                const auto t = tau(single, m);
                VirtualDecomp oracle_tau{GroupKind::GL, m, {}};
                for (const auto& [pair, cnt] : oracle.terms)
                    if (label_trivial(pair.second)) oracle_tau.add(pair.first, cnt);
                if (t != oracle_tau) ++S.oracle_mismatches;

                for (const auto& [pair, cnt] : formula.terms) {
                    const auto& mu = std::get<GlLabel>(pair.first);
                    const auto& nu = std::get<GlLabel>(pair.second);
                    // length drop for the left factor (n - m ranks removed)
                    if (!length_drop_bound_gl(a, mu, n - m)) ++S.corollary_violations;
                    // multiplicity-one statement for |mu| >= |lam|
                    if (label_trivial(pair.second) && mu.size() >= a.size())
                        if (cnt != (mu == a ? 1 : 0)) ++S.corollary_violations;
                    // stable branching in hypothesis: p + q <= min(m, n-m)
                    const int p = std::max({a.plus.length(), mu.plus.length(), nu.plus.length()});
                    const int q =
                        std::max({a.minus.length(), mu.minus.length(), nu.minus.length()});
                    if (p + q <= std::min(m, n - m))
                        if (stable_branch_gl(a, mu, nu) != cnt) ++S.stable_mismatches;
                }
            }
        }
    }

    // ---- Sp side: all labels of size <= 4 at ranks 1..3 ----
    for (int n = 1; n <= 3; ++n) {
        std::vector<SpLabel> labels;
        for (const auto& lam : partitions_up_to(4))
            if (lam.length() <= n) labels.push_back(SpLabel{lam});

        for (const auto& a : labels) {
            const SymLaurent fa = sp_character(a, n);

            for (const auto& b : labels) {
                const SymLaurent fb = sp_character(b, n);
                const auto formula = tensor_sp(a, b, n);
                const auto oracle = decompose(fa * fb, GroupKind::Sp, n);
                if (formula != oracle) ++S.oracle_mismatches;
                check_dim(formula, fa.dimension() * fb.dimension());
            }

            {
                const auto rule = restrict_sp_one(a, n);
                // independent route: split off one torus pair, collapse the
                // second factor by its dimension
                const auto split = split_restrict(fa, GroupKind::Sp, n, n - 1);
                VirtualDecomp collapsed{GroupKind::Sp, n - 1, {}};
                for (const auto& [pair, cnt] : split.terms)
                    collapsed.add(pair.first, cnt * label_dimension(pair.second, 1));
                if (rule != collapsed) ++S.oracle_mismatches;
                check_dim(rule, fa.dimension());
                for (const auto& [m, cnt] : rule.terms) {
                    if (!length_drop_bound_sp(a, std::get<SpLabel>(m), 1))
                        ++S.corollary_violations;
                    if (!sp_restriction_support(a, std::get<SpLabel>(m), n))
                        ++S.corollary_violations;
                }
            }

            for (int m = 0; m <= n; ++m) {
                const auto formula = outer_restrict_sp(a, m, n - m);
                const auto oracle = split_restrict(fa, GroupKind::Sp, n, m);
                if (formula != oracle) ++S.oracle_mismatches;
                check_dim(formula, fa.dimension());

                VirtualDecomp single{GroupKind::Sp, n, {}};
                single.add(a, 1);
                const auto t = tau(single, m);
                VirtualDecomp oracle_tau{GroupKind::Sp, m, {}};
                for (const auto& [pair, cnt] : oracle.terms)
                    if (label_trivial(pair.second)) oracle_tau.add(pair.first, cnt);
                if (t != oracle_tau) ++S.oracle_mismatches;

                for (const auto& [pair, cnt] : formula.terms) {
                    const auto& mu = std::get<SpLabel>(pair.first);
                    const auto& nu = std::get<SpLabel>(pair.second);
                    if (!length_drop_bound_sp(a, mu, n - m)) ++S.corollary_violations;
                    if (label_trivial(pair.second) && mu.size() >= a.size())
                        if (cnt != (mu == a ? 1 : 0)) ++S.corollary_violations;
                    const int p = std::max({a.lam.length(), mu.lam.length(), nu.lam.length()});
                    if (p <= std::min(m, n - m))
                        if (stable_branch_sp(a, mu, nu) != cnt) ++S.stable_mismatches;
                }
            }
        }
    }
}

bool criterion4(Checker& c) {
    run_sweep();
    c.expect(g_sweep.oracle_mismatches == 0,
             std::to_string(g_sweep.oracle_mismatches) + " oracle mismatches");
    return c.failures == 0;
}

bool criterion5(Checker& c) {
    const auto all = partitions_up_to(8);
    long long vanish = 0, symmetry = 0, conj = 0;
    for (const auto& lam : all)
        for (const auto& mu : all)
            for (const auto& nu : all) {
                const long long v = lr_coefficient(lam, mu, nu);
                if ((mu.size() + nu.size() != lam.size() || !lam.contains(mu) ||
                     !lam.contains(nu)) &&
                    v != 0)
                    ++vanish;
                if (v != lr_coefficient(lam, nu, mu)) ++symmetry;
                if (v != lr_coefficient(lam.conjugate(), mu.conjugate(), nu.conjugate()))
                    ++conj;
            }
    c.expect(vanish == 0, "vanishing violations: " + std::to_string(vanish));
    c.expect(symmetry == 0, "symmetry violations: " + std::to_string(symmetry));
    c.expect(conj == 0, "conjugation violations: " + std::to_string(conj));
    return c.failures == 0;
}

bool criterion6(Checker& c) {
    run_sweep();
    c.expect(g_sweep.corollary_violations == 0,
             std::to_string(g_sweep.corollary_violations) + " corollary violations");
    return c.failures == 0;
}

bool criterion7(Checker& c) {
    run_sweep();
    c.expect(g_sweep.stable_mismatches == 0,
             std::to_string(g_sweep.stable_mismatches) + " stable-branching mismatches");
    return c.failures == 0;
}

bool criterion8(Checker& c) {
    run_sweep();
    c.expect(g_dim_checks > 0, "no dimension checks ran");
    c.expect(g_dim_violations == 0,
             std::to_string(g_dim_violations) + " dimension conservation violations");
    return c.failures == 0;
}

bool criterion9(Checker& c) {
    auto necklace = [](long long m, int k) {
        auto mobius = [](int d) {
            int mu = 1;
            for (int p = 2; p * p <= d; ++p) {
                if (d % p) continue;
                d /= p;
                if (d % p == 0) return 0;
                mu = -mu;
            }
            return d > 1 ? -mu : mu;
        };
        long long total = 0;
        for (int d = 1; d <= k; ++d) {
            if (k % d) continue;
            long long pw = 1;
            for (int i = 0; i < k / d; ++i) pw *= m;
            total += mobius(d) * pw;
        }
        return total / k;
    };
    for (int m = 1; m <= 6; ++m) {
        const SymLaurent std_m = gl_character(GlLabel{Partition{1}, {}}, m);
        for (int k = 1; k <= 5; ++k)
            c.expect(free_lie_component(std_m, k).dimension() == necklace(m, k),
                     "necklace mismatch at dim " + std::to_string(m) + " degree " +
                         std::to_string(k));
    }
    for (int n = 2; n <= 6; ++n) {
        const SymLaurent h1 = sequence_character(SequenceSpec::h1_ia(), n);
        c.expect(free_lie_component(h1, 2) == exterior_power(h1, 2),
                 "L_2 != Lambda^2 at rank " + std::to_string(n));
    }
    return c.failures == 0;
}

bool criterion10(Checker& c) {
    // The headline finite-generation/stability theorems quantify over all
    // finitely generated modules and unknown graded pieces; they are not
    // desk-reproducible. The formulas their proofs consume are exactly the
    // ones swept by criteria 4-9, so this criterion records that coverage.
    run_sweep();
    c.expect(g_sweep.oracle_mismatches == 0, "criterion 4 sweep failed");
    c.expect(g_sweep.corollary_violations == 0, "criterion 6 sweep failed");
    c.expect(g_sweep.stable_mismatches == 0, "criterion 7 sweep failed");
    c.expect(g_dim_violations == 0, "criterion 8 tracking failed");
    return c.failures == 0;
}

struct Criterion {
    std::string name;
    std::function<bool(Checker&)> body;
    long long budget_ms;  // 0 = untimed
};

const std::vector<Criterion> kCriteria = {
    {"golden GL modification", criterion1, 1},
    {"golden Sp modification with trace", criterion2, 1},
    {"H1 decompositions and onsets", criterion3, 10000},
    {"oracle equivalence sweep", criterion4, 300000},
    {"LR vanishing/symmetry/conjugation to size 8", criterion5, 60000},
    {"branching corollaries on the sweep", criterion6, 0},
    {"stable branching agreement", criterion7, 0},
    {"dimension conservation everywhere", criterion8, 0},
    {"free-Lie necklace and L2=Lambda^2", criterion9, 0},
    {"headline theorems covered by property suites", criterion10, 0},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int failed = 0;
    for (size_t i = 0; i < kCriteria.size(); ++i) {
        const int num = static_cast<int>(i) + 1;
        if (only && num != only) continue;
        Checker c;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = kCriteria[i].body(c);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (kCriteria[i].budget_ms > 0 && ms > kCriteria[i].budget_ms) {
            ok = false;
            c.notes << "    over budget: " << ms << " ms > " << kCriteria[i].budget_ms
                    << " ms\n";
        }
        std::printf("criterion %d: %s (%lld ms) %s\n", num, ok ? "PASS" : "FAIL",
                    static_cast<long long>(ms), kCriteria[i].name.c_str());
        if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
        const std::string notes = c.notes.str();
        if (!notes.empty()) std::fputs(notes.c_str(), stdout);
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
