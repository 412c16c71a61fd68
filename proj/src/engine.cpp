#include "repstab/engine.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace repstab {

Weight label_to_weight(const GlLabel& label, int n) {
    if (!label.valid_at(n))
        throw std::invalid_argument("label needs rank >= " + std::to_string(label.total_length()));
    Weight w(static_cast<size_t>(n), 0);
    for (int i = 0; i < label.plus.length(); ++i) w[static_cast<size_t>(i)] = label.plus.row(i);
    for (int i = 0; i < label.minus.length(); ++i)
        w[static_cast<size_t>(n - 1 - i)] = -label.minus.row(i);
    return w;
}

GlLabel gl_weight_to_label(const Weight& w) {
    std::vector<int> plus, minus;
    for (int x : w)
        if (x > 0) plus.push_back(x);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        if (*it < 0) minus.push_back(-*it);
    return GlLabel{Partition(std::move(plus)), Partition(std::move(minus))};
}

SpLabel sp_weight_to_label(const Weight& w) {
    std::vector<int> lam;
    for (int x : w)
        if (x > 0) lam.push_back(x);
    return SpLabel{Partition(std::move(lam))};
}

namespace {

// Schur polynomial of nu in n variables by Gelfand-Tsetlin pattern generation:
// rows interlace downward, x_k records the k-th row-sum difference.
SymLaurent schur_polynomial(const Partition& nu, int n) {
    SymLaurent out(n);
    if (nu.length() > n) return out;
    if (n == 0) {
        out.add_term({}, 1);
        return out;
    }
    std::vector<int> top(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) top[static_cast<size_t>(i)] = nu.row(i);

    Weight exps(static_cast<size_t>(n), 0);
    // recursive descent: `level` rows remain, `cur` is the level-length prefix
    auto descend = [&](auto&& self, int level, const std::vector<int>& cur) -> void {
        if (level == 1) {
            exps[0] = cur[0];
            out.add_term(exps, 1);
            return;
        }
        std::vector<int> next(static_cast<size_t>(level - 1));
        const int cur_sum = std::accumulate(cur.begin(), cur.end(), 0);
        auto choose = [&](auto&& self2, int i) -> void {
            if (i == level - 1) {
                const int next_sum = std::accumulate(next.begin(), next.end(), 0);
                exps[static_cast<size_t>(level - 1)] = cur_sum - next_sum;
                self(self, level - 1, next);
                return;
            }
            for (int v = cur[static_cast<size_t>(i)]; v >= cur[static_cast<size_t>(i + 1)]; --v) {
                next[static_cast<size_t>(i)] = v;
                self2(self2, i + 1);
            }
        };
        choose(choose, 0);
    };
    descend(descend, n, top);
    return out;
}

// e_k of the 2n torus eigenvalues x_i, x_i^-1 for k = 0..kmax.
std::vector<SymLaurent> sp_elementaries(int n, int kmax) {
    std::vector<SymLaurent> e;
    e.reserve(static_cast<size_t>(kmax + 1));
    for (int k = 0; k <= kmax; ++k) e.push_back(SymLaurent(n));
    e[0].add_term(Weight(static_cast<size_t>(n), 0), 1);
    for (int i = 0; i < n; ++i) {
        for (int s : {1, -1}) {
            Weight v(static_cast<size_t>(n), 0);
            v[static_cast<size_t>(i)] = s;
            const SymLaurent x = SymLaurent::monomial(v, 1);
            for (int k = kmax; k >= 1; --k)
                e[static_cast<size_t>(k)] += x * e[static_cast<size_t>(k - 1)];
        }
    }
    return e;
}

// det via cofactor expansion memoized on (row, used-column mask)
SymLaurent poly_det(const std::vector<std::vector<SymLaurent>>& M, int n_vars) {
    const size_t m = M.size();
    std::map<std::pair<size_t, unsigned>, SymLaurent> memo;
    auto rec = [&](auto&& self, size_t row, unsigned mask) -> SymLaurent {
        if (row == m) return SymLaurent::constant(n_vars, 1);
        auto key = std::make_pair(row, mask);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        SymLaurent total(n_vars);
        int sgn = 1;
        for (size_t j = 0; j < m; ++j) {
            if (mask & (1u << j)) continue;
            if (!M[row][j].is_zero()) {
                SymLaurent sub = self(self, row + 1, mask | (1u << j));
                if (!sub.is_zero()) total.axpy(sgn, M[row][j] * sub);
            }
            sgn = -sgn;
        }
        return memo.emplace(key, std::move(total)).first->second;
    };
    return rec(rec, 0, 0);
}

std::mutex char_memo_mutex;
std::map<std::tuple<GroupKind, AnyLabel, int>, SymLaurent> char_memo;

SymLaurent memoized_char(GroupKind kind, const AnyLabel& label, int rank,
                         const auto& compute) {
    auto key = std::make_tuple(kind, label, rank);
    {
        std::lock_guard lock(char_memo_mutex);
        if (auto it = char_memo.find(key); it != char_memo.end()) return it->second;
    }
    SymLaurent value = compute();
    std::lock_guard lock(char_memo_mutex);
    return char_memo.emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace

SymLaurent gl_character(const GlLabel& label, int n) {
    return memoized_char(GroupKind::GL, label, n, [&] {
        Weight w = label_to_weight(label, n);
        const int twist = label.minus.empty() ? 0 : label.minus.row(0);
        std::vector<int> shifted;
        shifted.reserve(w.size());
        for (int x : w) shifted.push_back(x + twist);
        SymLaurent poly = schur_polynomial(Partition(std::move(shifted)), n);
        if (twist == 0) return poly;
        SymLaurent out(n);
        Weight e(static_cast<size_t>(n));
        for (const auto& [we, c] : poly.terms()) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = we[i] - twist;
            out.add_term(e, c);
        }
        return out;
    });
}

SymLaurent sp_character(const SpLabel& label, int n) {
    return memoized_char(GroupKind::Sp, label, n, [&] {
        const Partition& lam = label.lam;
        if (lam.empty()) return SymLaurent::constant(n, 1);
        const Partition lc = lam.conjugate();
        const int m = lc.length();
        if (m > 30) throw std::invalid_argument("partition too wide for determinant route");
        const int kmax = lc.row(0) + 2 * m;
        auto e = sp_elementaries(n, kmax);
        auto E = [&](int k) -> SymLaurent {
            if (k < 0 || k > kmax) return SymLaurent(n);
            return e[static_cast<size_t>(k)];
        };
        std::vector<std::vector<SymLaurent>> M;
        for (int i = 1; i <= m; ++i) {
            std::vector<SymLaurent> row;
            for (int j = 1; j <= m; ++j) {
                SymLaurent cell = E(lc.row(i - 1) - i + j);
                cell.axpy(-1, E(lc.row(i - 1) - i - j));
                row.push_back(std::move(cell));
            }
            M.push_back(std::move(row));
        }
        return poly_det(M, n);
    });
}

SymLaurent sp_character_alternant(const SpLabel& label, int n) {
    if (!label.valid_at(n))
        throw std::invalid_argument("alternant route needs length(lam) <= n");
    // orbit sums over the hyperoctahedral Weyl group: signed permutations of
    // the strictly decreasing positive vectors lam+rho and rho
    auto alternant = [&](const std::vector<int>& a) {
        SymLaurent out(n);
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int psign = 1;
            for (size_t i = 0; i < perm.size(); ++i)
                for (size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j]) psign = -psign;
            for (unsigned flips = 0; flips < (1u << n); ++flips) {
                int sign = psign;
                Weight w(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i) {
                    int v = a[static_cast<size_t>(perm[static_cast<size_t>(i)])];
                    if (flips & (1u << i)) {
                        v = -v;
                        sign = -sign;
                    }
                    w[static_cast<size_t>(i)] = v;
                }
                out.add_term(w, sign);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    };
    std::vector<int> top, rho;
    for (int i = 0; i < n; ++i) {
        top.push_back(label.lam.row(i) + n - i);
        rho.push_back(n - i);
    }
    SymLaurent num = alternant(top);
    SymLaurent den = alternant(rho);

    // exact multivariate division by leading-term cancellation
    SymLaurent quot(n);
    for (long long iter = 0; !num.is_zero(); ++iter) {
        if (iter >= 1000000) throw EngineError("ExactDivision", "division did not terminate");
        const auto& [nw, nc] = *num.terms().rbegin();
        const auto& [dw, dc] = *den.terms().rbegin();
        if (nc % dc != 0)
            throw EngineError("ExactDivision", "leading coefficient does not divide");
        Weight q(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) q[static_cast<size_t>(i)] = nw[static_cast<size_t>(i)] - dw[static_cast<size_t>(i)];
        const long long qc = nc / dc;
        quot.add_term(q, qc);
        SymLaurent t = SymLaurent::monomial(q, qc) * den;
        num.axpy(-1, t);
    }
    return quot;
}

SymLaurent standard_character(GroupKind kind, int n) {
    if (kind == GroupKind::GL) return gl_character(GlLabel{Partition{1}, {}}, n);
    return sp_character(SpLabel{Partition{1}}, n);
}

namespace {

bool weakly_decreasing(const Weight& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

SymLaurent character_of(GroupKind kind, const AnyLabel& label, int rank) {
    if (kind == GroupKind::GL) return gl_character(std::get<GlLabel>(label), rank);
    return sp_character(std::get<SpLabel>(label), rank);
}

constexpr long long kDecomposeCap = 1000000;

}  // namespace

VirtualDecomp decompose(const SymLaurent& f, GroupKind kind, int rank) {
    if (f.n_vars() != rank) throw std::invalid_argument("rank must equal variable count");
    VirtualDecomp out{kind, rank, {}};
    SymLaurent rest = f;
    for (long long iter = 0; !rest.is_zero(); ++iter) {
        if (iter >= kDecomposeCap)
            throw NonInvariantError("decomposition did not terminate");
        const auto& [w, c] = *rest.terms().rbegin();
        if (!weakly_decreasing(w))
            throw NonInvariantError("leading weight is not dominant");
        AnyLabel label;
        if (kind == GroupKind::GL) {
            label = gl_weight_to_label(w);
        } else {
            if (!w.empty() && w.back() < 0)
                throw NonInvariantError("leading weight is not Sp-dominant");
            label = sp_weight_to_label(w);
        }
        const long long mult = c;
        rest.axpy(-mult, character_of(kind, label, rank));
        out.add(label, mult);
    }
    return out;
}

SymLaurent reconstruct(const VirtualDecomp& d) {
    SymLaurent out(d.rank);
    for (const auto& [label, mult] : d.terms)
        out.axpy(mult, character_of(d.kind, label, d.rank));
    return out;
}

long long label_dimension(const AnyLabel& label, int rank) {
    return character_of(label_kind(label), label, rank).dimension();
}

long long decomp_dimension(const VirtualDecomp& d) {
    long long total = 0;
    for (const auto& [label, mult] : d.terms)
        total = checked_add(total, checked_mul(mult, label_dimension(label, d.rank)));
    return total;
}

PairDecomp split_restrict(const SymLaurent& f, GroupKind kind, int rank, int a) {
    if (f.n_vars() != rank) throw std::invalid_argument("rank must equal variable count");
    if (a < 0 || a > rank) throw std::invalid_argument("split point out of range");
    PairDecomp out{kind, a, rank - a, {}};
    SymLaurent rest = f;
    auto label_from = [&](const Weight& w) -> AnyLabel {
        if (!weakly_decreasing(w)) throw NonInvariantError("factor weight is not dominant");
        if (kind == GroupKind::GL) return gl_weight_to_label(w);
        if (!w.empty() && w.back() < 0) throw NonInvariantError("factor weight is not Sp-dominant");
        return sp_weight_to_label(w);
    };
    for (long long iter = 0; !rest.is_zero(); ++iter) {
        if (iter >= kDecomposeCap)
            throw NonInvariantError("split decomposition did not terminate");
        const auto& [w, c] = *rest.terms().rbegin();
        const Weight w1(w.begin(), w.begin() + a);
        const Weight w2(w.begin() + a, w.end());
        const AnyLabel l1 = label_from(w1);
        const AnyLabel l2 = label_from(w2);
        const long long mult = c;
        rest.axpy(-mult, outer_product(character_of(kind, l1, a), character_of(kind, l2, rank - a)));
        out.add(l1, l2, mult);
    }
    return out;
}

SymLaurent exterior_power(const SymLaurent& f, int k) {
    if (k < 0) throw std::invalid_argument("negative exterior power");
    if (f.has_negative_coeff())
        throw VirtualInputError("exterior power needs an honest character");
    const int n = f.n_vars();
    std::vector<SymLaurent> acc;
    acc.reserve(static_cast<size_t>(k + 1));
    acc.push_back(SymLaurent::constant(n, 1));
    for (int j = 1; j <= k; ++j) acc.push_back(SymLaurent(n));

    for (const auto& [w, m] : f.terms()) {
        // multiply the running product by (1 + t x^w)^m
        std::vector<long long> binom(static_cast<size_t>(std::min<long long>(m, k) + 1));
        binom[0] = 1;
        for (size_t i = 1; i < binom.size(); ++i)
            binom[i] = checked_mul(binom[i - 1], m - static_cast<long long>(i) + 1) / static_cast<long long>(i);
        for (int j = k; j >= 1; --j) {
            for (int i = 1; i <= j && i < static_cast<int>(binom.size()); ++i) {
                if (acc[static_cast<size_t>(j - i)].is_zero()) continue;
                Weight scaled(w.size());
                for (size_t t = 0; t < w.size(); ++t)
                    scaled[t] = w[t] * i;
                SymLaurent shift = SymLaurent::monomial(std::move(scaled), binom[static_cast<size_t>(i)]);
                acc[static_cast<size_t>(j)] += shift * acc[static_cast<size_t>(j - i)];
            }
        }
    }
    return acc[static_cast<size_t>(k)];
}

SymLaurent adams(const SymLaurent& f, int d) {
    if (d <= 0) throw std::invalid_argument("adams degree must be positive");
    SymLaurent out(f.n_vars());
    Weight scaled(static_cast<size_t>(f.n_vars()));
    for (const auto& [w, c] : f.terms()) {
        for (size_t i = 0; i < w.size(); ++i) scaled[i] = w[i] * d;
        out.add_term(scaled, c);
    }
    return out;
}

namespace {

int mobius(int d) {
    int mu = 1;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        d /= p;
        if (d % p == 0) return 0;
        mu = -mu;
    }
    if (d > 1) mu = -mu;
    return mu;
}

}  // namespace

SymLaurent free_lie_component(const SymLaurent& f, int k) {
    if (k < 1) throw std::invalid_argument("free Lie degree must be >= 1");
    if (f.has_negative_coeff())
        throw VirtualInputError("free Lie component needs an honest character");
    SymLaurent total(f.n_vars());
    for (int d = 1; d <= k; ++d) {
        if (k % d) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        SymLaurent base = adams(f, d);
        SymLaurent pw = SymLaurent::constant(f.n_vars(), 1);
        for (int i = 0; i < k / d; ++i) pw = pw * base;
        total.axpy(mu, pw);
    }
    SymLaurent out(f.n_vars());
    for (const auto& [w, c] : total.terms()) {
        if (c % k != 0)
            throw FractionalCoefficientError("free Lie coefficient not divisible by degree");
        out.add_term(w, c / k);
    }
    return out;
}

}  // namespace repstab
