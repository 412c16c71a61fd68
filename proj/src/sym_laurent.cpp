#include "repstab/sym_laurent.hpp"

#include <cassert>
#include <stdexcept>

namespace repstab {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
    return r;
}

SymLaurent SymLaurent::constant(int n_vars, long long c) {
    SymLaurent f(n_vars);
    if (c != 0) f.terms_.emplace(Weight(static_cast<size_t>(n_vars), 0), c);
    return f;
}

SymLaurent SymLaurent::monomial(Weight w, long long c) {
    SymLaurent f(static_cast<int>(w.size()));
    if (c != 0) f.terms_.emplace(std::move(w), c);
    return f;
}

long long SymLaurent::dimension() const {
    long long d = 0;
    for (const auto& [w, c] : terms_) d = checked_add(d, c);
    return d;
}

bool SymLaurent::has_negative_coeff() const {
    for (const auto& [w, c] : terms_)
        if (c < 0) return true;
    return false;
}

void SymLaurent::add_term(const Weight& w, long long c) {
    assert(static_cast<int>(w.size()) == n_vars_);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

SymLaurent& SymLaurent::operator+=(const SymLaurent& g) { return axpy(1, g); }

SymLaurent& SymLaurent::axpy(long long c, const SymLaurent& g) {
    if (g.n_vars_ != n_vars_) throw std::invalid_argument("variable count mismatch");
    if (c == 0) return *this;
    for (const auto& [w, gc] : g.terms_) add_term(w, checked_mul(c, gc));
    return *this;
}

SymLaurent SymLaurent::operator*(const SymLaurent& g) const {
    if (g.n_vars_ != n_vars_) throw std::invalid_argument("variable count mismatch");
    SymLaurent out(n_vars_);
    Weight w(static_cast<size_t>(n_vars_));
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : g.terms_) {
            for (size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
            out.add_term(w, checked_mul(ca, cb));
        }
    }
    return out;
}

SymLaurent outer_product(const SymLaurent& f, const SymLaurent& g) {
    SymLaurent out(f.n_vars() + g.n_vars());
    Weight w(static_cast<size_t>(out.n_vars()));
    for (const auto& [wa, ca] : f.terms()) {
        for (const auto& [wb, cb] : g.terms()) {
            std::copy(wa.begin(), wa.end(), w.begin());
            std::copy(wb.begin(), wb.end(), w.begin() + f.n_vars());
            out.add_term(w, checked_mul(ca, cb));
        }
    }
    return out;
}

}  // namespace repstab
