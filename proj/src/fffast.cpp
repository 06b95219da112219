#include "wz/fffast.hpp"

#include "wz/errors.hpp"

namespace wz {

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

CompiledField::CompiledField(const FqField& field) : field_(field) {
    n_ = field.order_u64();
    if (n_ == 0) throw BudgetExceeded("field too large to compile");
    one_ = static_cast<uint32_t>(field.element_index(field.one()));
    tabled_ = n_ <= kZechCap;
    if (!tabled_) return;

    // Find a multiplicative generator: order n-1 checked against the prime
    // factorization.
    uint64_t m = n_ - 1;
    auto factors = prime_factors(m);
    FqElem gen;
    bool found = false;
    for (uint64_t i = 1; i < n_ && !found; ++i) {
        FqElem cand = field.element_at(i);
        if (cand.is_zero()) continue;
        bool ok = true;
        for (uint64_t f : factors) {
            if (field.pow(cand, m / f) == field.one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = cand;
            found = true;
        }
    }
    if (!found) throw Error("no multiplicative generator found");

    log_.assign(n_, 0);
    exp_.assign(m, 0);
    FqElem cur = field.one();
    for (uint64_t k = 0; k < m; ++k) {
        uint32_t idx = static_cast<uint32_t>(field.element_index(cur));
        exp_[k] = idx;
        log_[idx] = static_cast<uint32_t>(k);
        cur = field.mul(cur, gen);
    }
    add_one_.assign(n_, 0);
    neg_.assign(n_, 0);
    for (uint64_t i = 0; i < n_; ++i) {
        FqElem e = field.element_at(i);
        add_one_[i] = static_cast<uint32_t>(field.element_index(field.add(e, field.one())));
        neg_[i] = static_cast<uint32_t>(field.element_index(field.neg(e)));
    }
}

uint32_t CompiledField::slow_add(uint32_t x, uint32_t y) const {
    return static_cast<uint32_t>(
        field_.element_index(field_.add(field_.element_at(x), field_.element_at(y))));
}

uint32_t CompiledField::slow_mul(uint32_t x, uint32_t y) const {
    return static_cast<uint32_t>(
        field_.element_index(field_.mul(field_.element_at(x), field_.element_at(y))));
}

uint32_t CompiledField::add(uint32_t x, uint32_t y) const {
    if (!tabled_) return slow_add(x, y);
    if (x == 0) return y;
    if (y == 0) return x;
    // x + y = x * (1 + y/x)
    uint64_t m = n_ - 1;
    uint32_t lx = log_[x], ly = log_[y];
    uint32_t ratio = exp_[(ly + m - lx) % m];
    uint32_t s = add_one_[ratio];
    if (s == 0) return 0;
    return exp_[(lx + log_[s]) % m];
}

uint32_t CompiledField::neg(uint32_t x) const {
    if (!tabled_)
        return static_cast<uint32_t>(
            field_.element_index(field_.neg(field_.element_at(x))));
    return neg_[x];
}

uint32_t CompiledField::mul(uint32_t x, uint32_t y) const {
    if (!tabled_) return slow_mul(x, y);
    if (x == 0 || y == 0) return 0;
    uint64_t m = n_ - 1;
    return exp_[(static_cast<uint64_t>(log_[x]) + log_[y]) % m];
}

uint32_t CompiledField::inv(uint32_t x) const {
    if (x == 0) throw DivisionByZero("inverse of zero field element");
    if (!tabled_)
        return static_cast<uint32_t>(
            field_.element_index(field_.inv(field_.element_at(x))));
    uint64_t m = n_ - 1;
    return exp_[(m - log_[x]) % m];
}

uint32_t CompiledField::pow(uint32_t x, uint64_t e) const {
    if (!tabled_) {
        return static_cast<uint32_t>(
            field_.element_index(field_.pow(field_.element_at(x), e)));
    }
    if (x == 0) return e == 0 ? one_ : 0;
    uint64_t m = n_ - 1;
    uint64_t le = static_cast<uint64_t>(log_[x]) % m;
    // e mod m via __int128-free reduction
    uint64_t em = e % m;
    return exp_[static_cast<uint64_t>((__uint128_t)le * em % m)];
}

uint32_t CompiledField::frob(uint32_t x, uint32_t s) const {
    uint64_t e = 1;
    for (uint32_t i = 0; i < s; ++i) e *= field_.p();
    return pow(x, e);
}

uint32_t CompiledField::index_of(const FqElem& e) const {
    return static_cast<uint32_t>(field_.element_index(e));
}

FqElem CompiledField::elem_of(uint32_t idx) const { return field_.element_at(idx); }

CompiledPoly::CompiledPoly(const IntMPoly& f, const CompiledField& cf,
                           const FqField& base_field) {
    arity_ = f.arity();
    int gi = f.g_index();
    uint32_t gval = 0;
    if (gi >= 0) {
        FqElem root = cf.field().embed_generator(base_field);
        gval = cf.index_of(root);
    }
    for (const auto& [e, c] : f.terms()) {
        uint32_t coeff = cf.index_of(cf.field().from_int(c));
        if (gi >= 0 && e[gi]) coeff = cf.mul(coeff, cf.pow(gval, e[gi]));
        if (coeff == 0) continue;
        Term t;
        t.coeff = coeff;
        for (size_t v = 0; v < e.size(); ++v)
            if (static_cast<int>(v) != gi) t.exps.push_back(e[v]);
        terms_.push_back(std::move(t));
    }
}

uint32_t CompiledPoly::eval(const CompiledField& cf, const uint32_t* point) const {
    uint32_t acc = 0;
    for (const auto& t : terms_) {
        uint32_t v = t.coeff;
        bool zero = false;
        for (size_t i = 0; i < t.exps.size(); ++i) {
            if (!t.exps[i]) continue;
            if (point[i] == 0) {
                zero = true;
                break;
            }
            v = cf.mul(v, cf.pow(point[i], t.exps[i]));
        }
        if (!zero) acc = cf.add(acc, v);
    }
    return acc;
}

}  // namespace wz
