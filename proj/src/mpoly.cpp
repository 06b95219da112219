#include "wz/mpoly.hpp"

#include "wz/errors.hpp"

namespace wz {

IntMPoly IntMPoly::constant(std::vector<std::string> vars, BigInt c) {
    IntMPoly f(std::move(vars));
    if (!c.is_zero()) f.terms_[Exps(f.vars_.size(), 0)] = std::move(c);
    return f;
}

IntMPoly IntMPoly::variable(std::vector<std::string> vars, size_t index) {
    IntMPoly f(std::move(vars));
    Exps e(f.vars_.size(), 0);
    e[index] = 1;
    f.terms_[e] = BigInt(1);
    return f;
}

int IntMPoly::g_index() const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == "g") return static_cast<int>(i);
    return -1;
}

size_t IntMPoly::arity() const {
    return vars_.size() - (g_index() >= 0 ? 1 : 0);
}

void IntMPoly::add_term(const Exps& e, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

IntMPoly IntMPoly::operator+(const IntMPoly& o) const {
    IntMPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

IntMPoly IntMPoly::operator-(const IntMPoly& o) const {
    IntMPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

IntMPoly IntMPoly::operator-() const {
    IntMPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

IntMPoly IntMPoly::operator*(const IntMPoly& o) const {
    IntMPoly r(vars_);
    Exps e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = static_cast<uint16_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

IntMPoly IntMPoly::pow(unsigned e) const {
    IntMPoly r = constant(vars_, BigInt(1));
    // Plain repeated multiplication keeps intermediate sizes monotone, which
    // beats binary powering for the sparse operands seen here.
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

IntMPoly IntMPoly::scale(const BigInt& k) const {
    IntMPoly r(vars_);
    if (k.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * k;
    return r;
}

IntMPoly IntMPoly::divide_exact_scalar(const BigInt& k) const {
    IntMPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = c.divide_exact(k);
    return r;
}

IntMPoly IntMPoly::derivative(size_t var) const {
    IntMPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        r.add_term(d, c * BigInt(e[var]));
    }
    return r;
}

IntMPoly IntMPoly::substitute_zero(const std::vector<size_t>& zero_vars) const {
    IntMPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        bool kill = false;
        for (size_t v : zero_vars)
            if (e[v] != 0) {
                kill = true;
                break;
            }
        if (!kill) r.terms_[e] = c;
    }
    return r;
}

IntMPoly IntMPoly::reduce_mod(const BigInt& p) const {
    IntMPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        BigInt rc = c.mod_euclid(p);
        if (!rc.is_zero()) r.terms_[e] = rc;
    }
    return r;
}

int IntMPoly::total_degree() const {
    if (terms_.empty()) return -1;
    int g = g_index();
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != g) d += e[i];
        if (d > best) best = d;
    }
    return best;
}

bool IntMPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int g = g_index();
    int want = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != g) d += e[i];
        if (want < 0)
            want = d;
        else if (d != want)
            return false;
    }
    return true;
}

std::string IntMPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mon;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += vars_[i];
            if (e[i] > 1) mon += "^" + std::to_string(e[i]);
        }
        std::string coeff = c.to_string();
        if (!out.empty()) {
            out += c.is_negative() ? " - " : " + ";
            if (c.is_negative()) coeff = (-c).to_string();
        }
        if (mon.empty())
            out += coeff;
        else if (coeff == "1")
            out += mon;
        else if (coeff == "-1")
            out += "-" + mon;
        else
            out += coeff + "*" + mon;
    }
    return out;
}

}  // namespace wz
