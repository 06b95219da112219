#include "wz/upoly.hpp"

#include "wz/errors.hpp"

namespace wz {

IntPoly IntPoly::of(std::initializer_list<long long> cs) {
    std::vector<BigInt> v;
    v.reserve(cs.size());
    for (long long x : cs) v.emplace_back(x);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> r = c_;
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scale(const BigInt& k) const {
    std::vector<BigInt> r = c_;
    for (auto& x : r) x *= k;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::compose_scale(const BigInt& k) const {
    std::vector<BigInt> r = c_;
    BigInt kp(1);
    for (size_t i = 1; i < r.size(); ++i) {
        kp *= k;
        r[i] *= kp;
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("IntPoly division by zero");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree())
        throw NonIntegralUniversal("IntPoly exact division: degree too small");
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> q(degree() - d.degree() + 1, BigInt(0));
    const BigInt& lc = d.c_.back();
    for (int i = degree(); i >= d.degree(); --i) {
        BigInt t = rem[i].divide_exact(lc);
        q[i - d.degree()] = t;
        for (int j = 0; j <= d.degree(); ++j)
            rem[i - d.degree() + j] -= t * d.c_[j];
    }
    for (const auto& x : rem)
        if (!x.is_zero())
            throw NonIntegralUniversal("IntPoly exact division left remainder");
    return IntPoly(std::move(q));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& x : c_) g = BigInt::gcd(g, x);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    std::vector<BigInt> r = c_;
    for (auto& x : r) x = x.divide_exact(g);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::gcd_primitive(IntPoly a, IntPoly b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    // Primitive Euclid with pseudo-remainders; fine at the degrees used here.
    a = a.is_zero() ? IntPoly() : a.primitive_part();
    b = b.is_zero() ? IntPoly() : b.primitive_part();
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        IntPoly r = a;
        const BigInt lc = b.c_.back();
        int db = b.degree();
        while (!r.is_zero() && r.degree() >= db) {
            int k = r.degree() - db;
            BigInt t = r.c_.back();
            r = r.scale(lc);
            std::vector<BigInt> sub(k, BigInt(0));
            for (const auto& x : b.c_) sub.push_back(x * t);
            r = r - IntPoly(std::move(sub));
        }
        a = b;
        b = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    // Sign convention: lowest nonzero coefficient positive, matching the
    // constant-term-1 normalization used throughout.
    for (const auto& x : a.c_) {
        if (x.is_zero()) continue;
        if (x.is_negative()) a = -a;
        break;
    }
    return a;
}

std::vector<BigInt> IntPoly::inverse_root_power_sums(const IntPoly& f, int R) {
    if (f.coeff(0) != BigInt(1))
        throw BadNormalization("power sums need constant term 1");
    // f = prod (1 - g_i t); with e_k = (-1)^k a_k Newton's identity reads
    // s_r = -sum_{i=1}^{r-1} a_i s_{r-i} - r a_r.
    std::vector<BigInt> s(static_cast<size_t>(R) + 1, BigInt(0));
    for (int r = 1; r <= R; ++r) {
        BigInt acc = BigInt(-r) * f.coeff(r);
        for (int i = 1; i < r; ++i) acc -= f.coeff(i) * s[r - i];
        s[r] = acc;
    }
    s.erase(s.begin());
    return s;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string term;
        BigInt a = c_[i];
        if (!out.empty()) {
            out += a.is_negative() ? " - " : " + ";
            if (a.is_negative()) a = -a;
        }
        if (i == 0 || a != BigInt(1)) term += a.to_string();
        if (i > 0) {
            if (!term.empty()) term += "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += term;
    }
    return out;
}

IntPoly resultant_x(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b) {
    int da = static_cast<int>(a.size()) - 1;
    int db = static_cast<int>(b.size()) - 1;
    if (da < 0 || db < 0) return IntPoly();
    if (da == 0 && db == 0) return IntPoly::constant(BigInt(1));
    int n = da + db;
    // Sylvester matrix, rows of a then rows of b.
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n, IntPoly()));
    for (int r = 0; r < db; ++r)
        for (int j = 0; j <= da; ++j) m[r][r + j] = a[da - j];
    for (int r = 0; r < da; ++r)
        for (int j = 0; j <= db; ++j) m[db + r][r + j] = b[db - j];

    // Bareiss fraction-free elimination; divisions are exact over Z[t].
    IntPoly prev = IntPoly::constant(BigInt(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return IntPoly();  // singular: resultant 0
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                IntPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.divide_exact(prev);
            }
            m[i][k] = IntPoly();
        }
        prev = m[k][k];
    }
    IntPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace wz
