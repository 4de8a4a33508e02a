#include "matroidkl/poly.hpp"

#include <algorithm>
#include <sstream>

#include "matroidkl/errors.hpp"

namespace matroidkl {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int v) {
    IntPoly p;
    p.c_.push_back(std::move(v));
    p.trim();
    return p;
}

IntPoly IntPoly::monomial(Int v, int deg) {
    IntPoly p;
    p.c_.assign(deg + 1, Int(0));
    p.c_[deg] = std::move(v);
    p.trim();
    return p;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r = c_;
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scale(const Int& v) const {
    std::vector<Int> r = c_;
    for (auto& x : r) x *= v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shift(int m) const {
    if (is_zero()) return {};
    std::vector<Int> r(c_.size() + m, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + m] = c_[i];
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly IntPoly::reverse(int d) const {
    if (d < degree())
        throw DegreeTooSmall("reverse needs d >= deg, got d=" + std::to_string(d) +
                             " deg=" + std::to_string(degree()));
    std::vector<Int> r(d + 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[d - i] = c_[i];
    return IntPoly(std::move(r));
}

std::string IntPoly::text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (mag != 1 || i == 0) os << mag;
        if (i == 1) os << "t";
        if (i > 1) os << "t^" << i;
        first = false;
    }
    return os.str();
}

bool is_palindromic(const IntPoly& f, int d) {
    if (d < f.degree()) return false;
    return f.reverse(d) == f;
}

bool is_unimodal(const IntPoly& f) {
    const auto& c = f.coeffs();
    size_t i = 1;
    while (i < c.size() && c[i] >= c[i - 1]) ++i;
    while (i < c.size() && c[i] <= c[i - 1]) ++i;
    return i >= c.size();
}

bool coeffwise_leq(const IntPoly& f, const IntPoly& g) {
    int d = std::max(f.degree(), g.degree());
    for (int i = 0; i <= d; ++i)
        if (f.coeff(i) > g.coeff(i)) return false;
    return true;
}

bool nonnegative_coeffs(const IntPoly& f) {
    for (const auto& v : f.coeffs())
        if (v < 0) return false;
    return true;
}

void BiPoly::trim() {
    for (auto& row : c_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BiPoly BiPoly::constant(Int v) { return monomial(std::move(v), 0, 0); }

BiPoly BiPoly::monomial(Int v, int dx, int dy) {
    BiPoly p;
    p.c_.assign(dx + 1, {});
    p.c_[dx].assign(dy + 1, Int(0));
    p.c_[dx][dy] = std::move(v);
    p.trim();
    return p;
}

Int BiPoly::coeff(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    if (j < 0 || j >= static_cast<int>(c_[i].size())) return 0;
    return c_[i][j];
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<std::vector<Int>> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        size_t w = std::max(i < c_.size() ? c_[i].size() : 0,
                            i < o.c_.size() ? o.c_[i].size() : 0);
        r[i].assign(w, Int(0));
        if (i < c_.size())
            for (size_t j = 0; j < c_[i].size(); ++j) r[i][j] += c_[i][j];
        if (i < o.c_.size())
            for (size_t j = 0; j < o.c_[i].size(); ++j) r[i][j] += o.c_[i][j];
    }
    return BiPoly(std::move(r));
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    std::vector<std::vector<Int>> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        size_t w = std::max(i < c_.size() ? c_[i].size() : 0,
                            i < o.c_.size() ? o.c_[i].size() : 0);
        r[i].assign(w, Int(0));
        if (i < c_.size())
            for (size_t j = 0; j < c_[i].size(); ++j) r[i][j] += c_[i][j];
        if (i < o.c_.size())
            for (size_t j = 0; j < o.c_[i].size(); ++j) r[i][j] -= o.c_[i][j];
    }
    return BiPoly(std::move(r));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    size_t dx = 0, dy = 0, odx = 0, ody = 0;
    dx = c_.size();
    odx = o.c_.size();
    for (const auto& row : c_) dy = std::max(dy, row.size());
    for (const auto& row : o.c_) ody = std::max(ody, row.size());
    std::vector<std::vector<Int>> r(dx + odx - 1,
                                    std::vector<Int>(dy + ody - 1, Int(0)));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < c_[i].size(); ++j) {
            if (c_[i][j] == 0) continue;
            for (size_t p = 0; p < o.c_.size(); ++p)
                for (size_t q = 0; q < o.c_[p].size(); ++q)
                    r[i + p][j + q] += c_[i][j] * o.c_[p][q];
        }
    return BiPoly(std::move(r));
}

Int BiPoly::eval(const Int& x, const Int& y) const {
    Int r = 0;
    Int xp = 1;
    for (const auto& row : c_) {
        Int ry = 0;
        for (auto it = row.rbegin(); it != row.rend(); ++it) ry = ry * y + *it;
        r += xp * ry;
        xp *= x;
    }
    return r;
}

IntPoly BiPoly::eval_y(const Int& y) const {
    std::vector<Int> r(c_.size(), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        Int ry = 0;
        for (auto it = c_[i].rbegin(); it != c_[i].rend(); ++it) ry = ry * y + *it;
        r[i] = ry;
    }
    return IntPoly(std::move(r));
}

std::string BiPoly::text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < c_[i].size(); ++j) {
            if (c_[i][j] == 0) continue;
            Int a = c_[i][j];
            if (first) {
                if (a < 0) os << "-";
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            Int mag = abs(a);
            if (mag != 1 || (i == 0 && j == 0)) os << mag;
            if (i == 1) os << "x";
            if (i > 1) os << "x^" << i;
            if (j == 1) os << "y";
            if (j > 1) os << "y^" << j;
            first = false;
        }
    return os.str();
}

IntPoly pow_one_plus_t(int e) {
    std::vector<Int> c(e + 1);
    for (int i = 0; i <= e; ++i) c[i] = binomial(e, i);
    return IntPoly(std::move(c));
}

GammaVector gamma_expand(const IntPoly& f, int d) {
    GammaVector g;
    g.d = d;
    g.gammas.assign(d / 2 + 1, Int(0));
    if (f.is_zero()) return g;
    if (!is_palindromic(f, d))
        throw NotPalindromic("gamma_expand input not palindromic for d=" +
                             std::to_string(d) + ": " + f.text());
    IntPoly rem = f;
    for (int i = 0; i <= d / 2; ++i) {
        Int gi = rem.coeff(i);
        g.gammas[i] = gi;
        if (gi != 0)
            rem = rem - IntPoly::monomial(gi, i) * pow_one_plus_t(d - 2 * i);
    }
    if (!rem.is_zero())
        throw FatalInconsistency("gamma elimination left a remainder: " +
                                 rem.text());
    return g;
}

IntPoly gamma_contract(const GammaVector& g) {
    IntPoly f;
    for (size_t i = 0; i < g.gammas.size(); ++i) {
        if (g.gammas[i] == 0) continue;
        f = f + IntPoly::monomial(g.gammas[i], static_cast<int>(i)) *
                    pow_one_plus_t(g.d - 2 * static_cast<int>(i));
    }
    return f;
}

bool is_gamma_positive(const GammaVector& g) {
    for (const auto& v : g.gammas)
        if (v < 0) return false;
    return true;
}

}  // namespace matroidkl
