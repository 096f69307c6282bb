#include "dycklat/series.hpp"

#include <cmath>
#include <sstream>

#include "dycklat/errors.hpp"
#include "dycklat/stats.hpp"

namespace dycklat {

// ---------------------------------------------------------------------------
// PolyY
// ---------------------------------------------------------------------------

PolyY::PolyY(Rat constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

PolyY PolyY::monomial(int deg, Rat coeff) {
    PolyY p;
    if (coeff != 0) {
        p.c_.assign(static_cast<std::size_t>(deg) + 1, Rat(0));
        p.c_.back() = std::move(coeff);
    }
    return p;
}

Rat PolyY::coeff(int deg) const {
    if (deg < 0 || deg >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(deg)];
}

Rat PolyY::eval_one() const {
    Rat s = 0;
    for (const Rat& r : c_) s += r;
    return s;
}

void PolyY::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyY& PolyY::operator+=(const PolyY& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyY& PolyY::operator-=(const PolyY& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyY operator*(const PolyY& a, const PolyY& b) {
    PolyY out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.trim();
    return out;
}

PolyY PolyY::divide_exact(const PolyY& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    PolyY rem = *this;
    PolyY q;
    if (rem.is_zero()) return q;
    if (rem.c_.size() < d.c_.size()) throw Error("inexact polynomial division");
    q.c_.assign(rem.c_.size() - d.c_.size() + 1, Rat(0));
    const Rat lead = d.c_.back();
    while (!rem.c_.empty() && rem.c_.size() >= d.c_.size()) {
        const std::size_t shift = rem.c_.size() - d.c_.size();
        Rat f = rem.c_.back() / lead;
        q.c_[shift] = f;
        for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[shift + i] -= f * d.c_[i];
        rem.trim();
    }
    if (!rem.is_zero()) throw Error("inexact polynomial division");
    q.trim();
    return q;
}

PolyY PolyY::scale(const Rat& f) const {
    PolyY out;
    if (f == 0) return out;
    out.c_ = c_;
    for (Rat& r : out.c_) r *= f;
    return out;
}

PolyY PolyY::divided_difference() const {
    // (y^d - 1)/(y - 1) = 1 + y + ... + y^{d-1}, applied per monomial.
    PolyY out;
    for (std::size_t d = 1; d < c_.size(); ++d) {
        if (c_[d] == 0) continue;
        if (out.c_.size() < d) out.c_.resize(d, Rat(0));
        for (std::size_t i = 0; i < d; ++i) out.c_[i] += c_[d];
    }
    out.trim();
    return out;
}

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

void append_term(std::string& out, const Rat& coeff, const std::string& mono) {
    if (coeff == 0) return;
    Rat a = coeff;
    if (out.empty()) {
        if (a < 0) {
            out += "-";
            a = -a;
        }
    } else {
        out += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
    }
    if (mono.empty()) {
        out += rat_str(a);
    } else {
        if (a != 1) out += rat_str(a) + "*";
        out += mono;
    }
}

std::string power(const std::string& var, int deg) {
    if (deg == 0) return "";
    if (deg == 1) return var;
    return var + "^" + std::to_string(deg);
}

std::string join_mono(std::initializer_list<std::string> parts) {
    std::string out;
    for (const std::string& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "*";
        out += p;
    }
    return out;
}

}  // namespace

std::string PolyY::str() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) append_term(out, c_[i], power("y", static_cast<int>(i)));
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// PolyYZ
// ---------------------------------------------------------------------------

PolyYZ::PolyYZ(Rat constant) {
    if (constant != 0) m_[{0, 0}] = std::move(constant);
}

PolyYZ PolyYZ::monomial(int ydeg, int zdeg, Rat coeff) {
    PolyYZ p;
    if (coeff != 0) p.m_[{ydeg, zdeg}] = std::move(coeff);
    return p;
}

Rat PolyYZ::coeff(int ydeg, int zdeg) const {
    auto it = m_.find({ydeg, zdeg});
    return it == m_.end() ? Rat(0) : it->second;
}

PolyYZ& PolyYZ::operator+=(const PolyYZ& o) {
    for (const auto& [k, v] : o.m_) {
        Rat& slot = m_[k];
        slot += v;
        if (slot == 0) m_.erase(k);
    }
    return *this;
}

PolyYZ& PolyYZ::operator-=(const PolyYZ& o) {
    for (const auto& [k, v] : o.m_) {
        Rat& slot = m_[k];
        slot -= v;
        if (slot == 0) m_.erase(k);
    }
    return *this;
}

PolyYZ operator*(const PolyYZ& a, const PolyYZ& b) {
    PolyYZ out;
    for (const auto& [ka, va] : a.m_)
        for (const auto& [kb, vb] : b.m_) {
            std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
            Rat& slot = out.m_[k];
            slot += va * vb;
            if (slot == 0) out.m_.erase(k);
        }
    return out;
}

PolyYZ PolyYZ::divide_exact(const PolyYZ& d) const {
    if (d.m_.size() != 1 || d.m_.begin()->first != std::pair<int, int>{0, 0})
        throw Error("bivariate division is only supported by constants");
    return scale(Rat(1) / d.m_.begin()->second);
}

PolyYZ PolyYZ::scale(const Rat& f) const {
    PolyYZ out;
    if (f == 0) return out;
    out.m_ = m_;
    for (auto& [k, v] : out.m_) v *= f;
    return out;
}

PolyYZ PolyYZ::swap_yz() const {
    PolyYZ out;
    for (const auto& [k, v] : m_) out.m_[{k.second, k.first}] = v;
    return out;
}

Rat PolyYZ::eval_ones() const {
    Rat s = 0;
    for (const auto& [k, v] : m_) s += v;
    return s;
}

std::string PolyYZ::str() const {
    std::string out;
    for (const auto& [k, v] : m_)
        append_term(out, v, join_mono({power("y", k.first), power("z", k.second)}));
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Series plumbing
// ---------------------------------------------------------------------------

RatC RatC::divide_exact(const RatC& d) const {
    if (d.v_ == 0) throw Error("series division by zero constant term");
    return RatC(v_ / d.v_);
}

template <class R>
TruncSeries<R> TruncSeries<R>::shift_down(int k) const {
    for (int i = 0; i < k; ++i)
        if (!c_[static_cast<std::size_t>(i)].is_zero())
            throw Error("series is not divisible by x^" + std::to_string(k));
    TruncSeries out(order());
    for (int i = k; i <= order(); ++i) out.c_[i - k] = c_[i];
    return out;
}

template class TruncSeries<RatC>;
template class TruncSeries<PolyY>;
template class TruncSeries<PolyYZ>;

namespace {

template <class R>
TruncSeries<R> sqrt_newton(const TruncSeries<R>& a, R one) {
    if (!(a.coeff(0) == one)) throw Error("sqrt requires constant term 1");
    TruncSeries<R> s(a.order());
    s.coeff(0) = one;
    // s <- (s + a/s) / 2, correct coefficients double each round.
    int steps = 1;
    while ((1 << steps) <= a.order() + 1) ++steps;
    for (int it = 0; it < steps; ++it) s = (s + a.div(s)).scale(Rat(1, 2));
    if (!((s * s) - a).is_zero()) throw Error("sqrt iteration failed to converge");
    return s;
}

}  // namespace

Series1 sqrt_unit(const Series1& a) { return sqrt_newton(a, RatC(Rat(1))); }
Series3 sqrt_unit(const Series3& a) { return sqrt_newton(a, PolyYZ(Rat(1))); }

Series1 series_one(int order) {
    Series1 s(order);
    s.coeff(0) = Rat(1);
    return s;
}

Series1 series_x(int order) {
    Series1 s(order);
    if (order >= 1) s.coeff(1) = Rat(1);
    return s;
}

Series1 inverse_unit(const Series1& a) { return series_one(a.order()).div(a); }

Series1 compose(const Series1& f, const Series1& g) {
    if (!g.coeff(0).is_zero()) throw BadInput("composition needs g(0) = 0");
    const int N = f.order();
    Series1 out(N);
    Series1 pw = series_one(N);
    for (int k = 0; k <= N; ++k) {
        out += pw.scale(f.coeff(k).value());
        pw = pw * g;
    }
    return out;
}

Int series1_int_coeff(const Series1& s, int k) {
    const Rat& r = s.coeff(k).value();
    if (denominator(r) != 1) throw Error("coefficient is not an integer");
    return numerator(r);
}

// ---------------------------------------------------------------------------
// Integer helpers
// ---------------------------------------------------------------------------

Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int catalan_int(int n) { return binomial(2LL * n, n) / (n + 1); }

// ---------------------------------------------------------------------------
// Univariate generating functions
// ---------------------------------------------------------------------------

Series1 catalan_series(int order) {
    Series1 s(order);
    for (int k = 0; k <= order; ++k) s.coeff(k) = Rat(catalan_int(k));
    return s;
}

namespace {

/// Dense rational polynomial as a truncated series, coeffs low to high.
Series1 poly1(int order, std::initializer_list<Rat> coeffs) {
    Series1 s(order);
    int k = 0;
    for (const Rat& c : coeffs) {
        if (k > order) break;
        s.coeff(k++) = c;
    }
    return s;
}

}  // namespace

Series1 E_series(int order) {
    Series1 root = sqrt_unit(poly1(order, {1, -4}));
    Series1 num = poly1(order, {-1, 4}) + poly1(order, {1, -2}) * root;
    Series1 den = poly1(order, {2, -10, 8});  // 2(1-4x)(1-x)
    return num.div(den);
}

Int E_coeff(int n) {
    Int s = 0;
    for (int k = 0; k <= n - 2; ++k) s += binomial(2 * k + 2, k);
    return s;
}

Series1 K_series(int order) {
    return poly1(order, {0, 0, 1}).div(poly1(order, {1, -3, 2}));
}

Int K_coeff(int n) {
    if (n < 1) return 0;
    return (Int(1) << (n - 1)) - 1;
}

Series1 L_series(int order) {
    Series1 tail = poly1(order, {0, 0, 0, 0, 2, 1}).div(poly1(order, {1, -1, -1}));
    return poly1(order, {0, 0, 0, 3}) + tail;
}

Series1 J1_series(int order) {
    Series1 root = sqrt_unit(poly1(order, {1, -8}));
    return (series_one(order) - root).scale(Rat(1, 4));
}

Int J1_coeff(int n) {
    if (n < 1) return 0;
    return (Int(1) << (n - 1)) * catalan_int(n - 1);
}

Series1 I1_series(int order) {
    Series1 root = sqrt_unit(poly1(order, {1, -8}));
    Series1 num = poly1(order, {1, -2}) - root;
    return num.div(poly1(order, {2, 2}));
}

Int I1_coeff(int n) {
    Int s = 0;
    for (int m = 0; m <= n - 1; ++m) s += Int(n - m) * binomial(n + m - 1, m) * (Int(1) << m);
    if (s % n != 0) throw Error("interval closed form is not divisible by n");
    return s / n;
}

Series1 kernel_root(int order) {
    // Work one order higher so the division by x keeps full precision.
    Series1 root = sqrt_unit(poly1(order + 1, {1, -8}));
    Series1 num = poly1(order + 1, {1, 4}) - root;
    Series1 y0 = num.shift_down(1).scale(Rat(1, 8));
    Series1 out(order);
    for (int k = 0; k <= order; ++k) out.coeff(k) = y0.coeff(k);
    return out;
}

KernelResiduals verify_kernel_equations(int order) {
    // Work one order higher: dividing by (y0 - 1)/x loses the top coefficient.
    const int M = order + 1;
    const Series1 y0 = kernel_root(M);
    const Series1 j1 = J1_series(M);
    const Series1 one = series_one(M);
    const Series1 xy0 = y0.shift_up(1);
    const Series1 c_at = compose(catalan_series(M), xy0);
    // w = (y0 - 1)/x has constant term 1, so dividing by (y0 - 1) is the
    // composition of shift_down and division by w.
    const Series1 w = (y0 - one).shift_down(1);
    const Series1 t = (c_at * y0 * y0).div(w);

    auto zero_up_to = [order](const Series1& s) {
        for (int k = 0; k <= order; ++k)
            if (!s.coeff(k).is_zero()) return false;
        return true;
    };
    KernelResiduals res;
    res.eq1_zero = zero_up_to(one - xy0.div(one - j1) - t);
    res.eq2_zero = zero_up_to(xy0 - (j1 * c_at * y0 * y0).div(w));
    return res;
}

// ---------------------------------------------------------------------------
// Bivariate interval series
// ---------------------------------------------------------------------------

SeriesXY catalan_xy(int order) {
    SeriesXY s(order);
    for (int k = 0; k <= order; ++k) s.coeff(k) = PolyY::monomial(k, Rat(catalan_int(k)));
    return s;
}

namespace {

SeriesXY lift_y_free(const Series1& s) {
    SeriesXY out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.coeff(k) = PolyY(s.coeff(k).value());
    return out;
}

SeriesXY times_y(const SeriesXY& s, int deg = 1) {
    SeriesXY out(s.order());
    const PolyY y = PolyY::monomial(deg);
    for (int k = 0; k <= s.order(); ++k) out.coeff(k) = s.coeff(k) * y;
    return out;
}

SeriesXY xy_series(int order) {
    SeriesXY s(order);
    if (order >= 1) s.coeff(1) = PolyY::monomial(1);
    return s;
}

SeriesXY seriesxy_one(int order) {
    SeriesXY s(order);
    s.coeff(0) = PolyY(Rat(1));
    return s;
}

SeriesXY divided_difference(const SeriesXY& s) {
    SeriesXY out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.coeff(k) = s.coeff(k).divided_difference();
    return out;
}

}  // namespace

Series1 seriesxy_at_y1(const SeriesXY& s) {
    Series1 out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.coeff(k) = s.coeff(k).eval_one();
    return out;
}

SeriesXY J_series(int order) {
    const SeriesXY j1 = lift_y_free(J1_series(order));
    const SeriesXY c = catalan_xy(order);
    const SeriesXY one = seriesxy_one(order);
    const SeriesXY xy = xy_series(order);
    const SeriesXY y = times_y(one);

    const SeriesXY num = xy * (j1 - one) * (times_y(j1 * c) - y + one);
    const SeriesXY den = times_y(j1 * c, 2).shift_up(1) - times_y(c, 2).shift_up(1) -
                         times_y(one, 2).shift_up(1) - times_y(j1) + xy + j1 + y - one;
    return num.div(den);
}

SeriesXY I_series(int order) {
    const Series1 root = sqrt_unit(poly1(order, {1, -8}));
    const Series1 factor = (poly1(order, {3}) - root).div(poly1(order, {2, 2}));
    return J_series(order) * lift_y_free(factor);
}

bool verify_lemma_interval_split(int order) {
    const SeriesXY i = I_series(order);
    const SeriesXY j = J_series(order);
    return (i - j - lift_y_free(seriesxy_at_y1(i)) * j).is_zero();
}

bool verify_lemma_prime_upper(int order) {
    const SeriesXY j = J_series(order);
    const SeriesXY i = I_series(order);
    const SeriesXY xy = xy_series(order);
    const SeriesXY rhs =
        xy + xy * i + times_y(divided_difference(j) * catalan_xy(order), 2).shift_up(1);
    return (j - rhs).is_zero();
}

bool verify_I_from_J(int order) {
    const SeriesXY j = J_series(order);
    const Series1 j1 = seriesxy_at_y1(j);
    const SeriesXY i = I_series(order);
    return (i * lift_y_free(series_one(order) - j1) - j).is_zero();
}

bool verify_J_quadratic(int order) {
    const Series1 j1 = J1_series(order);
    return (j1 - series_x(order) - (j1 * j1).scale(2)).is_zero();
}

// ---------------------------------------------------------------------------
// Trivariate covering-degree series
// ---------------------------------------------------------------------------

namespace {

Series3 series3_one(int order) {
    Series3 s(order);
    s.coeff(0) = PolyYZ(Rat(1));
    return s;
}

/// Polynomial in x whose x^k coefficient is the k-th listed PolyYZ.
Series3 poly3(int order, std::initializer_list<PolyYZ> coeffs) {
    Series3 s(order);
    int k = 0;
    for (const PolyYZ& c : coeffs) {
        if (k > order) break;
        s.coeff(k++) = c;
    }
    return s;
}

PolyYZ yz_const(Rat v) { return PolyYZ(std::move(v)); }
PolyYZ yz_y() { return PolyYZ::monomial(1, 0); }
PolyYZ yz_z() { return PolyYZ::monomial(0, 1); }
PolyYZ yz_yz() { return PolyYZ::monomial(1, 1); }

Series3 times_poly(const Series3& s, const PolyYZ& p) {
    Series3 out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.coeff(k) = s.coeff(k) * p;
    return out;
}

}  // namespace

Series3 A_series(int order) {
    // Work one order above the target; the final step divides by x.
    const int N = order + 1;
    const Series3 r = poly3(N, {yz_const(1), yz_const(1) - yz_y() - yz_z(),
                                yz_const(1) - yz_y() - yz_z() + yz_yz()});
    const Series3 g1 = poly3(N, {yz_const(1), yz_yz() - yz_y() - yz_z()});
    const Series3 g2 = poly3(N, {yz_const(-1), yz_y() + yz_z() - yz_const(1)});
    const Series3 under = (g1 * g2).shift_up(1).scale(4) + r * r;
    const Series3 num = (r - sqrt_unit(under)).shift_down(1);
    const Series3 a_full = num.div(g1.scale(2));
    Series3 out(order);
    for (int k = 0; k <= order; ++k) out.coeff(k) = a_full.coeff(k);
    return out;
}

bool verify_A_functional_equation(const Series3& a) {
    const int N = a.order();
    const Series3 one = series3_one(N);
    const Series3 am1 = a - one;
    Series3 xz = poly3(N, {yz_const(0), yz_z()});
    const Series3 g = times_poly(one, yz_z()).shift_up(2).div(one - xz);
    const Series3 am1y = times_poly(am1, yz_y());
    const Series3 b = am1 - poly3(N, {yz_const(0), yz_const(1)}) - g - am1y.shift_up(1) -
                      g * am1y;
    const Series3 rhs = one + poly3(N, {yz_const(0), yz_const(1)}) + am1y.shift_up(1) + g +
                        g * am1y + g * am1y * a + (a * b).shift_up(1);
    return (a - rhs).is_zero();
}

Series3 series3_from_tally(int order) {
    Series3 out(order);
    for (int n = 0; n <= order; ++n) {
        const auto tally = tally_bistatistic(n);
        PolyYZ c;
        for (std::size_t s = 0; s < tally.size(); ++s)
            for (std::size_t t = 0; t < tally[s].size(); ++t)
                if (tally[s][t])
                    c += PolyYZ::monomial(static_cast<int>(s), static_cast<int>(t),
                                          Rat(tally[s][t]));
        out.coeff(n) = std::move(c);
    }
    return out;
}

bool series3_yz_symmetric(const Series3& a) {
    for (int k = 0; k <= a.order(); ++k)
        if (!(a.coeff(k).swap_yz() == a.coeff(k))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Comparison with the Tamari lattice
// ---------------------------------------------------------------------------

TamariReference tamari_reference(int n) {
    TamariReference out;
    Int twice = 2 * binomial(4LL * n + 1, n - 1);
    Int d = Int(n) * (n + 1);
    if (twice % d != 0) throw Error("interval closed form is not divisible by n(n+1)");
    out.intervals = twice / d;
    Int cov = Int(n - 1) * catalan_int(n);
    if (cov % 2 != 0) throw Error("covering closed form is odd");
    out.coverings = cov / 2;
    out.irreducibles = Int(n) * (n - 1) / 2;
    return out;
}

std::vector<RatioRow> ratio_report(int n_max) {
    std::vector<RatioRow> rows;
    for (int n = 2; n <= n_max; ++n) {
        RatioRow row;
        row.n = n;
        TamariReference t = tamari_reference(n);
        row.covering_ratio = Rat(t.coverings, E_coeff(n));
        row.interval_ratio = Rat(t.intervals, I1_coeff(n));
        row.asymptotic = std::exp((5.0 * n + 2.5) * std::log(2.0) -
                                  (3.0 * n + 0.5) * std::log(3.0) - std::log(double(n)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string fibonacci_word(const DyckPath& p) {
    if (p.semilength() < 4) throw BadInput("needs semilength at least 4");
    if (stat_s(p) != 1 || stat_t(p) != 1) throw BadInput("path is not doubly irreducible");
    std::string w;
    for (int i = 0; i < p.length(); ++i) {
        if (!p.up(i)) continue;
        const bool peak = i + 1 >= p.length() || !p.up(i + 1);
        w += peak ? '1' : '0';
    }
    if (w.size() < 3 || w.substr(w.size() - 3) != "011")
        throw Error("up-step word does not end with 011");
    return w.substr(0, w.size() - 3);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string to_string(const Series1& s) {
    std::string out;
    for (int k = 0; k <= s.order(); ++k)
        append_term(out, s.coeff(k).value(), power("x", k));
    if (out.empty()) out = "0";
    return out + " + O(x^" + std::to_string(s.order() + 1) + ")";
}

namespace {

std::string bracket(const std::string& poly) {
    return poly.find_first_of("+-", 1) == std::string::npos ? poly : "(" + poly + ")";
}

template <class S>
std::string multi_to_string(const S& s) {
    std::string out;
    for (int k = 0; k <= s.order(); ++k) {
        if (s.coeff(k).is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string xs = power("x", k);
        if (xs.empty())
            out += s.coeff(k).str();
        else
            out += bracket(s.coeff(k).str()) + "*" + xs;
    }
    if (out.empty()) out = "0";
    return out + " + O(x^" + std::to_string(s.order() + 1) + ")";
}

}  // namespace

std::string to_string(const SeriesXY& s) { return multi_to_string(s); }
std::string to_string(const Series3& s) { return multi_to_string(s); }

nlohmann::json series_json(const Series1& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(rat_str(s.coeff(k).value()));
    return {{"vars", {"x"}}, {"order", s.order()}, {"coeffs", coeffs}};
}

nlohmann::json series_json(const SeriesXY& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= s.order(); ++k) {
        nlohmann::json terms = nlohmann::json::array();
        for (int d = 0; d <= s.coeff(k).degree(); ++d)
            if (s.coeff(k).coeff(d) != 0)
                terms.push_back({{"y", d}, {"c", rat_str(s.coeff(k).coeff(d))}});
        coeffs.push_back(std::move(terms));
    }
    return {{"vars", {"x", "y"}}, {"order", s.order()}, {"coeffs", coeffs}};
}

nlohmann::json series_json(const Series3& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= s.order(); ++k) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [deg, v] : s.coeff(k).terms())
            terms.push_back({{"y", deg.first}, {"z", deg.second}, {"c", rat_str(v)}});
        coeffs.push_back(std::move(terms));
    }
    return {{"vars", {"x", "y", "z"}}, {"order", s.order()}, {"coeffs", coeffs}};
}

}  // namespace dycklat
