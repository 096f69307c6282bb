#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dycklat/dyck_path.hpp"
#include "json.hpp"

namespace dycklat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultOrder1 = 12;  // univariate truncation
inline constexpr int kDefaultOrder3 = 9;   // bi/tri-variate truncation

// ---------------------------------------------------------------------------
// Coefficient rings
// ---------------------------------------------------------------------------

/// Dense polynomial in y with rational coefficients.
class PolyY {
public:
    PolyY() = default;
    explicit PolyY(Rat constant);
    static PolyY monomial(int deg, Rat coeff = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rat coeff(int deg) const;
    bool is_zero() const { return c_.empty(); }
    Rat eval_one() const;

    PolyY& operator+=(const PolyY& o);
    PolyY& operator-=(const PolyY& o);
    friend PolyY operator+(PolyY a, const PolyY& b) { return a += b; }
    friend PolyY operator-(PolyY a, const PolyY& b) { return a -= b; }
    friend PolyY operator*(const PolyY& a, const PolyY& b);
    friend bool operator==(const PolyY&, const PolyY&) = default;

    /// Exact division; throws Error on a nonzero remainder.
    PolyY divide_exact(const PolyY& d) const;
    PolyY scale(const Rat& f) const;

    /// (p(y) - p(1)) / (y - 1) expanded monomial by monomial.
    PolyY divided_difference() const;

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;  // c_[i] is the y^i coefficient
};

/// Sparse polynomial in y and z with rational coefficients.
class PolyYZ {
public:
    PolyYZ() = default;
    explicit PolyYZ(Rat constant);
    static PolyYZ monomial(int ydeg, int zdeg, Rat coeff = 1);

    bool is_zero() const { return m_.empty(); }
    Rat coeff(int ydeg, int zdeg) const;
    const std::map<std::pair<int, int>, Rat>& terms() const { return m_; }

    PolyYZ& operator+=(const PolyYZ& o);
    PolyYZ& operator-=(const PolyYZ& o);
    friend PolyYZ operator+(PolyYZ a, const PolyYZ& b) { return a += b; }
    friend PolyYZ operator-(PolyYZ a, const PolyYZ& b) { return a -= b; }
    friend PolyYZ operator*(const PolyYZ& a, const PolyYZ& b);
    friend bool operator==(const PolyYZ&, const PolyYZ&) = default;

    /// Only division by a constant polynomial is ever needed here.
    PolyYZ divide_exact(const PolyYZ& d) const;
    PolyYZ scale(const Rat& f) const;

    PolyYZ swap_yz() const;
    Rat eval_ones() const;

    std::string str() const;

private:
    std::map<std::pair<int, int>, Rat> m_;
};

// ---------------------------------------------------------------------------
// Truncated power series in x over a coefficient ring
// ---------------------------------------------------------------------------

template <class R>
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    R& coeff(int k) { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const {
        for (const R& r : c_)
            if (!r.is_zero()) return false;
        return true;
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries out(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order(); ++j) {
                if (b.c_[j].is_zero()) continue;
                out.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return out;
    }

    /// q with q*d = *this, coefficient recurrence; each step divides exactly
    /// by d's constant coefficient.
    TruncSeries div(const TruncSeries& d) const {
        TruncSeries q(order());
        for (int k = 0; k <= order(); ++k) {
            R acc = c_[static_cast<std::size_t>(k)];
            for (int i = 0; i < k; ++i) acc -= q.c_[i] * d.c_[k - i];
            q.c_[k] = acc.divide_exact(d.c_[0]);
        }
        return q;
    }

    /// Multiplication by x^k (drops the top coefficients).
    TruncSeries shift_up(int k) const {
        TruncSeries out(order());
        for (int i = 0; i + k <= order(); ++i) out.c_[i + k] = c_[i];
        return out;
    }
    /// Division by x^k; the low coefficients must vanish.
    TruncSeries shift_down(int k) const;

    TruncSeries scale(const Rat& f) const {
        TruncSeries out(order());
        for (int i = 0; i <= order(); ++i) out.c_[i] = c_[i].scale(f);
        return out;
    }

private:
    std::vector<R> c_;
};

/// Wrapper giving Rat the coefficient-ring surface the template expects.
class RatC {
public:
    RatC() = default;
    RatC(Rat v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    const Rat& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    RatC& operator+=(const RatC& o) { v_ += o.v_; return *this; }
    RatC& operator-=(const RatC& o) { v_ -= o.v_; return *this; }
    friend RatC operator*(const RatC& a, const RatC& b) { return RatC(a.v_ * b.v_); }
    RatC divide_exact(const RatC& d) const;
    RatC scale(const Rat& f) const { return RatC(v_ * f); }
    friend bool operator==(const RatC&, const RatC&) = default;

private:
    Rat v_ = 0;
};

using Series1 = TruncSeries<RatC>;   // exact rational coefficients
using SeriesXY = TruncSeries<PolyY>; // houses J(x,y), I(x,y), C(xy)
using Series3 = TruncSeries<PolyYZ>; // houses A(x,y,z)

/// sqrt by Newton iteration with doubling precision; constant term must be 1.
Series1 sqrt_unit(const Series1& a);
Series3 sqrt_unit(const Series3& a);

Series1 inverse_unit(const Series1& a);

/// Substitutes g (with g(0) = 0) into f.
Series1 compose(const Series1& f, const Series1& g);

Series1 series_one(int order);
Series1 series_x(int order);

Int series1_int_coeff(const Series1& s, int k);  // throws on non-integers

// ---------------------------------------------------------------------------
// Closed-form generating functions
// ---------------------------------------------------------------------------

Series1 catalan_series(int order);

Series1 E_series(int order);  // total covering count (Hasse edges)
Int E_coeff(int n);           // binomial-sum closed form

Series1 K_series(int order);  // meet (= join) irreducible count
Int K_coeff(int n);           // 2^(n-1) - 1

Series1 L_series(int order);  // doubly irreducible count (3, then Fibonacci)

Series1 J1_series(int order);  // intervals with prime upper path
Int J1_coeff(int n);           // 2^(n-1) * Catalan(n-1)
Series1 I1_series(int order);  // all intervals
Int I1_coeff(int n);

/// The kernel root y_0 = (1 + 4x - sqrt(1-8x)) / (8x) expanded in x.
Series1 kernel_root(int order);

struct KernelResiduals {
    bool eq1_zero = false;
    bool eq2_zero = false;
};
KernelResiduals verify_kernel_equations(int order);

SeriesXY J_series(int order);  // closed-form rational expression
SeriesXY I_series(int order);

SeriesXY catalan_xy(int order);          // C(xy)
Series1 seriesxy_at_y1(const SeriesXY&); // substitute y = 1

bool verify_lemma_interval_split(int order);    // I = J + I(x,1) J
bool verify_lemma_prime_upper(int order);       // J = xy + xy I + DD(J) C(xy) x y^2
bool verify_I_from_J(int order);                // I = J / (1 - J(x,1))
bool verify_J_quadratic(int order);             // J(x,1) = x + 2 J(x,1)^2

Series3 A_series(int order);
bool verify_A_functional_equation(const Series3& a);
Series3 series3_from_tally(int order);  // brute-force (s,t) tallies over D_n
bool series3_yz_symmetric(const Series3& a);

Int binomial(long long n, long long k);
Int catalan_int(int n);

struct TamariReference {
    Int intervals;
    Int coverings;
    Int irreducibles;
};
TamariReference tamari_reference(int n);

struct RatioRow {
    int n = 0;
    Rat covering_ratio;   // Tamari coverings / restricted coverings
    Rat interval_ratio;   // Tamari intervals / restricted intervals
    double asymptotic = 0;
};
std::vector<RatioRow> ratio_report(int n_max);

/// Maps a doubly irreducible path (n >= 4) to its binary word avoiding 11.
std::string fibonacci_word(const DyckPath& p);

// Rendering: explicit monomial sums in stable order (x, then y, then z).
std::string to_string(const Series1& s);
std::string to_string(const SeriesXY& s);
std::string to_string(const Series3& s);
nlohmann::json series_json(const Series1& s);
nlohmann::json series_json(const SeriesXY& s);
nlohmann::json series_json(const Series3& s);

}  // namespace dycklat
