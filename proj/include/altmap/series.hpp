#ifndef ALTMAP_SERIES_HPP
#define ALTMAP_SERIES_HPP

#include <altmap/rational.hpp>

#include <climits>
#include <map>
#include <string>
#include <vector>

namespace altmap {

// Exponent vector; length always equals the ambient variable count.
using Exp = std::vector<int>;

// Per-variable truncation bound: coefficients with exponent <= bound are
// tracked and reliable. kUnbounded marks a variable in which the series is an
// exact polynomial.
constexpr int kUnbounded = INT_MAX;

// Sparse multivariate truncated power series over exact rationals.
// Invariants: no stored coefficient is zero; every stored exponent lies within
// the truncation window. Values are immutable after construction; all
// operations return new series.
class Series {
public:
    Series() = default;
    Series(std::vector<std::string> vars, std::vector<int> trunc);

    static Series constant(std::vector<std::string> vars, std::vector<int> trunc,
                           const Rational& c);
    static Series variable(std::vector<std::string> vars, std::vector<int> trunc,
                           const std::string& name);
    static Series monomial(std::vector<std::string> vars, std::vector<int> trunc,
                           const Exp& e, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& trunc() const { return trunc_; }
    const std::map<Exp, Rational>& terms() const { return terms_; }

    std::size_t var_index(const std::string& name) const;

    bool is_zero() const { return terms_.empty(); }

    // Exact coefficient; throws if the index is outside the truncation window
    // (the coefficient there would be unreliable).
    Rational coeff(const Exp& e) const;
    Rational coeff(const std::string& var, int k) const; // univariate shorthand

    // Coefficient lookup without the window check (0 if absent).
    Rational coeff_raw(const Exp& e) const;

    // Constant term.
    Rational constant_term() const;

    // Largest stored exponent of var (-1 if var absent from every term).
    int max_degree(const std::string& var) const;

    // Same coefficients, new window (terms outside the new window are dropped).
    Series with_trunc(std::vector<int> trunc) const;

    Series operator-() const;
    Series pow(unsigned n) const;

    // Reciprocal; requires an invertible (nonzero) constant term and that the
    // non-constant part vanishes in some power within the window.
    Series inverse() const;

    // Square root with constant term 1 (Newton on the inverse square root).
    Series sqrt() const;

    Series derive(const std::string& var) const;
    Series integrate(const std::string& var) const;

    // Equality on the intersection of the truncation windows.
    bool window_equal(const Series& other) const;

    // Strict structural equality (same ring, same stored terms).
    friend bool operator==(const Series& a, const Series& b)
    {
        return a.vars_ == b.vars_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    // Scale every exponent of var by replacing e -> e + shift (shift >= 0),
    // i.e. multiply by var^shift. Terms leaving the window are dropped.
    Series shifted(const std::string& var, int shift) const;

    // Divide by var^k; throws if any term has exponent < k in var.
    Series divided_by_power(const std::string& var, int k) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Rational& c, const Series& a);

private:
    void insert(const Exp& e, const Rational& c); // adds, drops zero/out-of-window
    bool in_window(const Exp& e) const;
    static void require_same_ring(const Series& a, const Series& b);

    std::vector<std::string> vars_;
    std::vector<int> trunc_;
    std::map<Exp, Rational> terms_;
};

inline Series operator*(const Series& a, const Rational& c) { return c * a; }

// Substitute every variable of f according to assignment. All images must
// share one variable set and truncation (the result ring). For any variable in
// which f is truncated (not an exact polynomial), the image must have zero
// constant term; otherwise the dropped tail of f would pollute the window.
Series compose(const Series& f, const std::map<std::string, Series>& assignment);

// Compositional inverse in var: f = var + O(var^2) with leading coefficient
// exactly 1; returns g with f(g) = var up to truncation.
Series revert(const Series& f, const std::string& var);

// Reinterpret s in a larger ring: every variable of s must appear in vars
// with the same truncation bound; extra variables get exponent 0.
Series embed(const Series& s, std::vector<std::string> vars,
             std::vector<int> trunc);

std::string to_string(const Series& s);

} // namespace altmap

#endif
