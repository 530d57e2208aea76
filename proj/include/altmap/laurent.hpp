#ifndef ALTMAP_LAURENT_HPP
#define ALTMAP_LAURENT_HPP

#include <altmap/series.hpp>

#include <map>

namespace altmap {

// Laurent series in one distinguished variable zeta, ascending: sum over
// k >= low of c_k zeta^k, with coefficients c_k living in a common
// multivariate Series ring. The window [low, top] brackets what is known:
// no nonzero term below low, coefficients reliable through top
// (top == kUnbounded for exact Laurent polynomials).
//
// Descending expansions (formal series in x^{-1}) are represented by taking
// zeta = x^{-1}, so positive powers of x sit at negative zeta powers.
class LSeries {
public:
    // Zero with the given coefficient-ring prototype and window.
    LSeries(Series ring_zero, int low, int top);

    static LSeries term(const Series& coeff, int power, int top = kUnbounded);

    int low() const { return low_; }
    int top() const { return top_; }
    const Series& ring() const { return ring_zero_; }
    const std::map<int, Series>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int min_power() const; // smallest power with nonzero coefficient (low_ if zero)
    int max_power() const;

    Series coeff(int power) const; // throws above top
    Series coeff_raw(int power) const;

    LSeries operator-() const;
    LSeries truncated(int top) const;
    LSeries shifted(int k) const; // multiply by zeta^k

    // Reciprocal: the coefficient at min_power() must be a unit Series.
    // result_top caps the expansion depth.
    LSeries inverse(int result_top) const;

    LSeries pow(unsigned n) const;

    // True when every known coefficient with power <= through vanishes.
    bool is_zero_through(int through) const;

    friend LSeries operator+(const LSeries& a, const LSeries& b);
    friend LSeries operator-(const LSeries& a, const LSeries& b);
    friend LSeries operator*(const LSeries& a, const LSeries& b);
    friend LSeries operator*(const Series& c, const LSeries& a);

    void add_term(int power, const Series& c); // accumulate, respecting window

private:
    static void require_same_ring(const LSeries& a, const LSeries& b);

    Series ring_zero_;
    std::map<int, Series> terms_;
    int low_;
    int top_;
};

// Evaluate f, viewed as a power series in var, at the Laurent argument arg
// (which must have min_power() >= 1 so the substitution converges).
// The remaining variables of f pass through into arg's coefficient ring,
// which must therefore share f's variable set.
LSeries eval_series(const Series& f, const std::string& var, const LSeries& arg);

// Evaluate an exact Laurent polynomial P (finitely many powers, possibly
// negative) at a Laurent argument; negative powers go through arg.inverse().
LSeries eval_laurent_poly(const LSeries& p, const LSeries& arg, int result_top);

} // namespace altmap

#endif
