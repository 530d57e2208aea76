#include <altmap/laurent.hpp>

#include <stdexcept>

namespace altmap {

namespace {

int add_cap(int a, int b)
{
    if (a == kUnbounded || b == kUnbounded) return kUnbounded;
    long s = static_cast<long>(a) + b;
    if (s >= kUnbounded) return kUnbounded;
    if (s <= -kUnbounded) return -kUnbounded + 1;
    return static_cast<int>(s);
}

} // namespace

LSeries::LSeries(Series ring_zero, int low, int top)
    : ring_zero_(std::move(ring_zero)), low_(low), top_(top)
{
    if (!ring_zero_.is_zero())
        throw std::invalid_argument("LSeries: ring prototype must be the zero series");
}

LSeries LSeries::term(const Series& coeff, int power, int top)
{
    Series zero(coeff.vars(), coeff.trunc());
    LSeries r(zero, power, top);
    r.add_term(power, coeff);
    return r;
}

void LSeries::add_term(int power, const Series& c)
{
    if (power < low_) low_ = power;
    if (power > top_ || c.is_zero()) return;
    auto it = terms_.find(power);
    if (it == terms_.end()) {
        terms_.emplace(power, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int LSeries::min_power() const
{
    return terms_.empty() ? low_ : terms_.begin()->first;
}

int LSeries::max_power() const
{
    return terms_.empty() ? low_ : terms_.rbegin()->first;
}

Series LSeries::coeff(int power) const
{
    if (power > top_)
        throw std::out_of_range("LSeries::coeff: power above reliability window");
    return coeff_raw(power);
}

Series LSeries::coeff_raw(int power) const
{
    auto it = terms_.find(power);
    return it == terms_.end() ? ring_zero_ : it->second;
}

LSeries LSeries::operator-() const
{
    LSeries r(ring_zero_, low_, top_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

LSeries LSeries::truncated(int top) const
{
    LSeries r(ring_zero_, low_, std::min(top, top_));
    for (const auto& [p, c] : terms_)
        if (p <= r.top_) r.terms_.emplace(p, c);
    return r;
}

LSeries LSeries::shifted(int k) const
{
    LSeries r(ring_zero_, add_cap(low_, k), add_cap(top_, k));
    for (const auto& [p, c] : terms_) r.terms_.emplace(p + k, c);
    return r;
}

void LSeries::require_same_ring(const LSeries& a, const LSeries& b)
{
    if (a.ring_zero_.vars() != b.ring_zero_.vars() ||
        a.ring_zero_.trunc() != b.ring_zero_.trunc())
        throw std::invalid_argument("LSeries: coefficient-ring mismatch");
}

LSeries operator+(const LSeries& a, const LSeries& b)
{
    LSeries::require_same_ring(a, b);
    LSeries r(a.ring_zero_, std::min(a.low_, b.low_), std::min(a.top_, b.top_));
    for (const auto& [p, c] : a.terms_) r.add_term(p, c);
    for (const auto& [p, c] : b.terms_) r.add_term(p, c);
    return r;
}

LSeries operator-(const LSeries& a, const LSeries& b) { return a + (-b); }

LSeries operator*(const LSeries& a, const LSeries& b)
{
    LSeries::require_same_ring(a, b);
    // Unknown tail of one factor meets the known head of the other at
    // top_a + low_b (resp. top_b + low_a); the product is reliable below both.
    int top = std::min(add_cap(a.top_, b.low_), add_cap(b.top_, a.low_));
    LSeries r(a.ring_zero_, add_cap(a.low_, b.low_), top);
    for (const auto& [pa, ca] : a.terms_)
        for (const auto& [pb, cb] : b.terms_)
            if (pa + pb <= top) r.add_term(pa + pb, ca * cb);
    return r;
}

LSeries operator*(const Series& c, const LSeries& a)
{
    LSeries r(a.ring_zero_, a.low_, a.top_);
    for (const auto& [p, k] : a.terms_) r.add_term(p, c * k);
    return r;
}

LSeries LSeries::pow(unsigned n) const
{
    LSeries r = LSeries::term(
        Series::constant(ring_zero_.vars(), ring_zero_.trunc(), 1), 0);
    LSeries base = *this;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

bool LSeries::is_zero_through(int through) const
{
    int lim = std::min(through, top_);
    for (const auto& [p, c] : terms_)
        if (p <= lim && !c.is_zero()) return false;
    return true;
}

LSeries LSeries::inverse(int result_top) const
{
    if (is_zero())
        throw std::domain_error("LSeries::inverse: zero series");
    int l = min_power();
    Series lead = coeff_raw(l);
    Series lead_inv = lead.inverse(); // must be a unit in the coefficient ring
    // Known window of the reciprocal: a tail error zeta^{>top} in this series
    // perturbs 1/L by ~ tail/L^2 ~ zeta^{> top - 2l}.
    int top = std::min(result_top, add_cap(top_, -2 * l));
    Series one = Series::constant(ring_zero_.vars(), ring_zero_.trunc(), 1);
    // N := lead_inv * zeta^{-l} * L - 1 has min power >= 1.
    LSeries n = (lead_inv * shifted(-l)).truncated(add_cap(top, l)) -
                LSeries::term(one, 0);
    if (!n.is_zero() && n.min_power() < 1)
        throw std::logic_error("LSeries::inverse: internal valuation error");
    LSeries acc = LSeries::term(one, 0, add_cap(top, l));
    LSeries p = acc;
    long cap = static_cast<long>(add_cap(top, l)) + 1;
    for (long k = 1; k <= cap; ++k) {
        p = (p * (-n)).truncated(add_cap(top, l));
        if (p.is_zero()) break;
        acc = acc + p;
    }
    return (lead_inv * acc.shifted(-l)).truncated(top);
}

LSeries eval_series(const Series& f, const std::string& var, const LSeries& arg)
{
    if (f.vars() != arg.ring().vars() || f.trunc() != arg.ring().trunc())
        throw std::invalid_argument("eval_series: ring mismatch with argument");
    if (!arg.is_zero() && arg.min_power() < 1)
        throw std::domain_error("eval_series: argument must have positive valuation");
    std::size_t vi = f.var_index(var);
    std::map<int, Series> slices;
    for (const auto& [e, c] : f.terms()) {
        Exp rest = e;
        int k = rest[vi];
        rest[vi] = 0;
        auto [it, fresh] = slices.emplace(k, arg.ring());
        it->second = it->second + Series::monomial(f.vars(), f.trunc(), rest, c);
    }
    int vtrunc = f.trunc()[vi];
    int minpow = arg.is_zero() ? 1 : arg.min_power();
    int top = arg.top();
    if (vtrunc != kUnbounded) {
        // Dropped slices beyond the var window start at power (vtrunc+1)*minpow.
        long cut = static_cast<long>(vtrunc + 1) * minpow - 1;
        top = std::min<long>(top, cut);
    }
    LSeries r(arg.ring(), 0, static_cast<int>(top));
    LSeries p = LSeries::term(
        Series::constant(f.vars(), f.trunc(), 1), 0, static_cast<int>(top));
    int k_prev = 0;
    for (const auto& [k, slice] : slices) {
        for (int j = k_prev; j < k; ++j) p = (p * arg).truncated(static_cast<int>(top));
        k_prev = k;
        r = r + slice * p;
    }
    return r.truncated(static_cast<int>(top));
}

LSeries eval_laurent_poly(const LSeries& p, const LSeries& arg, int result_top)
{
    if (p.top() != kUnbounded)
        throw std::invalid_argument("eval_laurent_poly: polynomial must be exact");
    LSeries r(arg.ring(), 0, result_top);
    if (p.is_zero()) return r;
    Series one = Series::constant(arg.ring().vars(), arg.ring().trunc(), 1);
    int lo = p.min_power(), hi = p.max_power();
    LSeries inv = lo < 0 ? arg.inverse(result_top + std::abs(lo) * std::abs(arg.min_power()) + 2)
                         : LSeries::term(one, 0);
    std::map<int, LSeries> pw;
    pw.emplace(0, LSeries::term(one, 0));
    for (int k = 1; k <= std::max(hi, 0); ++k)
        pw.emplace(k, pw.at(k - 1) * arg);
    for (int k = -1; k >= std::min(lo, 0); --k)
        pw.emplace(k, pw.at(k + 1) * inv);
    for (const auto& [k, c] : p.terms()) r = r + (c * pw.at(k)).truncated(result_top);
    return r.truncated(result_top);
}

} // namespace altmap
