#include <altmap/series.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace altmap {

namespace {

std::vector<int> trunc_min(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

// Upper bound on how many times a window-nilpotent series must be multiplied
// with itself before it leaves every finite window.
long window_budget(const std::vector<int>& trunc)
{
    long n = 1;
    for (int t : trunc)
        if (t != kUnbounded) n += t;
    return n;
}

} // namespace

Series::Series(std::vector<std::string> vars, std::vector<int> trunc)
    : vars_(std::move(vars)), trunc_(std::move(trunc))
{
    if (vars_.size() != trunc_.size())
        throw std::invalid_argument("Series: vars/trunc size mismatch");
    for (int t : trunc_)
        if (t < 0) throw std::invalid_argument("Series: negative truncation");
}

Series Series::constant(std::vector<std::string> vars, std::vector<int> trunc,
                        const Rational& c)
{
    Series s(std::move(vars), std::move(trunc));
    s.insert(Exp(s.vars_.size(), 0), c);
    return s;
}

Series Series::variable(std::vector<std::string> vars, std::vector<int> trunc,
                        const std::string& name)
{
    Series s(std::move(vars), std::move(trunc));
    Exp e(s.vars_.size(), 0);
    e[s.var_index(name)] = 1;
    s.insert(e, Rational(1));
    return s;
}

Series Series::monomial(std::vector<std::string> vars, std::vector<int> trunc,
                        const Exp& e, const Rational& c)
{
    Series s(std::move(vars), std::move(trunc));
    if (e.size() != s.vars_.size())
        throw std::invalid_argument("Series::monomial: bad exponent length");
    s.insert(e, c);
    return s;
}

std::size_t Series::var_index(const std::string& name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw std::invalid_argument("Series: unknown variable " + name);
}

bool Series::in_window(const Exp& e) const
{
    for (std::size_t i = 0; i < e.size(); ++i)
        if (trunc_[i] != kUnbounded && e[i] > trunc_[i]) return false;
    return true;
}

void Series::insert(const Exp& e, const Rational& c_in)
{
    Rational c = c_in;
    c.canonicalize(); // guard against non-canonical caller-supplied fractions
    if (c == 0 || !in_window(e)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Series::coeff(const Exp& e) const
{
    if (e.size() != vars_.size())
        throw std::invalid_argument("Series::coeff: bad exponent length");
    if (!in_window(e))
        throw std::out_of_range("Series::coeff: index outside truncation window");
    return coeff_raw(e);
}

Rational Series::coeff(const std::string& var, int k) const
{
    Exp e(vars_.size(), 0);
    e[var_index(var)] = k;
    return coeff(e);
}

Rational Series::coeff_raw(const Exp& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const
{
    return coeff_raw(Exp(vars_.size(), 0));
}

int Series::max_degree(const std::string& var) const
{
    std::size_t i = var_index(var);
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

Series Series::with_trunc(std::vector<int> trunc) const
{
    Series r(vars_, std::move(trunc));
    for (const auto& [e, c] : terms_) r.insert(e, c);
    return r;
}

void Series::require_same_ring(const Series& a, const Series& b)
{
    if (a.vars_ != b.vars_)
        throw std::invalid_argument("Series: variable-set mismatch");
}

Series operator+(const Series& a, const Series& b)
{
    Series::require_same_ring(a, b);
    Series r(a.vars_, trunc_min(a.trunc_, b.trunc_));
    for (const auto& [e, c] : a.terms_) r.insert(e, c);
    for (const auto& [e, c] : b.terms_) r.insert(e, c);
    return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series Series::operator-() const
{
    Series r(vars_, trunc_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Series operator*(const Series& a, const Series& b)
{
    Series::require_same_ring(a, b);
    Series r(a.vars_, trunc_min(a.trunc_, b.trunc_));
    Exp e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            bool ok = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (r.trunc_[i] != kUnbounded && e[i] > r.trunc_[i]) { ok = false; break; }
            }
            if (ok) r.insert(e, ca * cb);
        }
    }
    return r;
}

Series operator*(const Rational& c_in, const Series& a)
{
    Rational c = c_in;
    c.canonicalize();
    Series r(a.vars_, a.trunc_);
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms_) r.terms_.emplace(e, c * k);
    return r;
}

Series Series::pow(unsigned n) const
{
    Series r = Series::constant(vars_, trunc_, Rational(1));
    Series base = *this;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

Series Series::inverse() const
{
    Rational c0 = constant_term();
    if (c0 == 0)
        throw std::domain_error("Series::inverse: constant term is zero");
    Series one = Series::constant(vars_, trunc_, Rational(1));
    // Every non-constant monomial must gain order in some truncated variable,
    // otherwise the Neumann tail never leaves the window.
    for (const auto& [e, c] : terms_) {
        bool constant = true, gains = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                constant = false;
                if (trunc_[i] != kUnbounded) gains = true;
            }
        }
        if (!constant && !gains)
            throw std::domain_error("Series::inverse: not invertible within window");
    }
    // Newton iteration h <- h(2 - f h), quadratic convergence in the window metric.
    Series h = Series::constant(vars_, trunc_, Rational(1) / c0);
    Series two = Series::constant(vars_, trunc_, Rational(2));
    long budget = window_budget(trunc_);
    for (long it = 0; it < 64; ++it) {
        Series err = one - (*this) * h;
        if (err.is_zero()) return h;
        h = h * (two - (*this) * h);
        if ((1L << std::min<long>(it, 60)) > budget && it > 2) break;
    }
    Series err = one - (*this) * h;
    if (!err.is_zero())
        throw std::logic_error("Series::inverse: Newton iteration failed to converge");
    return h;
}

Series Series::sqrt() const
{
    if (constant_term() != 1)
        throw std::domain_error("Series::sqrt: constant term must be 1");
    // Newton on the inverse square root: y <- y(3 - f y^2)/2, then S = f y.
    Series y = Series::constant(vars_, trunc_, Rational(1));
    Series three = Series::constant(vars_, trunc_, Rational(3));
    Rational half(1, 2);
    long budget = window_budget(trunc_);
    for (long it = 0; it < 64; ++it) {
        Series s = (*this) * y;
        Series err = s * s - *this;
        if (err.is_zero()) return s;
        y = half * (y * (three - (*this) * (y * y)));
        if ((1L << std::min<long>(it, 60)) > budget && it > 2) break;
    }
    Series s = (*this) * y;
    if (!(s * s - *this).is_zero())
        throw std::logic_error("Series::sqrt: Newton iteration failed to converge");
    return s;
}

Series Series::derive(const std::string& var) const
{
    std::size_t i = var_index(var);
    std::vector<int> tr = trunc_;
    if (tr[i] != kUnbounded && tr[i] > 0) tr[i] -= 1;
    Series r(vars_, tr);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exp f = e;
        f[i] -= 1;
        r.insert(f, c * Rational(e[i]));
    }
    return r;
}

Series Series::integrate(const std::string& var) const
{
    std::size_t i = var_index(var);
    std::vector<int> tr = trunc_;
    if (tr[i] != kUnbounded && tr[i] < kUnbounded - 1) tr[i] += 1;
    Series r(vars_, tr);
    for (const auto& [e, c] : terms_) {
        Exp f = e;
        f[i] += 1;
        r.insert(f, c / Rational(f[i]));
    }
    return r;
}

bool Series::window_equal(const Series& other) const
{
    require_same_ring(*this, other);
    std::vector<int> w = trunc_min(trunc_, other.trunc_);
    auto within = [&w](const Exp& e) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (w[i] != kUnbounded && e[i] > w[i]) return false;
        return true;
    };
    for (const auto& [e, c] : terms_)
        if (within(e) && other.coeff_raw(e) != c) return false;
    for (const auto& [e, c] : other.terms_)
        if (within(e) && coeff_raw(e) != c) return false;
    return true;
}

Series Series::shifted(const std::string& var, int shift) const
{
    if (shift < 0) throw std::invalid_argument("Series::shifted: negative shift");
    std::size_t i = var_index(var);
    Series r(vars_, trunc_);
    for (const auto& [e, c] : terms_) {
        Exp f = e;
        f[i] += shift;
        r.insert(f, c);
    }
    return r;
}

Series Series::divided_by_power(const std::string& var, int k) const
{
    std::size_t i = var_index(var);
    std::vector<int> tr = trunc_;
    if (tr[i] != kUnbounded) tr[i] = std::max(0, tr[i] - k);
    Series r(vars_, tr);
    for (const auto& [e, c] : terms_) {
        if (e[i] < k)
            throw std::domain_error("Series::divided_by_power: not divisible");
        Exp f = e;
        f[i] -= k;
        r.insert(f, c);
    }
    return r;
}

Series compose(const Series& f, const std::map<std::string, Series>& assignment)
{
    const auto& fv = f.vars();
    if (assignment.empty())
        throw std::invalid_argument("compose: empty assignment");
    const Series& proto = assignment.begin()->second;
    for (const auto& [name, img] : assignment)
        if (img.vars() != proto.vars() || img.trunc() != proto.trunc())
            throw std::invalid_argument("compose: images must share one ring");
    std::vector<const Series*> image(fv.size(), nullptr);
    for (std::size_t i = 0; i < fv.size(); ++i) {
        auto it = assignment.find(fv[i]);
        if (it == assignment.end())
            throw std::invalid_argument("compose: missing image for " + fv[i]);
        image[i] = &it->second;
        if (f.trunc()[i] != kUnbounded && it->second.constant_term() != 0)
            throw std::domain_error(
                "compose: non-convergent substitution for truncated variable " + fv[i]);
    }
    // Cache image powers per variable.
    std::vector<std::vector<Series>> powers(fv.size());
    Series one = Series::constant(proto.vars(), proto.trunc(), Rational(1));
    for (std::size_t i = 0; i < fv.size(); ++i) {
        int dmax = f.max_degree(fv[i]);
        powers[i].push_back(one);
        for (int k = 1; k <= dmax; ++k)
            powers[i].push_back(powers[i].back() * (*image[i]));
    }
    Series r(proto.vars(), proto.trunc());
    for (const auto& [e, c] : f.terms()) {
        Series term = c * one;
        for (std::size_t i = 0; i < fv.size(); ++i)
            if (e[i] > 0) term = term * powers[i][e[i]];
        r = r + term;
    }
    return r;
}

Series revert(const Series& f, const std::string& var)
{
    std::size_t vi = f.var_index(var);
    int order = f.trunc()[vi];
    if (order == kUnbounded)
        throw std::invalid_argument("revert: variable must be truncated");
    // f must be var + O(var^2): no var-degree-0 part, var-degree-1 part exactly var.
    for (const auto& [e, c] : f.terms()) {
        if (e[vi] == 0)
            throw std::domain_error("revert: nonzero constant term in " + var);
        if (e[vi] == 1) {
            bool pure = true;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != vi && e[i] != 0) pure = false;
            if (!pure || c != 1)
                throw std::domain_error("revert: leading coefficient of " + var +
                                        " must be exactly 1");
        }
    }
    Series g = Series::variable(f.vars(), f.trunc(), var);
    std::map<std::string, Series> id;
    for (const auto& name : f.vars())
        id.emplace(name, Series::variable(f.vars(), f.trunc(), name));
    for (int it = 0; it < order; ++it) {
        auto asg = id;
        asg.at(var) = g;
        Series err = compose(f, asg) - Series::variable(f.vars(), f.trunc(), var);
        if (err.is_zero()) break;
        g = g - err;
    }
    return g;
}

Series embed(const Series& s, std::vector<std::string> vars, std::vector<int> trunc)
{
    if (vars.size() != trunc.size())
        throw std::invalid_argument("embed: vars/trunc size mismatch");
    std::vector<int> src(vars.size(), -1);
    for (std::size_t j = 0; j < vars.size(); ++j) {
        for (std::size_t i = 0; i < s.vars().size(); ++i)
            if (s.vars()[i] == vars[j]) {
                if (s.trunc()[i] != trunc[j])
                    throw std::invalid_argument(
                        "embed: truncation changed for variable " + vars[j]);
                src[j] = static_cast<int>(i);
            }
    }
    std::size_t matched = 0;
    for (int i : src)
        if (i >= 0) ++matched;
    if (matched != s.vars().size())
        throw std::invalid_argument("embed: source variable missing from target ring");

    Series r(vars, std::move(trunc));
    for (const auto& [e, c] : s.terms()) {
        Exp ne(vars.size(), 0);
        for (std::size_t j = 0; j < vars.size(); ++j)
            if (src[j] >= 0) ne[j] = e[src[j]];
        r = r + Series::monomial(r.vars(), r.trunc(), ne, c);
    }
    return r;
}

std::string to_string(const Series& s)
{
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : s.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.get_str() << ")";
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) {
                os << "*" << s.vars()[i];
                if (e[i] > 1) os << "^" << e[i];
            }
    }
    return os.str();
}

} // namespace altmap
