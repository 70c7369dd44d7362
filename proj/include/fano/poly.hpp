#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano/field.hpp"
#include "fano/matrix.hpp"

namespace fano {

// ---------------------------------------------------------------------------
// Univariate polynomials over F_p, coefficients stored low to high.

using UPoly = std::vector<PrimeField::elem>;

namespace upoly {

void trim(UPoly& f);
int degree(const UPoly& f);  // -1 for the zero polynomial
UPoly add(const PrimeField& F, const UPoly& f, const UPoly& g);
UPoly sub(const PrimeField& F, const UPoly& f, const UPoly& g);
UPoly mul(const PrimeField& F, const UPoly& f, const UPoly& g);
UPoly scale(const PrimeField& F, PrimeField::elem s, const UPoly& f);
/// f = q g + r with deg r < deg g.
void divmod(const PrimeField& F, const UPoly& f, const UPoly& g, UPoly& q, UPoly& r);
UPoly mod(const PrimeField& F, const UPoly& f, const UPoly& g);
UPoly monic(const PrimeField& F, const UPoly& f);
UPoly gcd(const PrimeField& F, UPoly f, UPoly g);
UPoly derivative(const PrimeField& F, const UPoly& f);
PrimeField::elem eval(const PrimeField& F, const UPoly& f, PrimeField::elem x);
/// Vanishing order at x = 0.
int order_at_zero(const UPoly& f);

struct Root {
    PrimeField::elem x;
    int multiplicity;
};
/// All roots in F_p with multiplicities, sorted by value. f must be nonzero.
std::vector<Root> roots(const PrimeField& F, const UPoly& f, std::uint64_t seed = 0);

}  // namespace upoly

/// Coefficients of the interpolating polynomial through (xs[i], ys[i]).
template <class K>
std::vector<typename K::elem> interpolate(const K& F, const std::vector<typename K::elem>& xs,
                                          const std::vector<typename K::elem>& ys) {
    const std::size_t n = xs.size();
    if (ys.size() != n) throw std::invalid_argument("interpolate: size mismatch");
    // Newton divided differences, then expansion into the monomial basis.
    std::vector<typename K::elem> d = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            auto den = F.sub(xs[i], xs[i - j]);
            if (F.is_zero(den)) throw std::invalid_argument("interpolate: repeated node");
            d[i] = F.div(F.sub(d[i], d[i - 1]), den);
            if (i == j) break;
        }
    std::vector<typename K::elem> c(n, F.zero());
    for (std::size_t ii = n; ii-- > 0;) {
        // c = c * (x - xs[ii]) + d[ii]
        for (std::size_t t = n - 1; t > 0; --t) c[t] = F.sub(c[t - 1], F.mul(c[t], xs[ii]));
        c[0] = F.sub(d[ii], F.mul(c[0], xs[ii]));
    }
    return c;
}

/// Coefficients (low to high) of z -> det(A0 + z A1), by interpolation at the
/// nodes 0..n.
template <class K>
std::vector<typename K::elem> det_along_line(const K& F, const Mat<typename K::elem>& A0,
                                             const Mat<typename K::elem>& A1) {
    if (A0.rows != A0.cols || A1.rows != A0.rows || A1.cols != A0.cols)
        throw std::invalid_argument("det_along_line: shape mismatch");
    const std::size_t n = A0.rows;
    if (F.size() != 0 && F.size() <= n)
        throw std::invalid_argument("det_along_line: field has fewer than n+1 elements");
    std::vector<typename K::elem> xs, ys;
    for (std::size_t i = 0; i <= n; ++i) {
        auto z = F.from_int(static_cast<long long>(i));
        xs.push_back(z);
        ys.push_back(det(F, combo(F, F.one(), A0, z, A1)));
    }
    auto c = interpolate(F, xs, ys);
    return c;
}

// ---------------------------------------------------------------------------
// Binary forms: c[i] is the coefficient of lambda^i mu^(d-i).

template <class K>
struct BinaryForm {
    std::vector<typename K::elem> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    typename K::elem eval(const K& F, const typename K::elem& l, const typename K::elem& m) const {
        auto s = F.zero();
        auto lp = F.one();
        for (int i = 0; i <= degree(); ++i) {
            auto mp = F.one();
            for (int j = 0; j < degree() - i; ++j) mp = F.mul(mp, m);
            s = F.add(s, F.mul(c[i], F.mul(lp, mp)));
            lp = F.mul(lp, l);
        }
        return s;
    }
    bool is_zero(const K& F) const {
        for (const auto& x : c)
            if (!F.is_zero(x)) return false;
        return true;
    }
};

struct ProjectiveRoot {
    PrimeField::elem lambda, mu;  // normalized: mu = 1, or (1, 0)
    int multiplicity;
};

/// Roots of a nonzero binary form over F_p; the total multiplicity equals the
/// degree exactly when the form splits.
std::vector<ProjectiveRoot> univariate_roots(const PrimeField& F, const BinaryForm<PrimeField>& f);

// ---------------------------------------------------------------------------
// Homogeneous forms in a fixed variable order, graded-lex canonical ordering.

using Exponent = std::vector<int>;

/// All exponent vectors of the given degree in descending lex order
/// (x0^d first), which is graded-lex for a fixed degree.
std::vector<Exponent> monomials(int nvars, int degree);

struct GlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da > db;
        return a > b;
    }
};

template <class K>
struct MultiForm {
    int nvars = 0;
    int degree = 0;
    std::map<Exponent, typename K::elem, GlexGreater> terms;

    bool is_zero() const { return terms.empty(); }

    void set(const K& F, const Exponent& e, const typename K::elem& v) {
        if (F.is_zero(v))
            terms.erase(e);
        else
            terms[e] = v;
    }

    typename K::elem eval(const K& F, const std::vector<typename K::elem>& x) const {
        // Power tables keep evaluation linear in the number of terms.
        std::vector<std::vector<typename K::elem>> pw(nvars);
        for (int i = 0; i < nvars; ++i) {
            pw[i].assign(degree + 1, F.one());
            for (int j = 1; j <= degree; ++j) pw[i][j] = F.mul(pw[i][j - 1], x[i]);
        }
        auto s = F.zero();
        for (const auto& [e, c] : terms) {
            auto t = c;
            for (int i = 0; i < nvars; ++i)
                if (e[i]) t = F.mul(t, pw[i][e[i]]);
            s = F.add(s, t);
        }
        return s;
    }

    MultiForm partial(const K& F, int var) const {
        MultiForm d{nvars, std::max(0, degree - 1), {}};
        for (const auto& [e, c] : terms) {
            if (e[var] == 0) continue;
            Exponent f = e;
            f[var] -= 1;
            d.set(F, f, F.mul(c, F.from_int(e[var])));
        }
        return d;
    }

    std::vector<typename K::elem> gradient(const K& F, const std::vector<typename K::elem>& x) const {
        std::vector<typename K::elem> g;
        for (int i = 0; i < nvars; ++i) g.push_back(partial(F, i).eval(F, x));
        return g;
    }

    /// Scales so that the leading graded-lex coefficient is 1.
    MultiForm normalized(const K& F) const {
        if (terms.empty()) return *this;
        auto inv = F.inv(terms.begin()->second);
        MultiForm out{nvars, degree, {}};
        for (const auto& [e, c] : terms) out.terms[e] = F.mul(c, inv);
        return out;
    }

    bool operator==(const MultiForm& o) const {
        return nvars == o.nvars && degree == o.degree && terms == o.terms;
    }
};

template <class K>
bool proportional(const K& F, const MultiForm<K>& a, const MultiForm<K>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.normalized(F) == b.normalized(F);
}

/// Coefficients (low to high) of s -> f(a + s b), a polynomial of degree at
/// most deg f.
std::vector<PrimeField::elem> restrict_to_line(const PrimeField& F, const MultiForm<PrimeField>& f,
                                               const std::vector<PrimeField::elem>& a,
                                               const std::vector<PrimeField::elem>& b);

/// Minimal vanishing order of f at the point along `lines` random lines.
int multiplicity_at(const PrimeField& F, const MultiForm<PrimeField>& f,
                    const std::vector<PrimeField::elem>& point, Rng& rng, int lines = 20);

struct FitOptions {
    /// Implicitization needs a large field to make accidental kernel vectors
    /// negligible; small-prime experiments lower it explicitly.
    std::uint64_t min_prime = 1000000;
};

class FitError : public std::runtime_error {
public:
    FitError(const std::string& what, std::size_t nullity)
        : std::runtime_error(what), nullity_(nullity) {}
    std::size_t nullity() const { return nullity_; }

private:
    std::size_t nullity_;
};

/// The unique (up to scalar) form of the given degree vanishing on all points.
MultiForm<PrimeField> fit_form(const PrimeField& F, const std::vector<std::vector<PrimeField::elem>>& points,
                               int degree, const FitOptions& opt = {});

}  // namespace fano
