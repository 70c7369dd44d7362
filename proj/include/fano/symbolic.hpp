#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fano/field.hpp"

namespace fano::sym {

/// Exponent vector; negative entries make Laurent monomials.
using Exp = std::vector<std::int8_t>;

/// Variable names shared by every polynomial built against the registry.
/// Polynomials record the number of variables at creation, so register all
/// variables before building polynomials that are combined with each other.
class Vars {
public:
    int add(const std::string& name);
    int index(const std::string& name) const;  // throws when absent
    bool has(const std::string& name) const;
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

/// Sparse Laurent polynomial over Q. The zero polynomial has no terms and
/// combines with polynomials of any width.
struct Poly {
    int nvars = 0;
    std::map<Exp, mpq_class> terms;

    static Poly constant(int nvars, const mpq_class& c);
    static Poly var(int nvars, int i, int e = 1);
    static Poly var(const Vars& v, const std::string& name, int e = 1) { return var(v.size(), v.index(name), e); }

    bool is_zero() const { return terms.empty(); }
    void add_term(const Exp& e, const mpq_class& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const mpq_class& c);
    bool operator==(const Poly& o) const { return terms == o.terms; }

    /// Smallest exponent of variable i (0 for the zero polynomial).
    int min_degree(int i) const;
    int max_degree(int i) const;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(Poly a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const mpq_class& c);
Poly operator*(const mpq_class& c, Poly a);

/// Replaces variable i by g; f must not contain negative powers of i.
Poly substitute(const Poly& f, int i, const Poly& g);

/// The part of f with exponent e in variable i, that exponent set to zero.
Poly coeff(const Poly& f, int i, int e);

/// The terms of f in which none of the given variables occurs.
Poly drop_terms_with(const Poly& f, const std::vector<int>& vars);

/// Removes terms whose exponent of i is at least e (reduction modulo x_i^e).
Poly truncate(const Poly& f, int i, int e);

/// The coefficient of f as a polynomial in the listed variables: the terms
/// whose exponents on `vars` equal `e`, those exponents cleared.
Poly coeff_of(const Poly& f, const std::vector<int>& vars, const std::vector<int>& e);

/// Value at x (one entry per variable); throws on a zero denominator.
mpq_class eval(const Poly& f, const std::vector<mpq_class>& x);

/// Value modulo p; coefficient denominators must be prime to p.
PrimeField::elem eval(const PrimeField& F, const Poly& f, const std::vector<PrimeField::elem>& x);

std::string str(const Poly& f, const Vars& v);

}  // namespace fano::sym
