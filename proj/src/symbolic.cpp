#include "fano/symbolic.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace fano::sym {

int Vars::add(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    int i = size();
    names_.push_back(name);
    index_[name] = i;
    return i;
}

int Vars::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::out_of_range("unknown variable " + name);
    return it->second;
}

bool Vars::has(const std::string& name) const { return index_.count(name) != 0; }

Poly Poly::constant(int nvars, const mpq_class& c) {
    Poly p;
    p.nvars = nvars;
    p.add_term(Exp(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Poly Poly::var(int nvars, int i, int e) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
    Poly p;
    p.nvars = nvars;
    Exp x(static_cast<std::size_t>(nvars), 0);
    x[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(e);
    p.add_term(x, 1);
    return p;
}

void Poly::add_term(const Exp& e, const mpq_class& c) {
    if (sgn(c) == 0) return;
    if (static_cast<int>(e.size()) != nvars) {
        if (terms.empty())
            nvars = static_cast<int>(e.size());
        else
            throw std::invalid_argument("polynomial width mismatch");
    }
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    if (terms.empty()) nvars = std::max(nvars, o.nvars);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, -c);
    if (terms.empty()) nvars = std::max(nvars, o.nvars);
    return *this;
}

Poly& Poly::operator*=(const mpq_class& c) {
    if (sgn(c) == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [e, v] : terms) v *= c;
    return *this;
}

int Poly::min_degree(int i) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms) {
        int d = e[static_cast<std::size_t>(i)];
        m = first ? d : std::min(m, d);
        first = false;
    }
    return m;
}

int Poly::max_degree(int i) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms) {
        int d = e[static_cast<std::size_t>(i)];
        m = first ? d : std::max(m, d);
        first = false;
    }
    return m;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(Poly a) { return a *= -1; }
Poly operator*(Poly a, const mpq_class& c) { return a *= c; }
Poly operator*(const mpq_class& c, Poly a) { return a *= c; }

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    r.nvars = std::max(a.nvars, b.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            if (ea.size() != eb.size()) throw std::invalid_argument("polynomial width mismatch");
            Exp e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                int s = ea[i] + eb[i];
                if (s > 127 || s < -128) throw std::overflow_error("exponent overflow");
                e[i] = static_cast<std::int8_t>(s);
            }
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly substitute(const Poly& f, int i, const Poly& g) {
    const auto ui = static_cast<std::size_t>(i);
    int top = f.is_zero() ? 0 : f.max_degree(i);
    if (!f.is_zero() && f.min_degree(i) < 0) throw std::invalid_argument("substitute: negative power");
    std::vector<Poly> pw{Poly::constant(f.nvars, 1)};
    for (int d = 1; d <= top; ++d) pw.push_back(pw.back() * g);
    Poly r;
    r.nvars = f.nvars;
    for (const auto& [e, c] : f.terms) {
        Exp rest = e;
        int d = rest[ui];
        rest[ui] = 0;
        Poly m;
        m.nvars = f.nvars;
        m.add_term(rest, c);
        r += m * pw[static_cast<std::size_t>(d)];
    }
    return r;
}

Poly coeff(const Poly& f, int i, int e) {
    const auto ui = static_cast<std::size_t>(i);
    Poly r;
    r.nvars = f.nvars;
    for (const auto& [x, c] : f.terms)
        if (x[ui] == e) {
            Exp y = x;
            y[ui] = 0;
            r.add_term(y, c);
        }
    return r;
}

Poly drop_terms_with(const Poly& f, const std::vector<int>& vars) {
    Poly r;
    r.nvars = f.nvars;
    for (const auto& [x, c] : f.terms) {
        bool keep = true;
        for (int v : vars)
            if (x[static_cast<std::size_t>(v)] != 0) keep = false;
        if (keep) r.add_term(x, c);
    }
    return r;
}

Poly truncate(const Poly& f, int i, int e) {
    Poly r;
    r.nvars = f.nvars;
    for (const auto& [x, c] : f.terms)
        if (x[static_cast<std::size_t>(i)] < e) r.add_term(x, c);
    return r;
}

Poly coeff_of(const Poly& f, const std::vector<int>& vars, const std::vector<int>& e) {
    Poly r;
    r.nvars = f.nvars;
    for (const auto& [x, c] : f.terms) {
        bool match = true;
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (x[static_cast<std::size_t>(vars[k])] != e[k]) match = false;
        if (!match) continue;
        Exp y = x;
        for (int v : vars) y[static_cast<std::size_t>(v)] = 0;
        r.add_term(y, c);
    }
    return r;
}

mpq_class eval(const Poly& f, const std::vector<mpq_class>& x) {
    mpq_class s = 0;
    for (const auto& [e, c] : f.terms) {
        mpq_class t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && sgn(x[i]) == 0) throw std::domain_error("eval: negative power of zero");
            mpq_class b = e[i] > 0 ? x[i] : mpq_class(1 / x[i]);
            for (int k = 0; k < std::abs(static_cast<int>(e[i])); ++k) t *= b;
        }
        s += t;
    }
    return s;
}

PrimeField::elem eval(const PrimeField& F, const Poly& f, const std::vector<PrimeField::elem>& x) {
    auto reduce = [&](const mpz_class& z) {
        mpz_class r = z % static_cast<unsigned long>(F.p);
        if (r < 0) r += static_cast<unsigned long>(F.p);
        return static_cast<PrimeField::elem>(r.get_ui());
    };
    PrimeField::elem s = 0;
    for (const auto& [e, c] : f.terms) {
        auto den = reduce(c.get_den());
        if (den == 0) throw std::domain_error("eval: denominator divisible by p");
        auto t = F.div(reduce(c.get_num()), den);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto b = e[i] > 0 ? x[i] : F.inv(x[i]);
            t = F.mul(t, F.pow(b, static_cast<std::uint64_t>(std::abs(static_cast<int>(e[i])))));
        }
        s = F.add(s, t);
    }
    return s;
}

std::string str(const Poly& f, const Vars& v) {
    if (f.is_zero()) return "0";
    std::string out;
    // Reverse map order puts higher exponents of the first variables first.
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += v.name(static_cast<int>(i));
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        mpq_class a = abs(c);
        std::string coef = a.get_str();
        std::string term = mono.empty() ? coef : (a == 1 ? mono : coef + "*" + mono);
        if (out.empty())
            out = (sgn(c) < 0 ? "-" : "") + term;
        else
            out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace fano::sym
