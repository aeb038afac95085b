#include "torsionforge/poly.hpp"

#include "torsionforge/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

namespace torsionforge {

Poly Poly::zero(RingPtr ring) {
    return Poly(std::move(ring));
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
    Poly p(std::move(ring));
    p.add_term(Mono(p.ring_->size(), 0), c);
    return p;
}

Poly Poly::var(RingPtr ring, const std::string& name, int exp) {
    auto idx = ring->index_of(name);
    if (!idx) throw Error("unknown parameter '" + name + "'");
    return var(std::move(ring), *idx, exp);
}

Poly Poly::var(RingPtr ring, std::size_t index, int exp) {
    if (exp < 0) throw Error("negative exponent in polynomial");
    Poly p(std::move(ring));
    Mono mono(p.ring_->size(), 0);
    mono.at(index) = exp;
    p.add_term(std::move(mono), Rational(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Mono& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::int32_t e) { return e == 0; });
}

std::optional<Rational> Poly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) return std::nullopt;
    return terms_.begin()->second;
}

bool Poly::depends_on(std::size_t param_index) const {
    for (const auto& [mono, coeff] : terms_)
        if (mono.at(param_index) != 0) return true;
    return false;
}

int Poly::total_degree() const {
    int deg = -1;
    for (const auto& [mono, coeff] : terms_) {
        int d = 0;
        for (auto e : mono) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

void Poly::add_term(Mono mono, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    assert(mono.size() == ring_->size());
    for (std::size_t i = 0; i < mono.size(); ++i) {
        assert(mono[i] >= 0);
        if (ring_->param(i).kind == ParamKind::Sign) mono[i] %= 2;
    }
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (ring_->param(i).kind != ParamKind::Radical || mono[i] < 2) continue;
        const int q = mono[i] / 2;
        Mono base = mono;
        base[i] %= 2;
        Poly expanded = ring_->radicand(i)->pow(q);
        for (const auto& [rm, rc] : expanded.terms_) {
            Mono combined = base;
            for (std::size_t j = 0; j < combined.size(); ++j) combined[j] += rm[j];
            add_term(std::move(combined), coeff * rc);
        }
        return;
    }
    auto [it, inserted] = terms_.emplace(std::move(mono), coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void Poly::check_same_ring(const Poly& other) const {
    if (ring_.get() != other.ring_.get()) throw RingMismatch();
}

Poly Poly::operator-() const {
    Poly out(ring_);
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_same_ring(rhs);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_same_ring(rhs);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly out(a.ring_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Poly::Mono mono = ma;
            for (std::size_t i = 0; i < mono.size(); ++i) mono[i] += mb[i];
            out.add_term(std::move(mono), ca * cb);
        }
    }
    return out;
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw Error("negative power of a polynomial");
    Poly acc = Poly::constant(ring_, Rational(1));
    Poly base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool Poly::operator==(const Poly& rhs) const {
    check_same_ring(rhs);
    return terms_ == rhs.terms_;
}

Rational Poly::content() const {
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [mono, coeff] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coeff.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return Rational(0);
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Poly::Mono Poly::common_monomial() const {
    if (terms_.empty()) return Mono(ring_->size(), 0);
    Mono mono = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < mono.size(); ++i) mono[i] = std::min(mono[i], m[i]);
    return mono;
}

Poly Poly::divided_by(const Rational& c, const Mono& mono) const {
    if (sgn(c) == 0) throw DivisionByZero();
    Poly out(ring_);
    for (const auto& [m, coeff] : terms_) {
        Mono reduced = m;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            reduced[i] -= mono.at(i);
            if (reduced[i] < 0) throw Error("inexact monomial division");
        }
        out.terms_.emplace(std::move(reduced), coeff / c);
    }
    return out;
}

std::optional<Poly> Poly::divided_exact(const Poly& divisor) const {
    check_same_ring(divisor);
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return Poly(ring_);
    // The divisor must avoid sign and radical symbols: their square rewrites
    // would break the leading-term recursion. The dividend may carry them;
    // it splits as a module over the free subring with one component per
    // sign/radical exponent pattern, and the algorithm below respects that
    // splitting because multiplying by a free-subring polynomial does not
    // change any such pattern.
    for (std::size_t i = 0; i < ring_->size(); ++i) {
        if (ring_->param(i).kind == ParamKind::Free) continue;
        for (const auto& [m, c] : divisor.terms_)
            if (m[i] != 0) return std::nullopt;
    }
    // Leading terms are taken in the map's lexicographic order, which respects
    // monomial multiplication; each round strips the current leading term, so
    // the quotient emerges term by term and a failed monomial divisibility
    // check proves the division inexact.
    const auto& dlead = *divisor.terms_.rbegin();
    Poly rem = *this;
    Poly quot(ring_);
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Mono qm = rlead.first;
        for (std::size_t i = 0; i < qm.size(); ++i) {
            qm[i] -= dlead.first[i];
            if (qm[i] < 0) return std::nullopt;
        }
        const Rational qc = rlead.second / dlead.second;
        for (const auto& [dm, dc] : divisor.terms_) {
            Mono m = qm;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += dm[i];
            rem.add_term(std::move(m), -(qc * dc));
        }
        quot.terms_.emplace(std::move(qm), qc);
    }
    return quot;
}

Rational Poly::eval(const Assignment& values) const {
    Rational total(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational term = coeff;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            const Param& p = ring_->param(i);
            switch (p.kind) {
                case ParamKind::Free: {
                    auto it = values.find(p.name);
                    if (it == values.end()) throw MissingParam(p.name);
                    term *= rational_pow(it->second, mono[i]);
                    break;
                }
                case ParamKind::Sign: {
                    auto it = values.find(p.name);
                    if (it == values.end()) throw MissingParam(p.name);
                    if (it->second != 1 && it->second != -1)
                        throw Error("sign parameter '" + p.name + "' must be +1 or -1");
                    term *= rational_pow(it->second, mono[i]);
                    break;
                }
                case ParamKind::Radical: {
                    if (values.count(p.name))
                        throw Error("value of radical '" + p.name + "' is derived from its radicand, not assigned");
                    Rational radicand = ring_->radicand(i)->eval(values);
                    auto root = exact_sqrt(radicand);
                    if (!root) throw NotPerfectSquare(p.name, to_string(radicand));
                    term *= rational_pow(*root, mono[i]);
                    break;
                }
            }
        }
        total += term;
    }
    return total;
}

double Poly::eval_approx(const ApproxAssignment& values) const {
    double total = 0.0;
    for (const auto& [mono, coeff] : terms_) {
        double term = to_double(coeff);
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            const Param& p = ring_->param(i);
            double v;
            if (p.kind == ParamKind::Radical) {
                if (values.count(p.name))
                    throw Error("value of radical '" + p.name + "' is derived from its radicand, not assigned");
                double radicand = ring_->radicand(i)->eval_approx(values);
                if (radicand < 0) throw Error("negative radicand for '" + p.name + "' in approximate evaluation");
                v = std::sqrt(radicand);
            } else {
                auto it = values.find(p.name);
                if (it == values.end()) throw MissingParam(p.name);
                v = it->second;
            }
            term *= std::pow(v, mono[i]);
        }
        total += term;
    }
    return total;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        Rational mag = abs(coeff);
        if (first) {
            if (sgn(coeff) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(coeff) < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            std::string f = ring_->param(i).name;
            if (mono[i] != 1) f += "^" + std::to_string(mono[i]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) {
            out << to_string(mag);
        } else {
            bool coeff_shown = (mag != 1);
            if (coeff_shown) out << to_string(mag);
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (coeff_shown || i > 0) out << "*";
                out << factors[i];
            }
        }
    }
    return out.str();
}

}  // namespace torsionforge
