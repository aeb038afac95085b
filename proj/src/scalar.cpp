#include "torsionforge/scalar.hpp"

#include "torsionforge/errors.hpp"

namespace torsionforge {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    reduce();
}

Scalar Scalar::zero(RingPtr ring) {
    return from_poly(Poly::zero(std::move(ring)));
}

Scalar Scalar::one(RingPtr ring) {
    return constant(std::move(ring), Rational(1));
}

Scalar Scalar::constant(RingPtr ring, const Rational& c) {
    return from_poly(Poly::constant(std::move(ring), c));
}

Scalar Scalar::var(RingPtr ring, const std::string& name, int exp) {
    if (exp >= 0) return from_poly(Poly::var(std::move(ring), name, exp));
    Poly den = Poly::var(ring, name, -exp);
    return Scalar(Poly::constant(std::move(ring), Rational(1)), std::move(den));
}

Scalar Scalar::from_poly(Poly num) {
    Poly den = Poly::constant(num.ring(), Rational(1));
    return Scalar(std::move(num), std::move(den));
}

Scalar Scalar::ratio(Poly num, Poly den) {
    return Scalar(std::move(num), std::move(den));
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.ring(), Rational(1));
        return;
    }
    // Clear sign and radical symbols out of the denominator by conjugation:
    // for den = a + b*g with g^2 rewriting to a free-subring polynomial,
    // (a + b*g)(a - b*g) has one symbol fewer. A zero product means den was
    // a zero divisor, i.e. the quotient never existed.
    const RingPtr& ring = num_.ring();
    for (std::size_t i = 0; i < ring->size(); ++i) {
        if (ring->param(i).kind == ParamKind::Free) continue;
        Poly conj = Poly::zero(ring);
        bool mixed = false;
        for (const auto& [mono, coeff] : den_.terms()) {
            mixed |= mono[i] != 0;
            conj.add_term(mono, mono[i] != 0 ? -coeff : coeff);
        }
        if (!mixed) continue;
        Poly cleared = den_ * conj;
        if (cleared.is_zero()) throw DivisionByZero();
        num_ = num_ * conj;
        den_ = std::move(cleared);
    }
    // Denominators accumulate non-monomial factors only as powers of the
    // radicand polynomials (via conjugation above and via cross-multiplied
    // sums), so cancelling shared radicand powers keeps long accumulations
    // at their least common denominator.
    for (std::size_t i = 0; i < ring->size(); ++i) {
        if (ring->param(i).kind != ParamKind::Radical) continue;
        const Poly* rad = ring->radicand(i);
        if (rad == nullptr || rad->is_constant()) continue;
        while (!den_.is_constant()) {
            auto dq = den_.divided_exact(*rad);
            if (!dq) break;
            auto nq = num_.divided_exact(*rad);
            if (!nq) break;
            den_ = std::move(*dq);
            num_ = std::move(*nq);
        }
    }
    // Cancel the denominator entirely when it divides the numerator, and
    // fold full divisibility the other way into the denominator.
    if (!den_.is_constant()) {
        if (auto q = num_.divided_exact(den_)) {
            num_ = std::move(*q);
            den_ = Poly::constant(ring, Rational(1));
        } else if (!num_.is_constant()) {
            if (auto r = den_.divided_exact(num_)) {
                num_ = Poly::constant(ring, Rational(1));
                den_ = std::move(*r);
            }
        }
    }
    // Cancel common rational content and common monomial of num and den.
    Rational cn = num_.content(), cd = den_.content();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), cn.get_num().get_mpz_t(), cd.get_num().get_mpz_t());
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), cn.get_den().get_mpz_t(), cd.get_den().get_mpz_t());
    Rational c(g, l);
    c.canonicalize();
    Poly::Mono mn = num_.common_monomial(), md = den_.common_monomial();
    Poly::Mono shared(mn.size(), 0);
    for (std::size_t i = 0; i < shared.size(); ++i) shared[i] = std::min(mn[i], md[i]);
    // Make the leading denominator coefficient positive.
    if (sgn(den_.terms().begin()->second) < 0) c = -c;
    bool trivial_mono = true;
    for (auto e : shared) trivial_mono &= (e == 0);
    if (c != 1 || !trivial_mono) {
        num_ = num_.divided_by(c, shared);
        den_ = den_.divided_by(c, shared);
    }
}

bool Scalar::is_constant() const {
    return num_.is_constant() && den_.is_constant();
}

std::optional<Rational> Scalar::as_constant() const {
    if (!is_constant()) return std::nullopt;
    if (num_.is_zero()) return Rational(0);
    return *num_.as_constant() / *den_.as_constant();
}

Scalar Scalar::operator-() const {
    return Scalar(-num_, den_);
}

// When one denominator divides the other, the sum lives over the larger one;
// this keeps denominators from compounding across long accumulations.
Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    if (auto q = b.den_.divided_exact(a.den_))
        return Scalar(a.num_ * *q + b.num_, b.den_);
    if (auto q = a.den_.divided_exact(b.den_))
        return Scalar(a.num_ + b.num_ * *q, a.den_);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.den_ == b.den_) return Scalar(a.num_ - b.num_, a.den_);
    if (auto q = b.den_.divided_exact(a.den_))
        return Scalar(a.num_ * *q - b.num_, b.den_);
    if (auto q = a.den_.divided_exact(b.den_))
        return Scalar(a.num_ - b.num_ * *q, a.den_);
    return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::pow(int n) const {
    if (n < 0) {
        if (is_zero()) throw DivisionByZero();
        return Scalar(den_.pow(-n), num_.pow(-n));
    }
    return Scalar(num_.pow(n), den_.pow(n));
}

bool Scalar::operator==(const Scalar& rhs) const {
    return (num_ * rhs.den_ - rhs.num_ * den_).is_zero();
}

Rational Scalar::eval(const Assignment& values) const {
    Rational d = den_.eval(values);
    if (sgn(d) == 0) throw DenominatorZero();
    return num_.eval(values) / d;
}

double Scalar::eval_approx(const ApproxAssignment& values) const {
    double d = den_.eval_approx(values);
    if (d == 0.0) throw DenominatorZero();
    return num_.eval_approx(values) / d;
}

std::string Scalar::str() const {
    if (auto c = den_.as_constant()) {
        if (*c == 1) return num_.str();
        // Fold a constant denominator back into the coefficients for display.
        return num_.divided_by(*c, Poly::Mono(ring()->size(), 0)).str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace torsionforge
