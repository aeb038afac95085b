#include "torsionforge/connection.hpp"

#include "torsionforge/errors.hpp"

namespace torsionforge {

namespace {

int flat_index(int i, int j) {
    if (i < 1 || i > 6) throw DimensionError(i);
    if (j < 1 || j > 6) throw DimensionError(j);
    return (i - 1) * 6 + (j - 1);
}

}  // namespace

Connection::Connection(RingPtr ring) : ring_(std::move(ring)), sigma_(36, KForm(ring_, 1)) {}

const KForm& Connection::sigma(int i, int j) const {
    return sigma_[flat_index(i, j)];
}

void Connection::set_sigma(int i, int j, KForm form) {
    if (form.degree() != 1) throw DegreeMismatch("connection 1-form must have degree 1");
    if (form.ring().get() != ring_.get()) throw RingMismatch();
    sigma_[flat_index(i, j)] = std::move(form);
}

bool Connection::is_metric() const {
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j)
            if (!(sigma(j, i) == -sigma(i, j))) return false;
    return true;
}

Curvature::Curvature(RingPtr ring) : ring_(std::move(ring)), omega_(36, KForm(ring_, 2)) {}

const KForm& Curvature::omega(int i, int j) const {
    return omega_[flat_index(i, j)];
}

void Curvature::set_omega(int i, int j, KForm form) {
    if (form.degree() != 2) throw DegreeMismatch("curvature 2-form must have degree 2");
    if (form.ring().get() != ring_.get()) throw RingMismatch();
    omega_[flat_index(i, j)] = std::move(form);
}

bool Curvature::is_zero() const {
    for (const auto& f : omega_)
        if (!f.is_zero()) return false;
    return true;
}

Curvature curvature(const LieAlgebra& g, const Connection& c) {
    Curvature q(c.ring());
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            KForm omega = g.d(c.sigma(i, j));
            for (int k = 1; k <= 6; ++k) omega += wedge(c.sigma(i, k), c.sigma(k, j));
            q.set_omega(i, j, std::move(omega));
        }
    }
    return q;
}

Connection levi_civita(const SU3Structure& s) {
    const LieAlgebra& g = *s.algebra();
    Scalar half = Scalar::constant(g.ring(), Rational(1, 2));
    Connection c(g.ring());
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            KForm form(g.ring(), 1);
            for (int k = 1; k <= 6; ++k) {
                Scalar v = half * (g.c(i, j, k) - g.c(k, i, j) + g.c(j, k, i));
                form.add_term({k}, std::move(v));
            }
            c.set_sigma(i, j, std::move(form));
        }
    }
    if (!c.is_metric()) throw Error("Levi-Civita connection failed the metric check");
    return c;
}

Connection family_connection(const SU3Structure& s, const Scalar& eps, const Scalar& rho) {
    const LieAlgebra& g = *s.algebra();
    KForm dF = g.d(s.fundamental_form());
    Scalar half = Scalar::constant(g.ring(), Rational(1, 2));
    Connection c(g.ring());
    for (int i = 1; i <= 6; ++i) {
        int si = j_sign(i), pi = j_partner(i);
        for (int j = 1; j <= 6; ++j) {
            int sj = j_sign(j), pj = j_partner(j);
            KForm form(g.ring(), 1);
            for (int k = 1; k <= 6; ++k) {
                int sk = j_sign(k), pk = j_partner(k);
                Scalar v = half * (g.c(i, j, k) - g.c(k, i, j) + g.c(j, k, i));
                Scalar eps_term = dF({pi, pj, pk});
                if (si * sj * sk < 0) eps_term = -eps_term;
                Scalar rho_term = dF({pk, i, j});
                if (sk < 0) rho_term = -rho_term;
                v += eps * eps_term - rho * rho_term;
                form.add_term({k}, std::move(v));
            }
            c.set_sigma(i, j, std::move(form));
        }
    }
    if (!c.is_metric()) throw Error("family connection failed the metric check");
    return c;
}

Connection flat_connection(RingPtr ring) {
    return Connection(std::move(ring));
}

Connection abelian_connection(const KForm& gamma) {
    if (gamma.degree() != 1) throw DegreeMismatch("abelian connection expects a 1-form");
    Connection c(gamma.ring());
    c.set_sigma(1, 2, gamma);
    c.set_sigma(2, 1, -gamma);
    c.set_sigma(3, 4, -gamma);
    c.set_sigma(4, 3, gamma);
    return c;
}

Connection h3_instanton(RingPtr ring, const Scalar& lambda) {
    KForm gamma(ring, 1);
    gamma.add_term({5}, lambda);
    gamma.add_term({6}, lambda);
    return abelian_connection(gamma);
}

Connection g7_instanton(RingPtr ring, const Scalar& lambda, const Scalar& mu) {
    KForm gamma(ring, 1);
    gamma.add_term({5}, lambda);
    gamma.add_term({6}, mu);
    return abelian_connection(gamma);
}

std::vector<std::string> su3_compatibility_defects(const Connection& c) {
    std::vector<std::string> defects;
    auto name = [](int i, int j) {
        return "sigma[" + std::to_string(i) + "][" + std::to_string(j) + "]";
    };
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j)
            if (!(c.sigma(j, i) == -c.sigma(i, j)))
                defects.push_back(name(j, i) + " != -" + name(i, j));
    if (!(c.sigma(1, 2) + c.sigma(3, 4) + c.sigma(5, 6)).is_zero())
        defects.push_back("sigma[1][2] + sigma[3][4] + sigma[5][6] != 0");
    const std::array<std::array<int, 5>, 6> pairings{{
        // i, j, i', j', sign: sigma^i_j = sign * sigma^{i'}_{j'}
        {{1, 3, 2, 4, 1}},
        {{1, 4, 2, 3, -1}},
        {{1, 5, 2, 6, 1}},
        {{1, 6, 2, 5, -1}},
        {{3, 5, 4, 6, 1}},
        {{3, 6, 4, 5, -1}},
    }};
    for (const auto& [i, j, k, l, sign] : pairings) {
        KForm rhs = c.sigma(k, l);
        if (sign < 0) rhs = -rhs;
        if (!(c.sigma(i, j) == rhs))
            defects.push_back(name(i, j) + (sign < 0 ? " != -" : " != ") + name(k, l));
    }
    return defects;
}

bool su3_compatible(const Connection& c) {
    return su3_compatibility_defects(c).empty();
}

std::vector<std::string> instanton_defects(const Curvature& q) {
    std::vector<std::string> defects;
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            const KForm& om = q.omega(i, j);
            if (om.is_zero()) continue;
            Scalar trace = om({1, 2}) + om({3, 4}) + om({5, 6});
            if (!trace.is_zero())
                defects.push_back("omega[" + std::to_string(i) + "][" + std::to_string(j)
                                  + "] has nonzero F-trace");
            for (int k = 1; k <= 6; ++k) {
                for (int l = k + 1; l <= 6; ++l) {
                    Scalar lhs = om({j_partner(k), j_partner(l)});
                    if (j_sign(k) * j_sign(l) < 0) lhs = -lhs;
                    if (!(lhs == om({k, l}))) {
                        defects.push_back("omega[" + std::to_string(i) + "]["
                                          + std::to_string(j) + "] not J-invariant at ("
                                          + std::to_string(k) + "," + std::to_string(l) + ")");
                    }
                }
            }
        }
    }
    return defects;
}

bool instanton_check(const Curvature& q) {
    return instanton_defects(q).empty();
}

KForm covariant_derivative_form(const Connection& c, const KForm& a, int k) {
    if (k < 1 || k > 6) throw DimensionError(k);
    KForm out(a.ring(), a.degree());
    if (a.degree() == 0) return out;
    for (const auto& tup : basis_tuples(a.degree())) {
        Scalar value = Scalar::zero(a.ring());
        for (std::size_t m = 0; m < tup.size(); ++m) {
            for (int p = 1; p <= 6; ++p) {
                Scalar coeff = c.sigma(p, tup[m])({k});
                if (coeff.is_zero()) continue;
                KForm::Indices substituted = tup;
                substituted[m] = p;
                value -= coeff * a(substituted);
            }
        }
        out.add_term(tup, std::move(value));
    }
    return out;
}

Tensor3 nabla_J(const Connection& c) {
    Tensor3 out(c.ring());
    for (int i = 1; i <= 6; ++i) {
        int pi = j_partner(i);
        for (int j = 1; j <= 6; ++j) {
            int sj = j_sign(j), pj = j_partner(j);
            for (int k = 1; k <= 6; ++k) {
                Scalar first = c.sigma(i, pj)({k});
                if (sj < 0) first = -first;
                Scalar second = c.sigma(pi, j)({k});
                if (j_sign(pi) < 0) second = -second;
                out.set(i, j, k, first - second);
            }
        }
    }
    return out;
}

Tensor3 connection_torsion(const LieAlgebra& g, const Connection& c) {
    Tensor3 out(c.ring());
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k)
                out.set(i, j, k, c.sigma(k, j)({i}) - c.sigma(k, i)({j}) + g.c(k, i, j));
    return out;
}

}  // namespace torsionforge
