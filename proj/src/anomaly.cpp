#include "torsionforge/anomaly.hpp"

#include "torsionforge/errors.hpp"
#include "torsionforge/su3.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

namespace torsionforge {

// Normalised as -1/2 sum_{i,j} Omega^i_j ^ Omega^j_i, which for a
// skew-symmetric curvature equals sum_{i<j} (Omega^i_j)^2.  This is the
// 4-form entering the alpha' equation with the 1/4 prefactor.
KForm pontrjagin_trace(const Curvature& q) {
    KForm out(q.ring(), 4);
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            const KForm& a = q.omega(i, j);
            const KForm& b = q.omega(j, i);
            if (a.is_zero() || b.is_zero()) continue;
            out += wedge(a, b);
        }
    }
    return Scalar::constant(q.ring(), Rational(-1, 2)) * out;
}

AnomalyResult solve_alpha(const KForm& dt, const KForm& p_conn, const KForm& p_inst) {
    if (dt.degree() != 4 || p_conn.degree() != 4 || p_inst.degree() != 4) {
        throw DegreeMismatch("solve_alpha expects three 4-forms");
    }
    const Scalar quarter = Scalar::constant(dt.ring(), Rational(1, 4));
    KForm d4 = quarter * (p_conn - p_inst);

    AnomalyResult out;
    if (d4.is_zero()) {
        if (dt.is_zero()) {
            out.status = AnomalyStatus::Underdetermined;
        } else {
            out.status = AnomalyStatus::NoSolution;
            out.residual = dt;
        }
        return out;
    }
    const auto& lead = *d4.coefficients().begin();
    Scalar alpha = dt.coefficient(lead.first) / lead.second;
    KForm residual = dt - alpha * d4;
    if (residual.is_zero()) {
        out.status = AnomalyStatus::Unique;
        out.alpha = alpha;
    } else {
        out.status = AnomalyStatus::NoSolution;
        out.residual = residual;
    }
    return out;
}

namespace {

struct Term2 {
    int i;
    int j;
    Rational c;
};

const std::vector<Term2>& poly_terms(RegionPoly which) {
    static const std::vector<Term2> l = {
        {2, 0, 1}, {0, 2, 1}, {1, 0, -3}, {0, 1, 2}, {0, 0, Rational(-3, 4)}};
    static const std::vector<Term2> n = {
        {2, 0, 4}, {0, 2, 4}, {1, 0, 4}, {0, 1, -8}, {0, 0, 1}};
    static const std::vector<Term2> m = {{2, 0, 1}, {0, 2, 1}, {0, 1, -1}};
    static const std::vector<Term2> s = {
        {2, 0, 20}, {0, 2, 20}, {1, 1, -32}, {1, 0, 4}, {0, 1, -8}, {0, 0, 1}};
    static const std::vector<Term2> x = {
        {3, 0, 8},  {2, 1, -8}, {1, 2, 8}, {0, 3, -8}, {2, 0, 4},
        {1, 1, -8}, {0, 2, 12}, {1, 0, 6}, {0, 1, -10}, {0, 0, 3}};
    static const std::vector<Term2> y = {
        {3, 0, 32},  {2, 1, -32}, {1, 2, 32}, {0, 3, -32}, {2, 0, -16},
        {1, 1, -32}, {0, 2, 16},  {1, 0, -8}, {0, 1, 24},  {0, 0, -4}};
    static const std::vector<Term2> z = {
        {3, 0, 4},  {2, 1, -4}, {1, 2, 4}, {0, 3, -4}, {2, 0, 4},
        {1, 1, -4}, {0, 2, 8},  {1, 0, -3}, {0, 1, -1}};
    static const std::vector<Term2> w = {
        {3, 0, 16},  {2, 1, -16}, {1, 2, 16}, {0, 3, -16},
        {1, 1, -16}, {0, 2, 16},  {1, 0, 4},  {0, 1, -4}};
    switch (which) {
        case RegionPoly::L: return l;
        case RegionPoly::N: return n;
        case RegionPoly::M: return m;
        case RegionPoly::S: return s;
        case RegionPoly::X: return x;
        case RegionPoly::Y: return y;
        case RegionPoly::Z: return z;
        case RegionPoly::W: return w;
        case RegionPoly::D: break;
    }
    throw UnsupportedOperation("d is a derived polynomial; no term table");
}

const std::vector<Term2>& beta_terms() {
    static const std::vector<Term2> b = {
        {0, 0, 1},   {1, 0, 4},   {2, 0, 4},  {3, 0, 32}, {0, 1, -12},
        {1, 1, -24}, {2, 1, -32}, {0, 2, 36}, {1, 2, 32}, {0, 3, -32}};
    return b;
}

Rational eval_terms_q(const std::vector<Term2>& terms, const Rational& eps, const Rational& rho) {
    Rational acc = 0;
    for (const auto& t : terms) {
        Rational term = t.c;
        for (int k = 0; k < t.i; ++k) term *= eps;
        for (int k = 0; k < t.j; ++k) term *= rho;
        acc += term;
    }
    return acc;
}

Scalar eval_terms_s(const std::vector<Term2>& terms, const Scalar& eps, const Scalar& rho) {
    Scalar acc = Scalar::zero(eps.ring());
    for (const auto& t : terms) {
        Scalar term = Scalar::constant(eps.ring(), t.c);
        for (int k = 0; k < t.i; ++k) term *= eps;
        for (int k = 0; k < t.j; ++k) term *= rho;
        acc += term;
    }
    return acc;
}

}  // namespace

Scalar beta(const Scalar& eps, const Scalar& rho) {
    return eval_terms_s(beta_terms(), eps, rho);
}

Rational beta(const Rational& eps, const Rational& rho) {
    return eval_terms_q(beta_terms(), eps, rho);
}

Scalar region_poly(RegionPoly which, const Scalar& eps, const Scalar& rho) {
    if (which == RegionPoly::D) {
        return region_poly(RegionPoly::L, eps, rho) * region_poly(RegionPoly::W, eps, rho)
             - region_poly(RegionPoly::N, eps, rho) * region_poly(RegionPoly::Z, eps, rho);
    }
    return eval_terms_s(poly_terms(which), eps, rho);
}

Rational region_poly(RegionPoly which, const Rational& eps, const Rational& rho) {
    if (which == RegionPoly::D) {
        return region_poly(RegionPoly::L, eps, rho) * region_poly(RegionPoly::W, eps, rho)
             - region_poly(RegionPoly::N, eps, rho) * region_poly(RegionPoly::Z, eps, rho);
    }
    return eval_terms_q(poly_terms(which), eps, rho);
}

namespace {

// p as a + b * g for the single non-free generator g present (if any).
struct RadicalSplit {
    Rational a = 0;
    Rational b = 0;
    std::optional<std::size_t> gen;
};

RadicalSplit split_radical(const Poly& p) {
    RadicalSplit out;
    for (const auto& [mono, coeff] : p.terms()) {
        std::optional<std::size_t> present;
        for (std::size_t idx = 0; idx < mono.size(); ++idx) {
            if (mono[idx] == 0) continue;
            const Param& par = p.ring()->param(idx);
            if (par.kind == ParamKind::Free) {
                throw UnsupportedOperation(
                    "sign of a value depending on free parameter '" + par.name + "'");
            }
            if (present) {
                throw UnsupportedOperation("sign of a multi-radical value");
            }
            present = idx;
        }
        if (!present) {
            out.a += coeff;
        } else {
            if (out.gen && *out.gen != *present) {
                throw UnsupportedOperation("sign of a multi-radical value");
            }
            out.gen = *present;
            out.b += coeff;
        }
    }
    return out;
}

int sign_poly(const Poly& p) {
    RadicalSplit s = split_radical(p);
    if (!s.gen || s.b == 0) return sign_of(s.a);
    const Param& par = p.ring()->param(*s.gen);
    if (par.kind == ParamKind::Sign) {
        throw UnsupportedOperation(
            "sign of a value depending on the undetermined sign '" + par.name + "'");
    }
    const Poly* rad = p.ring()->radicand(*s.gen);
    std::optional<Rational> radicand = rad ? rad->as_constant() : std::nullopt;
    if (!radicand) {
        throw UnsupportedOperation(
            "sign over radical '" + par.name + "' with non-constant radicand");
    }
    if (sign_of(*radicand) <= 0) {
        throw UnsupportedOperation(
            "sign over radical '" + par.name + "' with non-positive radicand");
    }
    const int sa = sign_of(s.a);
    const int sb = sign_of(s.b);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: a + b sqrt(R) has the sign of the dominant part.
    const int cmp = sign_of(s.a * s.a - s.b * s.b * (*radicand));
    if (cmp == 0) return 0;
    return cmp > 0 ? sa : sb;
}

}  // namespace

int sign_exact(const Scalar& v) {
    return sign_poly(v.num()) * sign_poly(v.den());
}

namespace {

RegionReport report_from_values(RegionReport rep, int sl, int sn, int sm, int sz,
                                bool at_p2, bool at_q2) {
    rep.in_delta = (sl < 0 || sn < 0) && !at_p2 && !at_q2;
    rep.in_delta_plus = (sl < 0 || sm < 0) && !(sm <= 0 && sz <= 0);
    return rep;
}

}  // namespace

RegionReport region_report(const Scalar& eps, const Scalar& rho) {
    RegionReport rep{eps,
                     rho,
                     region_poly(RegionPoly::L, eps, rho),
                     region_poly(RegionPoly::N, eps, rho),
                     region_poly(RegionPoly::M, eps, rho),
                     region_poly(RegionPoly::S, eps, rho),
                     region_poly(RegionPoly::Z, eps, rho),
                     region_poly(RegionPoly::W, eps, rho),
                     region_poly(RegionPoly::D, eps, rho),
                     beta(eps, rho)};
    rep.sign_alpha_flat = sign_exact(rep.beta_value);
    rep.sign_alpha_nonflat =
        sign_exact(rep.beta_value - Scalar::constant(eps.ring(), 8));
    const Scalar zero = Scalar::zero(eps.ring());
    const Scalar half = Scalar::constant(eps.ring(), Rational(1, 2));
    const bool at_p2 = eps == zero && rho == zero;
    const bool at_q2 = eps == half && rho == half;
    return report_from_values(rep, sign_exact(rep.L), sign_exact(rep.N),
                              sign_exact(rep.M), sign_exact(rep.Z), at_p2, at_q2);
}

RegionReport region_report(const Rational& eps, const Rational& rho) {
    static const RingPtr ring = Ring::make({});
    const auto mk = [&](const Rational& v) { return Scalar::constant(ring, v); };
    const Rational l = region_poly(RegionPoly::L, eps, rho);
    const Rational n = region_poly(RegionPoly::N, eps, rho);
    const Rational m = region_poly(RegionPoly::M, eps, rho);
    const Rational z = region_poly(RegionPoly::Z, eps, rho);
    const Rational b = beta(eps, rho);
    RegionReport rep{mk(eps),
                     mk(rho),
                     mk(l),
                     mk(n),
                     mk(m),
                     mk(region_poly(RegionPoly::S, eps, rho)),
                     mk(z),
                     mk(region_poly(RegionPoly::W, eps, rho)),
                     mk(region_poly(RegionPoly::D, eps, rho)),
                     mk(b)};
    rep.sign_alpha_flat = sign_of(b);
    rep.sign_alpha_nonflat = sign_of(b - 8);
    const bool at_p2 = eps == 0 && rho == 0;
    const bool at_q2 = eps == Rational(1, 2) && rho == Rational(1, 2);
    return report_from_values(rep, sign_of(l), sign_of(n), sign_of(m), sign_of(z),
                              at_p2, at_q2);
}

bool in_delta_plus_alt(const Rational& eps, const Rational& rho) {
    const int sl = sign_of(region_poly(RegionPoly::L, eps, rho));
    const int sd = sign_of(region_poly(RegionPoly::D, eps, rho));
    const int sz = sign_of(region_poly(RegionPoly::Z, eps, rho));
    return (sl < 0 || sd > 0) && !(sd >= 0 && sz <= 0);
}

std::string to_string(G7Failure f) {
    switch (f) {
        case G7Failure::MuSquaredNegative: return "MuSquaredNegative";
        case G7Failure::AlphaZeroDenominator: return "AlphaZeroDenominator";
        case G7Failure::PositivityUnsatisfiable: return "PositivityUnsatisfiable";
        case G7Failure::DenominatorZero: return "DenominatorZero";
    }
    return "UnknownFailure";
}

G7Outcome solve_g7(const Rational& eps, const Rational& rho, const Rational& r,
                   const Rational& t, const Rational& u1, const Rational& u2,
                   bool require_positive_alpha) {
    if (r == 0 || t == 0) throw DomainViolation("r and t must be nonzero");
    const Rational usq = u1 * u1 + u2 * u2;
    if (usq == 0) throw DomainViolation("solve_g7 requires u != 0; use solve_g7_u0");
    const Rational p = r * r * r * r - usq;
    if (sign_of(p) <= 0) throw DomainViolation("r^2 > |u| is required");
    const Rational t2 = t * t;
    const Rational t4 = t2 * t2;
    const Rational first = region_poly(RegionPoly::L, eps, rho) * t4
                         + region_poly(RegionPoly::N, eps, rho) * usq;
    const Rational mu_squared = Rational(-2) * first / (t2 * p);
    G7Outcome out;
    if (sign_of(mu_squared) < 0) {
        out.failure = G7Failure::MuSquaredNegative;
        return out;
    }
    const Rational denom = region_poly(RegionPoly::Z, eps, rho) * t4
                         + region_poly(RegionPoly::W, eps, rho) * usq;
    if (denom == 0) {
        out.failure = G7Failure::AlphaZeroDenominator;
        return out;
    }
    const Rational alpha = Rational(2) * t2 * p / denom;
    if (require_positive_alpha && sign_of(alpha) <= 0) {
        out.failure = G7Failure::PositivityUnsatisfiable;
        return out;
    }
    out.solution = G7Solution{mu_squared, alpha};
    return out;
}

G7Outcome solve_g7_u0(const Rational& eps, const Rational& rho, const Rational& r,
                      const Rational& t, const Rational& mu) {
    if (r == 0 || t == 0) throw DomainViolation("r and t must be nonzero");
    const Rational r4 = r * r * r * r;
    const Rational denom =
        region_poly(RegionPoly::X, eps, rho) * t * t - Rational(2) * mu * mu * r4;
    G7Outcome out;
    if (denom == 0) {
        out.failure = G7Failure::DenominatorZero;
        return out;
    }
    out.solution = G7Solution{mu * mu, Rational(4) * r4 / denom};
    return out;
}

bool motion_equations_check(const SU3Structure& s, const Scalar& eps,
                            const Scalar& rho, const Connection& instanton) {
    if (!balanced_check(s) || !psi_closed_check(s)) return false;
    const LieAlgebra& g = *s.algebra();
    const Curvature q_inst = curvature(g, instanton);
    if (!instanton_check(q_inst)) return false;
    const Connection fam = family_connection(s, eps, rho);
    const Curvature q_fam = curvature(g, fam);
    const KForm dt = g.d(torsion_T(s));
    const AnomalyResult res =
        solve_alpha(dt, pontrjagin_trace(q_fam), pontrjagin_trace(q_inst));
    if (res.status != AnomalyStatus::Unique || res.alpha->is_zero()) return false;
    return instanton_check(q_fam);
}

namespace {

void emit_region_row(std::ostringstream& os, const Rational& eps, const Rational& rho) {
    const Rational l = region_poly(RegionPoly::L, eps, rho);
    const Rational n = region_poly(RegionPoly::N, eps, rho);
    const Rational m = region_poly(RegionPoly::M, eps, rho);
    const Rational s = region_poly(RegionPoly::S, eps, rho);
    const Rational z = region_poly(RegionPoly::Z, eps, rho);
    const Rational w = region_poly(RegionPoly::W, eps, rho);
    const Rational d = l * w - n * z;
    const Rational b = beta(eps, rho);
    const bool at_p2 = eps == 0 && rho == 0;
    const bool at_q2 = eps == Rational(1, 2) && rho == Rational(1, 2);
    const bool in_delta = (sign_of(l) < 0 || sign_of(n) < 0) && !at_p2 && !at_q2;
    const bool in_delta_plus =
        (sign_of(l) < 0 || sign_of(m) < 0) && !(sign_of(m) <= 0 && sign_of(z) <= 0);
    os << to_string(eps) << ',' << to_string(rho) << ',' << to_string(l) << ','
       << to_string(n) << ',' << to_string(m) << ',' << to_string(s) << ','
       << to_string(z) << ',' << to_string(w) << ',' << to_string(d) << ','
       << to_string(b) << ',' << (in_delta ? 1 : 0) << ',' << (in_delta_plus ? 1 : 0)
       << ',' << sign_of(b) << ',' << sign_of(b - 8) << '\n';
}

}  // namespace

std::string scan_region_csv(const GridSpec& grid, int threads) {
    if (sign_of(grid.step) <= 0 || grid.hi < grid.lo) {
        throw DomainViolation("grid must satisfy lo <= hi with positive step");
    }
    std::vector<Rational> axis;
    for (Rational v = grid.lo; v <= grid.hi; v += grid.step) axis.push_back(v);

    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : static_cast<int>(hw);
    }
    threads = std::min<int>(threads, static_cast<int>(axis.size()));
    threads = std::max(threads, 1);

    std::vector<std::string> stripes(axis.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        std::size_t i;
        while ((i = next.fetch_add(1)) < axis.size()) {
            std::ostringstream os;
            for (const Rational& rho : axis) emit_region_row(os, axis[i], rho);
            stripes[i] = os.str();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int k = 0; k < threads; ++k) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    std::string out =
        "eps,rho,L,N,M,S,Z,W,d,beta,in_Delta,in_DeltaPlus,"
        "sign_alpha_flat,sign_alpha_nonflat\n";
    for (const auto& s : stripes) out += s;
    return out;
}

namespace {

// Affine map [-2,2]^2 -> 800x800 pixels, plane y axis pointing up.
double px(double x) { return (x + 2.0) * 200.0; }
double py(double y) { return (2.0 - y) * 200.0; }

void svg_circle(std::ostringstream& os, double cx, double cy, double radius,
                const char* stroke) {
    os << "  <circle cx=\"" << px(cx) << "\" cy=\"" << py(cy) << "\" r=\""
       << radius * 200.0 << "\" fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"2\"/>\n";
}

void svg_point(std::ostringstream& os, double x, double y, const char* label,
               double dx, double dy) {
    os << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y)
       << "\" r=\"4\" fill=\"#202020\"/>\n";
    os << "  <text x=\"" << px(x) + dx << "\" y=\"" << py(y) + dy
       << "\" font-family=\"sans-serif\" font-size=\"18\" fill=\"#202020\">" << label
       << "</text>\n";
}

}  // namespace

std::string region_svg() {
    constexpr int cells = 400;  // 2x2 pixel cells over the 800x800 viewport
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
          "viewBox=\"0 0 800 800\">\n";
    os << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

    // Positive-alpha region, shaded by row runs of cell centers.
    os << "  <g fill=\"#74add1\" fill-opacity=\"0.55\">\n";
    for (int row = 0; row < cells; ++row) {
        const Rational rho = Rational(2) - Rational(2 * row + 1, 100) / 2;
        int run_start = -1;
        for (int col = 0; col <= cells; ++col) {
            bool inside = false;
            if (col < cells) {
                const Rational eps = Rational(-2) + Rational(2 * col + 1, 100) / 2;
                const int sl = sign_of(region_poly(RegionPoly::L, eps, rho));
                const int sm = sign_of(region_poly(RegionPoly::M, eps, rho));
                const int sz = sign_of(region_poly(RegionPoly::Z, eps, rho));
                inside = (sl < 0 || sm < 0) && !(sm <= 0 && sz <= 0);
            }
            if (inside && run_start < 0) run_start = col;
            if (!inside && run_start >= 0) {
                os << "    <rect x=\"" << run_start * 2 << "\" y=\"" << row * 2
                   << "\" width=\"" << (col - run_start) * 2 << "\" height=\"2\"/>\n";
                run_start = -1;
            }
        }
    }
    os << "  </g>\n";

    // Axes.
    os << "  <line x1=\"0\" y1=\"" << py(0.0) << "\" x2=\"800\" y2=\"" << py(0.0)
       << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << px(0.0) << "\" y1=\"0\" x2=\"" << px(0.0)
       << "\" y2=\"800\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    // L, N and M circles.
    svg_circle(os, 1.5, -1.0, 2.0, "#d73027");
    svg_circle(os, -0.5, 1.0, 1.0, "#1a9850");
    svg_circle(os, 0.0, 0.5, 0.5, "#7b3294");

    const double sqrt7 = std::sqrt(7.0);
    svg_point(os, (1.0 - sqrt7) / 8.0, (3.0 - sqrt7) / 8.0, "P1", -34.0, 18.0);
    svg_point(os, (1.0 + sqrt7) / 8.0, (3.0 + sqrt7) / 8.0, "Q1", 8.0, -8.0);
    svg_point(os, 0.0, 0.0, "P2", 8.0, 20.0);
    svg_point(os, 0.5, 0.5, "Q2", 8.0, 4.0);
    svg_point(os, 1.0 / 6.0, 1.0 / 3.0, "P3", 8.0, 14.0);

    os << "  <text x=\"770\" y=\"" << py(0.0) - 8 << "\" font-family=\"sans-serif\" "
          "font-size=\"18\" fill=\"#555555\">&#949;</text>\n";
    os << "  <text x=\"" << px(0.0) + 8 << "\" y=\"20\" font-family=\"sans-serif\" "
          "font-size=\"18\" fill=\"#555555\">&#961;</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace torsionforge
