#pragma once

#include "torsionforge/connection.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace torsionforge {

// A parsed or built-in model: parameter ring, algebra, canonical adapted
// SU(3)-structure, and any named connections.
struct Model {
    RingPtr ring;
    AlgebraPtr algebra;
    std::shared_ptr<const SU3Structure> structure;
    std::map<std::string, Connection> connections;
    std::vector<std::string> domain_notes;
};

// Options for specializing a built-in structure at construction time.
//   values:          parameters replaced by exact rational constants.
//   radical_values:  parameters adjoined as the square root of a positive
//                    rational (exact symbolic radical, e.g. u1 = sqrt(15)).
//   delta:           g7 only; +1 or -1 bakes the sign, 0 keeps it symbolic.
struct BuiltinOptions {
    int delta = 0;
    Assignment values;
    std::map<std::string, Rational> radical_values;
};

// h3: de^6 = -2t (e^12 - e^34), all other differentials zero.
// sl2c: the six differentials with coefficient 1/t.
// g7: the solvable algebra with parameters r, t, u = u1 + i u2 and sign delta.
// Every builtin carries the free parameters eps, rho, lambda, mu for the
// connection families and instantons.
Model builtin(const std::string& name, const BuiltinOptions& options = {});

const std::vector<std::string>& builtin_names();

// DSL front end. Statements, one per line (';'-terminated, '#' comments):
//   param <name>;
//   sign <name>;
//   radical <name> = <polynomial>;
//   d e<k> = <form-expression>;
//   connection <Name> { s[i][j] = <form-expression>; ... }
// Form expressions use + - * / ^ with parentheses; '^' wedges two forms and
// raises to an integer power when the right operand is an integer literal;
// e<digits> abbreviates a wedge of basis covectors (e126 = e1^e2^e6).
Model parse_model(const std::string& text);

// Expression-only entry points over an existing ring (used heavily by the
// verification fixtures).
KForm parse_form(const RingPtr& ring, const std::string& text);
Scalar parse_scalar(const RingPtr& ring, const std::string& text);

std::string serialize_model(const Model& m);
std::string model_to_json(const Model& m);

}  // namespace torsionforge
