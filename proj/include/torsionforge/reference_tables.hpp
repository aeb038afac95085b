#pragma once

#include "torsionforge/catalog.hpp"
#include "torsionforge/connection.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace torsionforge {

// Independently transcribed tables of the family curvature on the builtin
// models, kept separate from the computing code so the two can cross-check
// each other. The nilpotent and semisimple tables list all 15 components
// with i < j; the solvable table lists 7 pair combinations plus the 8
// generating components, which together pin down all 15.

std::map<std::pair<int, int>, KForm> reference_curvature_h3(const Model& m,
                                                            const BuiltinOptions& options);
std::map<std::pair<int, int>, KForm> reference_curvature_sl2c(const Model& m,
                                                              const BuiltinOptions& options);

struct G7ReferenceTable {
    std::vector<std::pair<std::string, KForm>> combinations;
    std::map<std::pair<int, int>, KForm> generating;
};
G7ReferenceTable reference_curvature_g7(const Model& m, const BuiltinOptions& options);

struct FixtureReport {
    std::vector<std::string> passed;
    std::vector<std::string> failed;
    bool ok() const { return failed.empty(); }
};

// Rebuilds the named builtin with the given options, computes the family
// curvature symbolically and compares it against the transcribed table.
FixtureReport check_curvature_fixtures(const std::string& name,
                                       const BuiltinOptions& options = {});

// Same comparison against a caller-supplied model, e.g. one parsed from the
// DSL; the name still selects which transcribed table to compare with, so the
// model's ring must declare the parameters that table mentions.
FixtureReport check_model_curvature(const Model& m, const std::string& name,
                                    const BuiltinOptions& options = {});

// Component symmetries shared by every member of the compatible sub-family
// rho = 1/2 - eps; requires eps free in the model's ring.
bool hermitian_line_symmetries(const Model& m);

}  // namespace torsionforge
