#pragma once

#include "hs/hsder.hpp"
#include "hs/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hs {

// Linear system for the stage-n images u_j = D_n(x_j): for every relation f,
// sum_j (df/dx_j) u_j + [s^n] f(Phi) = 0, written in coordinates.
struct StageSystem {
    int stage = 0;
    Mat matrix;
    Vec rhs;
    std::vector<std::string> row_labels;    // "coefficient of <monomial> in <relation>"
    std::vector<MultiIndex> unknown_basis;  // monomials spanning each u_j
    bool truncated = false;                 // unknowns cut at a degree cap (infinite-dimensional A)
};

struct Obstruction {
    StageSystem system;
    Vec certificate; // y with y M = 0 and y b != 0
};

// Affine space of stage-n extensions: particular + span(kernel), each as one element per generator.
struct StageSolution {
    bool solvable = false;
    std::vector<Elem> particular;
    std::vector<std::vector<Elem>> kernel;
    std::optional<Obstruction> obstruction;
    bool truncated = false;
};

struct IntegrateOptions {
    long node_budget = 100000;
    int degree_cap = kDefaultDegreeCap;
};

// d must live over the univariate shape t_{n-1}; the result describes stage n.
StageSolution extend_step(const HSDerivation& d, const IntegrateOptions& opts = {});
StageSystem stage_system(const HSDerivation& d, int degree_cap);

struct IntegralResult {
    enum class Status { Integrable, NotIntegrable, Inconclusive };
    Status status = Status::Inconclusive;
    std::optional<HSDerivation> integral;
    int stage = 0; // first stage with an empty fiber on every explored branch
    std::optional<Obstruction> obstruction;
    std::string detail;
    std::vector<std::string> log;
    long nodes = 0;
};

std::string to_string(IntegralResult::Status s);

// Searches for D in HS_k(A; m) with D_1 = delta.
IntegralResult integrate(const Derivation& delta, int m, const IntegrateOptions& opts = {});

// Stage-one HS-derivation x_j -> x_j + delta(x_j) s.
HSDerivation first_stage(const Derivation& delta);

// Basis of Der_k(A): solutions of sum_j (df/dx_j) u_j = 0 for every relation.
std::vector<Derivation> derivation_basis(const AlgebraPtr& A, int degree_cap = kDefaultDegreeCap);

struct IderReport {
    bool over_algebra = false;     // dimensions are A-ranks (polynomial A), otherwise k-dimensions
    std::vector<int> dimensions;   // index m-1 holds dim Ider(A; m)
    std::vector<std::string> notes;
};

IderReport ider_dimension(const AlgebraPtr& A, int max_m, const IntegrateOptions& opts = {});

} // namespace hs
