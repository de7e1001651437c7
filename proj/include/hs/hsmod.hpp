#pragma once

#include "hs/dop.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hs {

// Vectors and matrices over A[[s]]_shape, coordinates on a fixed A-basis.
using VecSeries = std::vector<ElemSeries>;
using SeriesMatrix = std::vector<std::vector<ElemSeries>>;

enum class Flavor { Left, Right };
enum class Strength { Pre, Full };
std::string to_string(Flavor f);
std::string to_string(Strength s);

// HS-structure on End_k(E) for E = A^rank. A structure is determined by the images of the basis:
// Psi(D)(sum_j f_j e_j) = sum_j Z~(f_j) Psi(D)(e_j) with Z = D (left) or Z = D* (right).
struct HSStructure {
    std::string name;
    AlgebraPtr algebra;
    int rank = 0;
    Flavor flavor = Flavor::Left;
    Strength strength = Strength::Full;
    // images(D)[i][j] = coefficient of e_i in Psi(D)(e_j).
    std::function<SeriesMatrix(const HSDerivation&)> images;
};

// Psi(D) evaluated once and applied to vectors of series.
struct EvaluatedStructure {
    SeriesMatrix images;
    HSDerivation twist; // D or D*
    VecSeries apply(const VecSeries& w) const;
};
EvaluatedStructure evaluate(const HSStructure& psi, const HSDerivation& d);
VecSeries constant_vector(const Shape& shape, const std::vector<Elem>& v);

HSStructure tautological_structure(const AlgebraPtr& A);
// Right structure on A from the formal adjoint: Psi(D)_a = transpose(D_a). Polynomial A.
HSStructure right_tautological_structure(const AlgebraPtr& A);
HSStructure zero_module(const AlgebraPtr& A);
// Lie derivative on Omega with basis dx_i; polynomial A.
HSStructure lie_structure(const AlgebraPtr& A);
// D delta D* on Der with basis d/dx_i; polynomial A.
HSStructure adjoint_structure(const AlgebraPtr& A);
HSStructure tensor_structure(const HSStructure& e, const HSStructure& f);
// Hom_A(E, F) with basis h_(a,b): e_b -> f_a, flattened as a * rank(E) + b.
HSStructure hom_structure(const HSStructure& e, const HSStructure& f);
// Basis of Sym^d: nondecreasing index tuples; of wedge^d: increasing tuples, both in lex order.
HSStructure sym_structure(const HSStructure& e, int degree);
HSStructure wedge_structure(const HSStructure& e, int degree);

struct AxiomResult {
    int tested = 0;
    int passed = 0;
    int skipped = 0;
    std::string counterexample;
    bool ok() const { return tested == passed; }
};

struct AxiomReport {
    AxiomResult homomorphism; // (i)
    AxiomResult leibniz;      // (ii)
    AxiomResult substitution; // (iii)
    bool exact = true;        // false when polynomial test vectors were cut at the degree cap
    bool holds() const { return homomorphism.ok() && leibniz.ok() && substitution.ok(); }
};

struct StructureSamples {
    std::vector<std::pair<HSDerivation, HSDerivation>> pairs;
    std::vector<std::pair<SubstMap, HSDerivation>> substitutions;
};

struct CheckOptions {
    int degree_cap = 3;
    // Test (iii) with every sample map even for pre-structures.
    bool all_substitutions = false;
};

AxiomReport check_structure(const HSStructure& psi, const StructureSamples& samples, const CheckOptions& opts = {});

// Degree-one coefficient against the classical Lie derivative / adjoint action of D_(e_i).
bool lie_matches_classical(const HSDerivation& d, int degree_cap, std::string* failure = nullptr);
bool adjoint_matches_classical(const HSDerivation& d, int degree_cap, std::string* failure = nullptr);
// Lie(D) o d = d o Phi_D on test elements.
bool lie_matches_definition(const HSDerivation& d, int degree_cap, std::string* failure = nullptr);
// D delta D* computed in operator series equals the derivation series given by the structure.
bool adjoint_matches_definition(const HSDerivation& d, int degree_cap, std::string* failure = nullptr);

} // namespace hs
