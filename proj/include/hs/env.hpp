#pragma once

#include "hs/dpexp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hs {

// Generators of the relation ideal of the enveloping algebra, evaluated in the ring of
// differential operators via S_a -> a and T_{p,shape,D,alpha} -> D_alpha.
enum class EnvTag { R0Const, R0Add, R0Mul, Ri, Rii, Riii, Riv, Rv };
std::string to_string(EnvTag t);
std::vector<EnvTag> all_env_tags();

struct EnvRelationInstance {
    EnvTag tag = EnvTag::Ri;
    AlgebraPtr algebra;
    Rat c = 0;       // R0Const
    Elem a, a2;      // R0Add, R0Mul (a, a2); Riv (a)
    std::optional<HSDerivation> d, e;
    MultiIndex alpha; // index of T in D (Rii, Riii, Riv) or in the source of phi (unused for Rv)
    MultiIndex beta;  // index in the target of phi (Rv)
    std::optional<SubstMap> phi;
    int p = 1;        // Ri
    Shape shape;      // Rii
    std::string describe() const;
};

DiffOp env_relation_image(const EnvRelationInstance& inst);
bool verify_env_relation(const EnvRelationInstance& inst);

// deg T_{p,shape,D,alpha} = floor(|alpha| / ell_alpha(D)); 0 when D is the identity up to alpha.
int t_degree(const HSDerivation& d, const MultiIndex& alpha);

struct DegreeReport {
    int order = -1;   // order(D_alpha); -1 for the zero operator
    int bound = 0;    // t_degree(D, alpha)
    bool order_ok = true;
    bool fact_a = true; // D_alpha and its degree only depend on the truncation to n_alpha
    bool fact_b = true; // D_0 = Id
    bool fact_c = true; // 0 < |alpha| < ell_alpha(D) forces D_alpha = 0
    int commutator_order = -1;
    int commutator_bound = -1;
    bool commutator_ok = true; // order([D_alpha, E_beta]) <= deg + deg - 1
    bool holds() const { return order_ok && fact_a && fact_b && fact_c && commutator_ok; }
    std::string describe() const;
};
// Polynomial A.
DegreeReport degree_audit(const HSDerivation& d, const HSDerivation& e, const MultiIndex& alpha, const MultiIndex& beta);

struct FloorReport {
    long checked = 0;
    long violations = 0;
    std::string first_violation;
};
// floor((a'+b')/(l1+l2)) + floor(a''/l1) + floor(b''/l2) < floor((a'+a'')/l1) + floor((b'+b'')/l2)
// for 1 <= l1, l2 <= max_ell, a' >= l1, b' >= l2 and all values <= max_value.
FloorReport floor_lemma_check(int max_ell, int max_value);

struct ChiExpReport {
    bool exp_ok = false;
    bool invariant_ok = true;
    int perturbations = 0;
    std::string detail;
    bool holds() const { return exp_ok && invariant_ok; }
};
// chi_m(delta) is exponential and does not depend on the integral chosen; the integral is
// perturbed by random E with E_1 = 0. Throws DomainError when delta is not m-integrable.
ChiExpReport chi_exp_check(const Derivation& delta, int m, int perturbations = 3, unsigned long seed = 1);

struct ProbeReport {
    int max_degree = 0;
    std::size_t total = 0;
    std::size_t covered = 0;
    std::vector<MultiIndex> missed;
    bool full() const { return covered == total; }
};
// Realises each gamma_b(xi), |b| <= max_degree, as the symbol of E_b for E the external product of
// integrals of the partial derivatives. Polynomial A.
ProbeReport vartheta_surjectivity_probe(const AlgebraPtr& A, int max_degree, const IntegrateOptions& opts = {});

struct GrTableReport {
    std::size_t entries = 0;
    std::size_t mismatches = 0;
    std::string first_mismatch;
    bool ok() const { return mismatches == 0; }
};
// gamma_b gamma_b' in the divided-power algebra against sigma(E_b o E_b') for |b + b'| <= max_degree.
GrTableReport gamma_gr_table_check(const AlgebraPtr& A, int max_degree, const IntegrateOptions& opts = {});

} // namespace hs
