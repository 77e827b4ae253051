#pragma once

#include <string>
#include <vector>

#include "splitkit/complex_matrix.hpp"

namespace splitkit {

// The basic one-step map a composition is built from.
//   ExactStage      - one exponential per operator slot per row
//   LieTrotter      - first-order product of operator exponentials
//   StrangSymmetric - the symmetric second-order splitting
enum class BasicMethodKind { ExactStage, LieTrotter, StrangSymmetric };

struct SymmetryTags {
    bool palindromic = false;
    bool symmetric_conjugate = false;
    bool alternating_conjugate = false;
};

// A splitting/composition scheme.
//
// Stage lists are stored in application order: stages[0] acts first on the
// state, so the propagator is the matrix product of the stage maps taken
// right-to-left. Printed coefficient tuples in the usual product notation
// are therefore reversed on entry.
//
// For ExactStage schemes, `rows` holds per-operator coefficient tuples
// (row r, slot j scales generator j); a zero entry skips that exponential.
struct Composition {
    std::string name;
    BasicMethodKind basic = BasicMethodKind::StrangSymmetric;
    std::vector<cplx> stages;             // LieTrotter / StrangSymmetric
    std::vector<std::vector<cplx>> rows;  // ExactStage
    int nominal_order = 1;
    SymmetryTags tags;
};

// The matrices multiplied by stage coefficients: iA_j for unitary problems,
// J A_j for Hamiltonian ones, or anything else the caller supplies.
struct GeneratorSet {
    std::vector<ComplexMatrix> generators;

    int dim() const;
    ComplexMatrix sum() const;  // the full generator M = sum_j G_j
};

// Names accepted by catalog(), in canonical order.
const std::vector<std::string>& catalog_names();

// Scheme lookup. Coefficients are stored as exact closed forms where
// available and as printed decimals otherwise. Unknown names raise
// CatalogError listing the valid identifiers.
Composition catalog(const std::string& name);

// Every coefficient replaced by its complex conjugate; tags recomputed.
Composition conjugate_scheme(const Composition& c);

// c followed after conjugate(c): the alternating-conjugate concatenation
// S = c o conjugate(c), the conjugated half acting first. With halve_step,
// all coefficients are scaled by 1/2 first. The nominal order rises to p+1
// when c is symmetric-conjugate of odd order p; otherwise it is kept.
Composition alternate(const Composition& c, bool halve_step);

bool is_palindromic(const Composition& c, double tol = 1e-12);
bool is_symmetric_conjugate(const Composition& c, double tol = 1e-12);
bool is_alternating_conjugate(const Composition& c, double tol = 1e-12);

// Recompute the tag set from the predicates above.
SymmetryTags compute_tags(const Composition& c, double tol = 1e-12);

// The unconjugated half of an alternating-conjugate stage list (the part
// applied second). InvalidInputError if c is not alternating-conjugate.
Composition psi_half(const Composition& c);

// One step of the scheme over the given generators: the product of stage
// exponentials, rightmost factor acting first on a state vector.
ComplexMatrix propagator(const Composition& c, const GeneratorSet& g, double h);

// Number of basic-method applications per step (StrangSymmetric only).
int stage_count(const Composition& c);

// Dimension of the homogeneous subspace of grade n of the free Lie algebra
// on m generators (Witt formula with the 1/n prefactor).
long long lie_dimension(int n, int m);

// Coefficient sums used by the order-condition checks.
cplx stage_sum(const Composition& c);
cplx stage_cube_sum(const Composition& c);

bool coefficients_equal(const Composition& a, const Composition& b, double tol = 1e-14);

} // namespace splitkit
