#pragma once

#include <complex>
#include <vector>

#include "sqw/tessellation.hpp"

namespace sqw {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

double norm(const StateVector& s);
StateVector basis_state(int dim, int index);

// Minimal dense complex matrix, row-major. Dense forms exist only for
// verification; evolution itself is matrix-free.
struct ComplexMatrix {
    int rows = 0, cols = 0;
    std::vector<Complex> data;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Complex& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Complex& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static ComplexMatrix identity(int n);
    ComplexMatrix multiply(const ComplexMatrix& other) const;
    ComplexMatrix adjoint() const;
    StateVector apply(const StateVector& v) const;
    double max_abs_diff(const ComplexMatrix& other) const;
    double max_abs_off_identity() const; // max |A - I|
};

// Unit vector supported exactly on the vertices of one polygon. Amplitudes
// are stored aligned with the (sorted) polygon members and must all be
// nonzero, with unit l2-norm within kNormTol.
class PolygonStateVector {
public:
    PolygonStateVector(VertexSubset polygon, std::vector<Complex> amplitudes);

    const VertexSubset& polygon() const { return polygon_; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

private:
    VertexSubset polygon_;
    std::vector<Complex> amplitudes_;
};

PolygonStateVector uniform_polygon_vector(const VertexSubset& polygon);

// Normalizes and validates amplitudes for one polygon (helper for file
// input and random tests). Throws EmptyPolygon / VectorPolygonMismatch on
// structural problems, BadParams on a zero amplitude.
PolygonStateVector make_polygon_vector(const VertexSubset& polygon,
                                       std::vector<Complex> amplitudes);

// Orthogonal reflection 2 sum_k |alpha_k><alpha_k| - I induced by a list of
// polygon vectors with pairwise-disjoint polygons. Uncovered vertices see
// -I, which is what partial tessellations need. Hermitian, squares to the
// identity, block-local on polygons.
class ReflectionOperator {
public:
    ReflectionOperator(int dim, std::vector<PolygonStateVector> vectors);

    int dim() const { return dim_; }
    const std::vector<PolygonStateVector>& vectors() const { return vectors_; }

    void apply_in_place(StateVector& s) const;
    StateVector apply(const StateVector& s) const;
    ComplexMatrix dense() const; // capped at kDenseCap

private:
    int dim_;
    std::vector<PolygonStateVector> vectors_;
};

// Builds the reflection for a tessellation; vectors must match the polygons
// one-to-one and in order (VectorPolygonMismatch otherwise).
ReflectionOperator reflection_from(const Graph& g, const Tessellation& t,
                                   const std::vector<PolygonStateVector>& vectors);

// One walk step is U = U1 U0 (U0 acts first).
struct EvolutionOperator {
    ReflectionOperator u0;
    ReflectionOperator u1;

    int dim() const { return u0.dim(); }
};

// Assembles the walk for a covering tessellation pair, validating both
// tessellations and the edge cover.
EvolutionOperator make_walk(const Graph& g, const TessellationPair& pair,
                            const std::vector<PolygonStateVector>& blue_vectors,
                            const std::vector<PolygonStateVector>& red_vectors);

// Matrix-free application of U = U1 U0; O(N) per step.
StateVector apply_step(const EvolutionOperator& ev, const StateVector& s);

// Column j is apply_step on basis state j. Capped at kDenseCap (TooLarge).
ComplexMatrix dense_matrix(const EvolutionOperator& ev);

// Uniform superposition of every polygon in a tessellation, in order.
std::vector<PolygonStateVector> uniform_vectors(const Tessellation& t);

} // namespace sqw
