#include "sqw/operators.hpp"

#include <algorithm>
#include <cmath>

#include "sqw/constants.hpp"

namespace sqw {

double norm(const StateVector& s) {
    double sum = 0;
    for (const auto& a : s) sum += std::norm(a);
    return std::sqrt(sum);
}

StateVector basis_state(int dim, int index) {
    StateVector s(dim, Complex{0, 0});
    s[index] = Complex{1, 0};
    return s;
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Complex{1, 0};
    return m;
}

ComplexMatrix ComplexMatrix::multiply(const ComplexMatrix& other) const {
    if (cols != other.rows) fail("DimensionMismatch", "matrix product");
    ComplexMatrix out(rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            Complex aik = at(i, k);
            if (aik == Complex{0, 0}) continue;
            for (int j = 0; j < other.cols; ++j) out.at(i, j) += aik * other.at(k, j);
        }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

StateVector ComplexMatrix::apply(const StateVector& v) const {
    if (static_cast<int>(v.size()) != cols) fail("DimensionMismatch", "matrix-vector product");
    StateVector out(rows, Complex{0, 0});
    for (int i = 0; i < rows; ++i) {
        Complex sum{0, 0};
        for (int j = 0; j < cols; ++j) sum += at(i, j) * v[j];
        out[i] = sum;
    }
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows != other.rows || cols != other.cols) fail("DimensionMismatch", "matrix compare");
    double worst = 0;
    for (size_t i = 0; i < data.size(); ++i)
        worst = std::max(worst, std::abs(data[i] - other.data[i]));
    return worst;
}

double ComplexMatrix::max_abs_off_identity() const {
    double worst = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Complex want = i == j ? Complex{1, 0} : Complex{0, 0};
            worst = std::max(worst, std::abs(at(i, j) - want));
        }
    return worst;
}

PolygonStateVector::PolygonStateVector(VertexSubset polygon, std::vector<Complex> amplitudes)
    : polygon_(std::move(polygon)), amplitudes_(std::move(amplitudes)) {
    if (polygon_.empty()) fail("EmptyPolygon", "polygon state vector needs vertices");
    if (polygon_.size() != amplitudes_.size())
        fail("VectorPolygonMismatch", "amplitude count differs from polygon size");
    double sum = 0;
    for (const auto& a : amplitudes_) {
        if (std::abs(a) == 0.0) fail("BadParams", "polygon amplitudes must be nonzero");
        sum += std::norm(a);
    }
    if (std::abs(std::sqrt(sum) - 1.0) > kNormTol)
        fail("BadParams", "polygon vector must have unit norm");
}

PolygonStateVector uniform_polygon_vector(const VertexSubset& polygon) {
    if (polygon.empty()) fail("EmptyPolygon", "uniform vector needs a nonempty polygon");
    double amp = 1.0 / std::sqrt(static_cast<double>(polygon.size()));
    return PolygonStateVector(polygon, std::vector<Complex>(polygon.size(), Complex{amp, 0}));
}

PolygonStateVector make_polygon_vector(const VertexSubset& polygon,
                                       std::vector<Complex> amplitudes) {
    if (polygon.empty()) fail("EmptyPolygon", "polygon state vector needs vertices");
    if (polygon.size() != amplitudes.size())
        fail("VectorPolygonMismatch", "amplitude count differs from polygon size");
    double sum = 0;
    for (const auto& a : amplitudes) sum += std::norm(a);
    if (sum == 0) fail("BadParams", "cannot normalize the zero vector");
    double inv = 1.0 / std::sqrt(sum);
    for (auto& a : amplitudes) a *= inv;
    return PolygonStateVector(polygon, std::move(amplitudes));
}

ReflectionOperator::ReflectionOperator(int dim, std::vector<PolygonStateVector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
    std::vector<char> seen(dim, 0);
    for (const auto& vec : vectors_) {
        for (int v : vec.polygon()) {
            if (v < 0 || v >= dim) fail("OutOfRange", "polygon vertex " + std::to_string(v));
            if (seen[v]) fail("VectorPolygonMismatch", "polygons overlap at vertex " + std::to_string(v));
            seen[v] = 1;
        }
    }
}

void ReflectionOperator::apply_in_place(StateVector& s) const {
    if (static_cast<int>(s.size()) != dim_) fail("DimensionMismatch", "reflection apply");
    // (R s)_v = 2 a_v <alpha|s> - s_v on polygon members, -s_v elsewhere.
    std::vector<Complex> projections(vectors_.size());
    for (size_t k = 0; k < vectors_.size(); ++k) {
        const auto& poly = vectors_[k].polygon();
        const auto& amp = vectors_[k].amplitudes();
        Complex inner{0, 0};
        for (size_t i = 0; i < poly.size(); ++i) inner += std::conj(amp[i]) * s[poly[i]];
        projections[k] = inner;
    }
    for (auto& a : s) a = -a;
    for (size_t k = 0; k < vectors_.size(); ++k) {
        const auto& poly = vectors_[k].polygon();
        const auto& amp = vectors_[k].amplitudes();
        for (size_t i = 0; i < poly.size(); ++i) s[poly[i]] += 2.0 * amp[i] * projections[k];
    }
}

StateVector ReflectionOperator::apply(const StateVector& s) const {
    StateVector out = s;
    apply_in_place(out);
    return out;
}

ComplexMatrix ReflectionOperator::dense() const {
    if (dim_ > kDenseCap) fail("TooLarge", "dense cap is " + std::to_string(kDenseCap));
    ComplexMatrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        StateVector col = apply(basis_state(dim_, j));
        for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

ReflectionOperator reflection_from(const Graph& g, const Tessellation& t,
                                   const std::vector<PolygonStateVector>& vectors) {
    if (t.polygons.size() != vectors.size())
        fail("VectorPolygonMismatch", "one vector per polygon required");
    for (size_t i = 0; i < vectors.size(); ++i)
        if (vectors[i].polygon() != t.polygons[i])
            fail("VectorPolygonMismatch", "vector " + std::to_string(i) +
                                              " does not match its polygon");
    return ReflectionOperator(g.vertex_count(), vectors);
}

EvolutionOperator make_walk(const Graph& g, const TessellationPair& pair,
                            const std::vector<PolygonStateVector>& blue_vectors,
                            const std::vector<PolygonStateVector>& red_vectors) {
    require_valid_tessellation(g, pair.blue);
    require_valid_tessellation(g, pair.red);
    if (!union_covers_edges(g, pair)) fail("UncoveredEdge", "tessellation union misses edges");
    return EvolutionOperator{reflection_from(g, pair.blue, blue_vectors),
                             reflection_from(g, pair.red, red_vectors)};
}

StateVector apply_step(const EvolutionOperator& ev, const StateVector& s) {
    if (static_cast<int>(s.size()) != ev.dim()) fail("DimensionMismatch", "walk step");
    StateVector out = s;
    ev.u0.apply_in_place(out);
    ev.u1.apply_in_place(out);
    return out;
}

ComplexMatrix dense_matrix(const EvolutionOperator& ev) {
    if (ev.dim() > kDenseCap) fail("TooLarge", "dense cap is " + std::to_string(kDenseCap));
    ComplexMatrix m(ev.dim(), ev.dim());
    for (int j = 0; j < ev.dim(); ++j) {
        StateVector col = apply_step(ev, basis_state(ev.dim(), j));
        for (int i = 0; i < ev.dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

std::vector<PolygonStateVector> uniform_vectors(const Tessellation& t) {
    std::vector<PolygonStateVector> out;
    out.reserve(t.polygons.size());
    for (const auto& poly : t.polygons) out.push_back(uniform_polygon_vector(poly));
    return out;
}

} // namespace sqw
