#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sqw/operators.hpp"

namespace sqw {

// Torus of n^2 8-cliques linked by 2n^2 4-cliques; vertices (x,y,k) with
// linear index (x*n + y)*8 + k. The blue tessellation covers every 8-clique
// except the marked cell (a partial tessellation); the red tessellation is
// the complete set of linking 4-cliques
//   beta0(x,y) = {(x,y,0),(x,y,7),(x+1,y,3),(x+1,y,4)}
//   beta1(x,y) = {(x,y,1),(x,y,2),(x,y+1,5),(x,y+1,6)}
// with coordinates modulo n. The 8 vertices of the marked cell belong to
// one polygon each; every other vertex to two.
struct SearchInstance {
    int n = 0;
    int marked_x = 0, marked_y = 0;
    Graph graph;
    Tessellation blue; // partial: n^2 - 1 polygons
    Tessellation red;  // complete: 2n^2 polygons
    std::vector<int> marked;
    EvolutionOperator walk;

    int dim() const { return graph.vertex_count(); }
};

// n >= 2 (TooSmall). The marked cell defaults to (0,0); moving it is used
// by the translation-covariance tests.
SearchInstance torus_instance(int n, int marked_x = 0, int marked_y = 0);

StateVector uniform_state(int dim);

struct SearchResult {
    std::vector<double> probability; // p(t) for t = 0..t_max
    std::vector<Complex> raw_sum;    // bare amplitude sums, debug route only
};

// Evolves the uniform state t_max steps, recording the summed
// modulus-squared amplitude over the marked vertices after each step. The
// bare amplitude sum rides along for comparison; it is not a probability.
SearchResult run_search(const SearchInstance& inst, int t_max);

// First local maximum above p(0). Runs of equal values (these walks hold
// p flat across step pairs) count as one sample; the first index of the
// winning plateau is returned. Throws NoPeak when none exists.
std::pair<int, double> peak(const std::vector<double>& series);

struct ScalingFit {
    double a = 0, b = 0; // t*(N) ~ a * N^b
    double c = 0, d = 0; // p*(N) ~ c / (ln N)^d
    double residual_t = 0, residual_p = 0; // rms in the fitted (log) spaces
    std::vector<int> used_n;
    std::vector<int> t_star;
    std::vector<double> p_star;
    std::vector<std::string> warnings; // skipped instances
};

// Runs the search for each n, locates peaks, and fits ln t* against ln N
// and ln(1/p*) against ln ln N by least squares. t_max of 0 picks
// 100 + 2*ceil(sqrt(N)) per instance. Requires at least 4 surviving peaks.
ScalingFit scaling_experiment(const std::vector<int>& n_values, int t_max = 0);

// Amplitude-amplification total cost t*/sqrt(p*). Throws ZeroProbability.
double amplified_cost(double t_star, double p_star);

// Monte-Carlo mean hitting time of the uniform-neighbor random walk from a
// uniformly random start vertex to the marked clique.
double random_walk_hitting_time(const SearchInstance& inst, int trials, std::uint64_t seed);

// Least-squares line y = slope * x + intercept; returns rms residual too.
struct LineFit {
    double slope = 0, intercept = 0, rms = 0;
};
LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y);

} // namespace sqw
