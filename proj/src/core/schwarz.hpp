#pragma once

#include <cstdint>
#include <vector>

#include "bounds.hpp"
#include "generator.hpp"

namespace tdet {

// Finite Blaschke-type parametrization of a Schwarz function
//   w(z) = e^{i theta} z prod_k (z - a_k) / (1 - conj(a_k) z),  |a_k| < 1.
// Every such w maps the disk to itself with w(0) = 0, so it can steer any
// subordination without ever leaving the admissible class.
struct SchwarzSpec {
    double theta = 0.0;
    std::vector<Complex> zeros;
};

Series schwarz_series(const SchwarzSpec& s, int order);

// One-variable member of the class generated by phi, i.e. a solution of the
// subordination  z ghat'(z)/ghat(z) = phi(w(z))  for some Schwarz function w.
struct ClassMember {
    Series g;         // scalar factor, g(0) = 1; the member is ghat(z) = z g(z)
    CoeffPair coeffs; // ghat Taylor coefficients a2 = g[1], a3 = g[2]
    SchwarzSpec recipe;
};

// Solves z ghat'(z)/ghat(z) = phi(w(z)) by g = exp(int_0^z (phi(w(t)) - 1)/t dt).
ClassMember member_from_schwarz(const Phi& phi, const SchwarzSpec& s, int order);

// Deterministic sampler: rotation angle uniform in [0, 2 pi), zero count
// uniform in {0..max_zeros}, zeros area-uniform in the disk of radius 0.95.
SchwarzSpec random_schwarz(std::uint64_t seed, int max_zeros);

} // namespace tdet
