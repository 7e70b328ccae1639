#pragma once

#include <cstddef>
#include <vector>

#include "cosep/coring.hpp"

namespace cosep {

inline constexpr std::size_t kDefaultMaxDegree = 3;
inline constexpr std::size_t kDefaultBudget = 20000;

/// M -> C (x) M -> C^2 (x) M -> ... with maps lambda_M, d^0, d^1, ...
/// and the contracting homotopy u_n of the underlying right comodules.
struct ResolutionSegment {
    std::vector<Bicomodule> terms;  // C^i (x) M, i = 0..n_max+1
    std::vector<Matrix> maps;       // maps[i]: terms[i] -> terms[i+1]
    std::vector<Matrix> homotopy;   // homotopy[i]: terms[i+1] -> terms[i]

    /// Consecutive composites maps[i+1] maps[i].
    bool composites_vanish() const;
    /// maps[i-1] u_{i-1} + u_i maps[i] = id at every inner term, and u_0 lambda = id.
    bool homotopy_holds() const;
    /// dim ker maps[i] = rank maps[i-1] at every inner term, and lambda injective.
    bool forgotten_exact() const;
};

/// Throws BudgetExceeded when a flat term dimension passes the budget.
ResolutionSegment resolution(const Coring& c, const Bicomodule& m, std::size_t n_max,
                             std::size_t budget = kDefaultBudget);

/// d^n on R-bilinear right colinear maps f: N -> C^n (x) M.
MapOperator coboundary_operator(const Coring& c, const Bicomodule& n, const Bicomodule& m, std::size_t degree);

struct CochainComplex {
    std::vector<MapSpace> terms;      // n = 0..n_max
    std::vector<MapOperator> ops;     // d^n for n = 0..n_max
    std::vector<MapSpace> images;     // d^n(terms[n]) inside hom(N, C^{n+1} (x) M)

    std::size_t max_degree() const noexcept { return terms.size() - 1; }
    std::size_t kernel_dim(std::size_t n) const { return terms[n].dim() - images[n].dim(); }
    std::size_t image_dim(std::size_t n) const { return images[n].dim(); }
    /// dim ker d^n - dim im d^{n-1}.
    std::size_t cohomology_dim(std::size_t n) const;
    /// d^{n+1} d^n = 0 on every term.
    bool squares_vanish() const;
};

CochainComplex cochain_complex(const Coring& c, const Bicomodule& n, const Bicomodule& m,
                               std::size_t n_max = kDefaultMaxDegree, std::size_t budget = kDefaultBudget);

/// [dim Ext^0, ..., dim Ext^n_max].
std::vector<std::size_t> ext_dims(const Coring& c, const Bicomodule& n, const Bicomodule& m,
                                  std::size_t n_max = kDefaultMaxDegree, std::size_t budget = kDefaultBudget);
/// H^n(N, M) as Ext^n(N, K(M)).
std::vector<std::size_t> h_dims(const Coring& c, const Bicomodule& n, const Bicomodule& m,
                                std::size_t n_max = kDefaultMaxDegree, std::size_t budget = kDefaultBudget);
/// dim Ext^{k+1}(N, M) == dim Ext^k(N, K(M)).
bool shift_check(const Coring& c, const Bicomodule& n, const Bicomodule& m, std::size_t k,
                 std::size_t budget = kDefaultBudget);

/// Bicomodule retraction r: C (x) M -> M with r lambda_M = id, or a certificate.
/// Throws InvalidBicomodule if M fails its axioms.
MapSolution relative_injective(const Coring& c, const Bicomodule& m);

}  // namespace cosep
