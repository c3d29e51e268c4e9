#pragma once

// Maximal spectra of finite MV-algebras: homomorphisms into [0,1] built from
// maximal ideals, the Stone topology, and the evaluation maps η and ε.
// Also δ-preservation checks for homomorphisms out of the PL carrier.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvdelta/ideals.hpp"
#include "mvdelta/sampling.hpp"

namespace mvdelta {

/// Homomorphism from a finite algebra to [0,1]; table[i] is the image of
/// element index i.
struct Hom {
  CarrierPtr source;
  std::vector<Q01> table;
};

/// Whether the table preserves ⊕, ¬ and 0.
bool is_hom(const FiniteAlgebra& a, const std::vector<Q01>& table);
Ideal kernel(const Hom& h);

/// The unique map A/m → [0,1] composed with the quotient, for a maximal ideal m.
Hom holder_hom(const FiniteAlgebra& a, const Ideal& maximal);

/// One homomorphism per maximal ideal, in maximal-ideal order.
std::vector<Hom> enumerate_homs(const FiniteAlgebra& a);

/// All homomorphisms A → B between finite algebras, as index tables.
std::vector<std::vector<std::size_t>> homs_between(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Indices (into maximal_ideals(a)) of the maximal ideals containing every element of s.
std::vector<std::size_t> v_of(const FiniteAlgebra& a, const std::vector<std::size_t>& s);

struct SpectrumResult {
  std::vector<Ideal> ideals;
  std::vector<Hom> homs;
  /// V(I) for every ideal I, as sorted sets of maximal-ideal indices.
  std::vector<std::vector<std::size_t>> closed_sets;
  /// V(a) for every element a.
  std::vector<std::vector<std::size_t>> basis;
  /// Intersections of basis sets give exactly the closed sets.
  bool basis_generates = false;
  /// Every subset of Max A is closed.
  bool discrete = false;
  /// ideals[i] is the kernel of homs[i] for each i.
  bool kernels_match = false;
};

SpectrumResult spectrum(const FiniteAlgebra& a);

struct EtaReport {
  /// (h(a))_h for each element a.
  std::vector<std::vector<Q01>> images;
  bool injective = false;
  bool semisimple = false;
  /// The image is the full product of the per-hom images.
  bool onto_product_of_images = false;
};

EtaReport eta(const FiniteAlgebra& a);

/// Closed form for Chang's algebra: one maximal ideal (the radical), one
/// homomorphism (level), so η is not injective.
struct ChangEtaReport {
  std::size_t hom_count = 1;
  std::string kernel = "{(0,k) : k >= 0}";
  bool injective = false;
  bool semisimple = false;
};

ChangEtaReport chang_eta();
/// The unique homomorphism from Chang's algebra to [0,1].
Q01 chang_hom(const ChangElem& x);

struct EpsilonReport {
  std::size_t points = 0;
  std::size_t maximal_ideals = 0;
  /// x ↦ {f : f(x) = 0} is a bijection X → Max A.
  bool bijection = false;
  bool discrete = false;
};

/// A must be a product of finite chains indexed by the points of X.
EpsilonReport epsilon_finite(const FiniteAlgebra& a);

/// f ↦ f ∘ phi (when phi is set), followed by evaluation at point (when set).
struct PLHom {
  std::optional<PLFunc> phi;
  std::optional<Q01> point;

  Value apply(const PLFunc& f) const;
  const Carrier& target() const;
  std::string describe() const;
};

struct DeltaPreservationReport {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

/// Checks h(δ(prefix; tail)) = δ(h(prefix); h(tail)) on seeded random
/// eventually constant sequences, and h(f_{1/2^n}(f)) = f_{1/2^n}(h(f)) for
/// n = 1..4.
DeltaPreservationReport delta_preservation_check(const PLHom& h, std::size_t samples, std::uint64_t seed);

}  // namespace mvdelta
