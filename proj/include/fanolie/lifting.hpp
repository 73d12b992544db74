#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanolie/compfactor.hpp"
#include "fanolie/fano.hpp"
#include "fanolie/octonion.hpp"
#include "fanolie/radon.hpp"

namespace fanolie {

// delta*(g, D) = eps_PQ eps_{gP gQ}; throws std::logic_error if the value depends on the pair.
int delta_star(const Collineation& g, Line d, const CompositionFactor& eps);
LineSigns delta_star_fn(const Collineation& g, const CompositionFactor& eps);

struct DeltaStarReport {
  int elements = 0;
  int det_failures = 0;         // product over all lines
  int pencil_failures = 0;      // product over the three lines through a point
  int quadrilateral_failures = 0;
  int opposite_side_failures = 0;
  int multiplier_pairs = 0;
  int multiplier_failures = 0;  // delta*(g2 g1, D) = delta*(g2, g1 D) delta*(g1, D)
  bool ok() const {
    return det_failures == 0 && pencil_failures == 0 && quadrilateral_failures == 0 && opposite_side_failures == 0 &&
           multiplier_failures == 0;
  }
};

// Checks over all 168 elements; the multiplier identity over every ordered pair when `all_pairs`,
// otherwise over the first `sample_pairs` pairs of a fixed pseudo-random sequence.
DeltaStarReport delta_star_properties(const CompositionFactor& eps, bool all_pairs = false, int sample_pairs = 2000);

// R-star member -> the 21 collineations with that delta*.
std::map<LineSigns, std::vector<Collineation>> classify_delta_star(const CompositionFactor& eps);

// g^ e_P = s(P) e_{gP}, g^ 1 = 1.
class AugAut {
 public:
  AugAut(Collineation base, PointSigns signs) : base_(base), signs_(signs) {}
  static AugAut identity() { return {Collineation::identity(), PointSigns()}; }
  // "1 2 7 4 -6 5 -3": signed images of e_P1..e_P7.
  static AugAut parse(const std::string& text);

  const Collineation& base() const { return base_; }
  PointSigns signs() const { return signs_; }
  std::string str() const;

  // (g2 * g1) = g2 after g1.
  friend AugAut operator*(const AugAut& g2, const AugAut& g1);
  AugAut inverse() const;
  int order() const;

  // Signed basis image of basis index k (0 is the unit).
  SignedBasis image(int k) const;
  // 8x8 matrix with M[g(k)][k] = sign.
  std::array<std::array<int, 8>, 8> matrix() const;

  friend auto operator<=>(const AugAut&, const AugAut&) = default;

 private:
  Collineation base_;
  PointSigns signs_;
};

// delta*(g, D) = s(P) s(Q) s(R) on every line.
bool is_lift(const AugAut& g, const CompositionFactor& eps);
// g^(e_a e_b) = g^(e_a) g^(e_b) on all 64 basis pairs, computed from the multiplication table.
bool is_algebra_automorphism(const AugAut& g, const MultiplicationTable& t);

// The eight sign functions in the multiplicative Radon preimage of delta*(g, .).
std::vector<AugAut> lifts(const Collineation& g, const CompositionFactor& eps);
// Identity base; +1 on D, -1 off D.
AugAut t_map(Line d);

struct AugGroup {
  std::vector<AugAut> elements;  // sorted
  bool from_cache = false;
};

// Identifies the coordinate model in cache files.
std::string coordinate_model_tag();
std::filesystem::path aug_group_cache_file(const std::filesystem::path& dir, const CompositionFactor& eps);
// All lifts of all 168 collineations. With a cache directory the group is read from, or written to,
// a versioned JSON file; a stale or corrupt file is recomputed.
AugGroup enumerate_aug_group(const CompositionFactor& eps, const std::optional<std::filesystem::path>& cache_dir = {});

// Element orders over the fiber of g, sorted.
std::vector<int> fiber_order_profile(const Collineation& g, const CompositionFactor& eps);

// Cyclic order of a line read off any order-7 collineation: (P, t P, t^3 P) for type (0,1,3),
// (P, t^2 P, t^3 P) for type (0,2,3).
std::array<Point, 3> line_cycle(const Collineation& t, Line d);
// tau' induces tau's cyclic order on every line.
bool order7_same_orientation(const Collineation& tau_prime, const Collineation& tau = canonical_tau());

// The eight delta* colorings, one block per R-star member.
std::string delta_star_diagram_text(const CompositionFactor& eps);
std::string delta_star_diagram_dot(const CompositionFactor& eps);

}  // namespace fanolie
