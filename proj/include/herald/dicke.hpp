// Copyright 2026 The heraldsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HERALD_DICKE_HPP
#define HERALD_DICKE_HPP

#include <compare>
#include <complex>
#include <map>
#include <vector>

#include "herald/errors.hpp"

namespace herald {

using Amplitude = std::complex<double>;

/// Tolerance for direct arithmetic identities.
inline constexpr double kTightTol = 1e-12;
/// Tolerance for multi-step comparisons against the brute-force oracle
/// (double-precision accumulation over up to 3^8 terms).
inline constexpr double kOracleTol = 1e-10;

/// n! as a double; exact integer arithmetic for n <= 20, exp(lgamma) above.
double factorial(int n);
/// log(n!).
double log_factorial(int n);
/// Binomial coefficient C(n, k) as a double.
double binomial(int n, int k);

/// Identifies the Dicke state of n_atoms three-level atoms with n_h atoms
/// in level |0> and n_atoms - n_h in level |1>.
struct DickeIndex {
  int n_atoms = 0;
  int n_h = 0;
};

/// A linear combination alpha * s0^dag + beta * s1^dag of the collective
/// raising operators s_mu^dag = sum_i |mu>_i<g|.
struct CollectiveOp {
  Amplitude alpha{};
  Amplitude beta{};
};

/// Occupation numbers of the two excited levels; the ground-level
/// occupation n_g = n_atoms - n0 - n1 is implicit.
struct Occupation {
  int n0 = 0;
  int n1 = 0;
  auto operator<=>(const Occupation&) const = default;
};

/// A pure state of the fully symmetric subspace of n_atoms three-level
/// atoms, stored as a sparse amplitude map over the bosonic occupation
/// basis (n0, n1). Basis vectors are the unit-normalized symmetric states.
/// The representation is exact and has dimension (N+1)(N+2)/2 instead of
/// 3^N. States with support only on n0 + n1 = n_atoms live in the Dicke
/// sector.
///
/// Instances are immutable after construction; all operations below are
/// pure functions and safe to call concurrently.
class SymmetricState {
 public:
  /// Validates every key (0 <= n0, n1, n0 + n1 <= n_atoms) and that all
  /// amplitudes are finite. When `normalized` is set, the squared norm
  /// must be 1 within 1e-12. Zero amplitudes are dropped.
  SymmetricState(int n_atoms, std::map<Occupation, Amplitude> amplitudes,
                 bool normalized = false);

  int n_atoms() const { return n_atoms_; }
  const std::map<Occupation, Amplitude>& amplitudes() const { return amps_; }
  bool is_normalized() const { return normalized_; }

  /// Amplitude of a basis vector (zero when absent).
  Amplitude amplitude(Occupation occ) const;

  double norm_sq() const;
  double norm() const;

  /// True when every nonzero amplitude sits on n0 + n1 = n_atoms.
  bool dicke_sector() const;

 private:
  int n_atoms_;
  std::map<Occupation, Amplitude> amps_;
  bool normalized_;
};

/// Dense tensor-product state over {g,0,1}^n_atoms, the brute-force oracle
/// for all symmetric-subspace algebra. Index digits are base 3, atom 0 in
/// the most significant position, with g=0, level |0>=1, level |1>=2.
class FullState {
 public:
  static constexpr int kMaxAtoms = 8;

  /// Zero state; throws SizeLimitError for n_atoms > kMaxAtoms.
  explicit FullState(int n_atoms);

  int n_atoms() const { return n_atoms_; }
  size_t dimension() const { return amps_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  std::vector<Amplitude>& amplitudes() { return amps_; }

  /// Index of a configuration string such as "g01" (atom 0 first).
  size_t index_of(const std::string& configuration) const;
  Amplitude amplitude(const std::string& configuration) const;

  double norm_sq() const;

 private:
  int n_atoms_;
  std::vector<Amplitude> amps_;
};

/// c(n_h): the coefficient making
/// c(n_h) (s0^dag)^{n_h} (s1^dag)^{N-n_h} |G> unit norm.
/// Closed form 1/sqrt(n_h! (N-n_h)! N!), validated against the FullState
/// oracle in the test suite.
double dicke_norm_coeff(DickeIndex idx);

/// |G>: every atom in the ancillary ground level.
SymmetricState ground_state(int n_atoms);

/// Unnormalized image of `state` under alpha s0^dag + beta s1^dag.
///
/// Symmetric-basis matrix elements (oracle-validated):
///   s0^dag: (n0, n1) -> sqrt((n0+1) n_g) (n0+1, n1)
///   s1^dag: (n0, n1) -> sqrt((n1+1) n_g) (n0, n1+1)
/// Throws RaisingOnFullError when the state has no ground-level
/// population anywhere (the image would be the zero vector).
SymmetricState apply_collective(const SymmetricState& state,
                                const CollectiveOp& op);

/// Scales to unit norm; throws DegenerateStateError on the zero vector.
SymmetricState normalize(const SymmetricState& state);

/// |N, n_h>: the normalized Dicke state (a single occupation basis vector).
SymmetricState dicke_state(DickeIndex idx);

/// <a|b> for states on the same atom count.
Amplitude inner_product(const SymmetricState& a, const SymmetricState& b);

/// |<a|b>|^2 for normalized states. Throws std::invalid_argument on
/// mismatched atom counts or unnormalized inputs.
double fidelity(const SymmetricState& a, const SymmetricState& b);

/// (|N,0> + |0,N>)/sqrt(2) in occupation keys (N,0) and (0,N); n_atoms >= 2.
SymmetricState ghz_state(int n_atoms);

/// Expands each symmetric basis vector into the equal superposition of its
/// distinct atom permutations (coefficient 1/sqrt(multinomial)).
FullState oracle_expand(const SymmetricState& state);

/// Applies the literal sum over atoms of the single-atom raising maps
/// |0><g| (weight alpha) and |1><g| (weight beta).
FullState oracle_apply(const FullState& full, const CollectiveOp& op);

}  // namespace herald

#endif  // HERALD_DICKE_HPP
