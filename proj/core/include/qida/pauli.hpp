#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qida {

using Complex = std::complex<double>;

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Tensor product of single-qubit Pauli operators, stored as X/Z bit masks
/// (a qubit with both bits set carries Y). Supports up to 64 qubits.
class PauliString {
 public:
  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::initializer_list<std::pair<int, PauliLetter>> letters);

  static PauliString single(int n_qubits, int qubit, PauliLetter letter);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_mask_; }
  std::uint64_t z_mask() const { return z_mask_; }

  PauliLetter letter(int qubit) const;
  void set_letter(int qubit, PauliLetter letter);

  bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0; }
  /// Number of non-identity letters.
  int weight() const;

  bool operator==(const PauliString& other) const = default;

  /// Human-readable form, e.g. "X0 Z2" ("I" for the identity string).
  std::string str() const;

 private:
  int n_qubits_;
  std::uint64_t x_mask_ = 0;
  std::uint64_t z_mask_ = 0;
};

/// P1 * P2 with the accumulated scalar phase (one of {1, i, -1, -i}).
std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b);

struct PauliTerm {
  Complex coefficient;
  PauliString op;
};

/// Weighted sum of Pauli strings, kept in canonical form: like terms merged,
/// coefficients below the pruning threshold dropped, terms sorted by mask.
class PauliSum {
 public:
  static constexpr double kPruneThreshold = 1e-14;

  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}
  static PauliSum zero(int n_qubits) { return PauliSum(n_qubits); }
  static PauliSum identity(int n_qubits, Complex coefficient = 1.0);
  static PauliSum single(Complex coefficient, const PauliString& op);
  static PauliSum from_terms(int n_qubits, std::vector<PauliTerm> terms);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scalar);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(Complex scalar, PauliSum a) { return a *= scalar; }
  friend PauliSum operator*(PauliSum a, Complex scalar) { return a *= scalar; }
  PauliSum operator*(const PauliSum& other) const;

  /// Largest |Im c| over all coefficients; 0 for the zero operator.
  double max_abs_imag() const;
  /// True when all coefficients are real within `tol` (Pauli strings are
  /// Hermitian, so this decides Hermiticity of the sum).
  bool is_hermitian(double tol = 1e-12) const;

  /// Drops sub-threshold coefficients and re-merges. Sums built through the
  /// public interface are already canonical; this exists for custom builds.
  PauliSum simplified(double threshold = kPruneThreshold) const;

  std::string str() const;

 private:
  friend class PauliAccumulator;
  int n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Hash-map accumulator for building large sums without repeated merging.
class PauliAccumulator {
 public:
  explicit PauliAccumulator(int n_qubits) : n_qubits_(n_qubits) {}

  void add(Complex coefficient, const PauliString& op);
  void add(const PauliSum& sum, Complex scale = 1.0);
  /// Merged, pruned, canonically sorted result.
  PauliSum take(double threshold = PauliSum::kPruneThreshold) const;

  int n_qubits() const { return n_qubits_; }

 private:
  struct MaskHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& key) const;
  };
  int n_qubits_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Complex, MaskHash> coeffs_;
};

}  // namespace qida
