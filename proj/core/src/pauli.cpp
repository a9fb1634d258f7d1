#include "qida/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qida {

namespace {

void check_qubit(int qubit, int n_qubits) {
  if (qubit < 0 || qubit >= n_qubits)
    throw std::out_of_range("pauli: qubit index " + std::to_string(qubit) +
                            " out of range for " + std::to_string(n_qubits) + " qubits");
}

void check_n_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 64)
    throw std::invalid_argument("pauli: n_qubits must be in [1, 64], got " +
                                std::to_string(n_qubits));
}

constexpr Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// product[a][b] = {resulting letter, exponent k of the phase i^k}
struct LetterProduct {
  std::uint8_t letter;
  std::uint8_t phase;
};
constexpr LetterProduct kLetterTable[4][4] = {
    // I            X           Y           Z
    {{0, 0}, {1, 0}, {2, 0}, {3, 0}},  // I*
    {{1, 0}, {0, 0}, {3, 1}, {2, 3}},  // X*  (XY = iZ, XZ = -iY)
    {{2, 0}, {3, 3}, {0, 0}, {1, 1}},  // Y*  (YX = -iZ, YZ = iX)
    {{3, 0}, {2, 1}, {1, 3}, {0, 0}},  // Z*  (ZX = iY, ZY = -iX)
};

}  // namespace

PauliString::PauliString(int n_qubits) : n_qubits_(n_qubits) { check_n_qubits(n_qubits); }

PauliString::PauliString(int n_qubits,
                         std::initializer_list<std::pair<int, PauliLetter>> letters)
    : PauliString(n_qubits) {
  for (const auto& [qubit, letter] : letters) set_letter(qubit, letter);
}

PauliString PauliString::single(int n_qubits, int qubit, PauliLetter letter) {
  PauliString p(n_qubits);
  p.set_letter(qubit, letter);
  return p;
}

PauliLetter PauliString::letter(int qubit) const {
  check_qubit(qubit, n_qubits_);
  const int x = static_cast<int>((x_mask_ >> qubit) & 1u);
  const int z = static_cast<int>((z_mask_ >> qubit) & 1u);
  static constexpr PauliLetter kFromBits[2][2] = {{PauliLetter::I, PauliLetter::Z},
                                                  {PauliLetter::X, PauliLetter::Y}};
  return kFromBits[x][z];
}

void PauliString::set_letter(int qubit, PauliLetter letter) {
  check_qubit(qubit, n_qubits_);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  x_mask_ &= ~bit;
  z_mask_ &= ~bit;
  switch (letter) {
    case PauliLetter::I: break;
    case PauliLetter::X: x_mask_ |= bit; break;
    case PauliLetter::Y: x_mask_ |= bit; z_mask_ |= bit; break;
    case PauliLetter::Z: z_mask_ |= bit; break;
  }
}

int PauliString::weight() const { return std::popcount(x_mask_ | z_mask_); }

std::string PauliString::str() const {
  if (is_identity()) return "I";
  std::ostringstream out;
  bool first = true;
  for (int q = 0; q < n_qubits_; ++q) {
    const PauliLetter l = letter(q);
    if (l == PauliLetter::I) continue;
    if (!first) out << ' ';
    out << "IXYZ"[static_cast<int>(l)] << q;
    first = false;
  }
  return out.str();
}

std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("pauli: multiplying strings with mismatched qubit counts");
  PauliString out(a.n_qubits());
  int phase = 0;
  std::uint64_t active = a.x_mask() | a.z_mask() | b.x_mask() | b.z_mask();
  while (active) {
    const int q = std::countr_zero(active);
    active &= active - 1;
    const auto la = static_cast<std::uint8_t>(a.letter(q));
    const auto lb = static_cast<std::uint8_t>(b.letter(q));
    const LetterProduct p = kLetterTable[la][lb];
    phase = (phase + p.phase) & 3;
    out.set_letter(q, static_cast<PauliLetter>(p.letter));
  }
  return {kPhases[phase], out};
}

PauliSum PauliSum::identity(int n_qubits, Complex coefficient) {
  return single(coefficient, PauliString(n_qubits));
}

PauliSum PauliSum::single(Complex coefficient, const PauliString& op) {
  PauliSum sum(op.n_qubits());
  if (std::abs(coefficient) >= kPruneThreshold)
    sum.terms_.push_back({coefficient, op});
  return sum;
}

PauliSum PauliSum::from_terms(int n_qubits, std::vector<PauliTerm> terms) {
  PauliAccumulator acc(n_qubits);
  for (const auto& t : terms) {
    if (t.op.n_qubits() != n_qubits)
      throw std::invalid_argument("pauli: term qubit count mismatch");
    acc.add(t.coefficient, t.op);
  }
  return acc.take();
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_)
    throw std::invalid_argument("pauli: adding sums with mismatched qubit counts");
  PauliAccumulator acc(n_qubits_);
  acc.add(*this);
  acc.add(other);
  *this = acc.take();
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  PauliAccumulator acc(n_qubits_);
  if (other.n_qubits_ != n_qubits_)
    throw std::invalid_argument("pauli: subtracting sums with mismatched qubit counts");
  acc.add(*this);
  acc.add(other, -1.0);
  *this = acc.take();
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scalar) {
  if (std::abs(scalar) < kPruneThreshold) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

PauliSum PauliSum::operator*(const PauliSum& other) const {
  if (other.n_qubits_ != n_qubits_)
    throw std::invalid_argument("pauli: multiplying sums with mismatched qubit counts");
  PauliAccumulator acc(n_qubits_);
  for (const auto& ta : terms_)
    for (const auto& tb : other.terms_) {
      auto [phase, op] = multiply(ta.op, tb.op);
      acc.add(ta.coefficient * tb.coefficient * phase, op);
    }
  return acc.take();
}

double PauliSum::max_abs_imag() const {
  double worst = 0.0;
  for (const auto& t : terms_) worst = std::max(worst, std::abs(t.coefficient.imag()));
  return worst;
}

bool PauliSum::is_hermitian(double tol) const { return max_abs_imag() <= tol; }

PauliSum PauliSum::simplified(double threshold) const {
  PauliAccumulator acc(n_qubits_);
  acc.add(*this);
  return acc.take(threshold);
}

std::string PauliSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    out << "(" << t.coefficient.real();
    if (t.coefficient.imag() != 0.0) out << (t.coefficient.imag() < 0 ? "" : "+")
                                         << t.coefficient.imag() << "i";
    out << ")*" << t.op.str();
    first = false;
  }
  return out.str();
}

std::size_t PauliAccumulator::MaskHash::operator()(
    const std::pair<std::uint64_t, std::uint64_t>& key) const {
  // splitmix-style combine of the two masks
  std::uint64_t h = key.first * 0x9e3779b97f4a7c15ull;
  h ^= key.second + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

void PauliAccumulator::add(Complex coefficient, const PauliString& op) {
  if (op.n_qubits() != n_qubits_)
    throw std::invalid_argument("pauli: accumulating string with mismatched qubit count");
  coeffs_[{op.x_mask(), op.z_mask()}] += coefficient;
}

void PauliAccumulator::add(const PauliSum& sum, Complex scale) {
  if (sum.n_qubits() != n_qubits_)
    throw std::invalid_argument("pauli: accumulating sum with mismatched qubit count");
  for (const auto& t : sum.terms()) coeffs_[{t.op.x_mask(), t.op.z_mask()}] += scale * t.coefficient;
}

PauliSum PauliAccumulator::take(double threshold) const {
  PauliSum sum(n_qubits_);
  sum.terms_.reserve(coeffs_.size());
  for (const auto& [masks, c] : coeffs_) {
    if (std::abs(c) < threshold) continue;
    PauliString op(n_qubits_);
    for (int q = 0; q < n_qubits_; ++q) {
      const bool x = (masks.first >> q) & 1u;
      const bool z = (masks.second >> q) & 1u;
      if (x && z) op.set_letter(q, PauliLetter::Y);
      else if (x) op.set_letter(q, PauliLetter::X);
      else if (z) op.set_letter(q, PauliLetter::Z);
    }
    sum.terms_.push_back({c, op});
  }
  std::sort(sum.terms_.begin(), sum.terms_.end(), [](const PauliTerm& a, const PauliTerm& b) {
    if (a.op.x_mask() != b.op.x_mask()) return a.op.x_mask() < b.op.x_mask();
    return a.op.z_mask() < b.op.z_mask();
  });
  return sum;
}

}  // namespace qida
