#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccf/region.hpp"

namespace ccf {

enum class AlgorithmId {
    NearestInteger,
    NearestEven,
    NearestOdd,
    Diamond,
    Disk,
    ShiftedHurwitz,
};

inline constexpr AlgorithmId kAllAlgorithms[] = {
    AlgorithmId::NearestInteger, AlgorithmId::NearestEven,   AlgorithmId::NearestOdd,
    AlgorithmId::Diamond,        AlgorithmId::Disk,          AlgorithmId::ShiftedHurwitz,
};

std::string algorithm_name(AlgorithmId id);
std::optional<AlgorithmId> parse_algorithm(const std::string& name);

struct InvalidDigit : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IterationBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Digit choice: a Gaussian integer with |z - a| <= 1. Total on all of C
// (0 maps to 0 where the alphabet admits it; nearest-odd returns 1 there).
// Boundary ties are broken by fixed measure-zero conventions.
GaussianInt choose(AlgorithmId alg, std::complex<double> z);

bool digit_admissible(AlgorithmId alg, const GaussianInt& a);

// Closure of {z - choose(z)}: unit square, diamond, closed disk, or the
// shifted square with two circular edges (stored as its ten-piece union).
const Region& fundamental_set(AlgorithmId alg);

// The published finite partition of K (12/8/12/12/5/10 pieces).
const std::vector<Region>& partition(AlgorithmId alg);

// Closure of {w : choose(w) = a}. Throws InvalidDigit for inadmissible a.
Region choice_region(AlgorithmId alg, const GaussianInt& a);

// Cell of the Gauss map: <a> = K intersect S(choice_region(a)); may be empty.
Region cell(AlgorithmId alg, const GaussianInt& a);

// Step map of the diamond construction: subtracts a unit by angular sector,
// fixing 0.
std::complex<double> t_map(std::complex<double> z);

// Diamond digit: z minus the first t-iterate inside the closed diamond.
// The iteration is accelerated by whole-run jumps inside a sector; the
// reference single-step version is kept for equivalence tests.
GaussianInt diamond_choose(std::complex<double> z);
GaussianInt diamond_choose_single_step(std::complex<double> z, std::size_t budget = 1u << 22);

// Disk-algorithm tables: V_0..V_8 and the sector classifier assigning each
// even digit a the index j with a in E_j.
const Region& disk_v_region(int j);
int disk_sector(const GaussianInt& a);

// Piece indices J with S(<a>) = a + union of K_j for the diamond algorithm,
// by angular sector of a (1-based indices into partition(Diamond)).
std::vector<int> diamond_sector_pieces(const GaussianInt& a);

}  // namespace ccf
